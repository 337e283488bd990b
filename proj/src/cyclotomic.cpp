#include "gradalg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gradalg {

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using IPoly = std::vector<Int>;  // ascending coefficients

// Quotient of a by monic b, exact over Z.
IPoly ipoly_div_monic(IPoly a, const IPoly& b) {
    if (b.empty() || b.back() != 1) throw std::logic_error("ipoly_div_monic: divisor not monic");
    if (a.size() < b.size()) {
        if (std::any_of(a.begin(), a.end(), [](const Int& c) { return c != 0; }))
            throw std::logic_error("ipoly_div_monic: not divisible");
        return {};
    }
    IPoly q(a.size() - b.size() + 1, 0);
    for (std::size_t qi = q.size(); qi-- > 0;) {
        Int c = a[qi + b.size() - 1];
        q[qi] = c;
        if (c == 0) continue;
        for (std::size_t k = 0; k < b.size(); ++k) a[qi + k] -= c * b[k];
    }
    for (const auto& c : a)
        if (c != 0) throw std::logic_error("ipoly_div_monic: nonzero remainder");
    return q;
}

std::map<long, IPoly>& phi_cache() {
    static std::map<long, IPoly> cache;
    return cache;
}
std::mutex phi_mutex;

IPoly compute_cyclotomic(long n) {
    IPoly num(n + 1, 0);  // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = ipoly_div_monic(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    {
        std::lock_guard<std::mutex> lock(phi_mutex);
        auto it = phi_cache().find(n);
        if (it != phi_cache().end()) return it->second;
    }
    // Computed outside the lock; recursion fills proper divisors first.
    IPoly value = (n == 1) ? IPoly{-1, 1} : compute_cyclotomic(n);
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_cache().emplace(n, std::move(value)).first->second;
}

namespace {

// Reduce a rational polynomial modulo the (monic) n-th cyclotomic polynomial.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> a, long n) {
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t deg = phi.size() - 1;
    while (a.size() > deg) {
        Rational c = a.back();
        a.pop_back();
        if (c == 0) continue;
        std::size_t base = a.size() - deg;
        for (std::size_t k = 0; k < deg; ++k) a[base + k] -= c * Rational(phi[k]);
    }
    a.resize(deg, Rational(0));
    for (auto& x : a) x.canonicalize();
    return a;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(const Rational& r, long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("CyclotomicNumber: conductor must be positive");
    coeffs_.assign(static_cast<std::size_t>(euler_phi(n)), Rational(0));
    coeffs_[0] = r;
    coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(long conductor, std::vector<Rational> reduced_coeffs)
    : n_(conductor), coeffs_(std::move(reduced_coeffs)) {
    if (n_ < 1) throw std::invalid_argument("CyclotomicNumber: conductor must be positive");
    if (coeffs_.size() != static_cast<std::size_t>(euler_phi(n_)))
        throw std::invalid_argument("CyclotomicNumber: coefficient count must equal phi(n)");
    for (auto& c : coeffs_) c.canonicalize();
}

bool CyclotomicNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CyclotomicNumber::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

CyclotomicNumber CyclotomicNumber::promoted(long n) const {
    if (n == n_) return *this;
    if (n < 1 || n % n_ != 0)
        throw std::invalid_argument("promoted: target conductor must be a multiple");
    // zeta_{n_} = zeta_n^(n/n_); evaluate the polynomial at that power.
    long step = n / n_;
    std::size_t deg = static_cast<std::size_t>(euler_phi(n));
    std::vector<Rational> acc(deg, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long e = static_cast<long>(i) * step % n;
        std::vector<Rational> mono(static_cast<std::size_t>(e) + 1, Rational(0));
        mono.back() = coeffs_[i];
        auto red = reduce_mod_phi(std::move(mono), n);
        for (std::size_t k = 0; k < deg; ++k) acc[k] += red[k];
    }
    return CyclotomicNumber(n, std::move(acc));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    auto c = coeffs_;
    for (auto& x : c) x = -x;
    return CyclotomicNumber(n_, std::move(c));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long n = std::lcm(a.n_, b.n_);
    auto x = a.promoted(n), y = b.promoted(n);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long n = std::lcm(a.n_, b.n_);
    auto x = a.promoted(n), y = b.promoted(n);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long n = std::lcm(a.n_, b.n_);
    auto x = a.promoted(n), y = b.promoted(n);
    std::vector<Rational> prod(2 * x.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
            if (y.coeffs_[j] == 0) continue;
            prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return CyclotomicNumber(n, reduce_mod_phi(std::move(prod), n));
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    long n = std::lcm(n_, o.n_);
    return promoted(n).coeffs_ == o.promoted(n).coeffs_;
}

namespace {

using QPoly = std::vector<Rational>;  // ascending, may carry leading zeros

std::size_t qdeg(const QPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d;  // number of meaningful coefficients; 0 for the zero polynomial
}

// a mod b with b nonzero; also returns the quotient.
void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    std::size_t db = qdeg(b);
    if (db == 0) throw std::domain_error("qpoly_divmod: division by zero polynomial");
    r = a;
    std::size_t da = qdeg(r);
    q.assign(da > db ? da - db + 1 : 1, Rational(0));
    while ((da = qdeg(r)) >= db && da > 0) {
        Rational c = r[da - 1] / b[db - 1];
        std::size_t shift = da - db;
        q[shift] += c;
        for (std::size_t k = 0; k < db; ++k) r[shift + k] -= c * b[k];
        r[da - 1] = 0;
    }
}

}  // namespace

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicNumber: division by zero");
    // Extended Euclid against the (irreducible) cyclotomic polynomial.
    const auto& phi_int = cyclotomic_polynomial(n_);
    QPoly r0(phi_int.size());
    for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
    QPoly r1 = coeffs_;
    QPoly s0{Rational(0)}, s1{Rational(1)};  // coefficients of *this in r_i
    while (qdeg(r1) > 0) {
        QPoly q, rem;
        qpoly_divmod(r0, r1, q, rem);
        // s_next = s0 - q*s1
        QPoly snext(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snext);
    }
    // r0 is a nonzero constant gcd: phi_n is irreducible and *this != 0.
    std::size_t d0 = qdeg(r0);
    if (d0 != 1) throw std::logic_error("CyclotomicNumber::inverse: gcd not constant");
    Rational c = r0[0];
    for (auto& x : s0) x /= c;
    return CyclotomicNumber(n_, reduce_mod_phi(std::move(s0), n_));
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*z" << n_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CyclotomicNumber zeta_power(long n, long j) {
    if (n < 1) throw std::invalid_argument("zeta_power: conductor must be positive");
    long e = ((j % n) + n) % n;
    std::vector<Rational> mono(static_cast<std::size_t>(e) + 1, Rational(0));
    mono.back() = 1;
    return CyclotomicNumber(n, reduce_mod_phi(std::move(mono), n));
}

// ---------------------------------------------------------------------------
// Exact linear algebra over Q(zeta)
// ---------------------------------------------------------------------------

namespace {

long common_conductor(const CycMat& a, const CycVec* b) {
    long n = 1;
    for (const auto& row : a)
        for (const auto& x : row) n = std::lcm(n, x.conductor());
    if (b)
        for (const auto& x : *b) n = std::lcm(n, x.conductor());
    return n;
}

struct Rref {
    CycMat m;  // reduced rows, augmented if rhs supplied
    std::vector<std::size_t> pivot_cols;
    std::size_t width = 0;
};

Rref rref(const CycMat& a, const CycVec* b) {
    long n = common_conductor(a, b);
    std::size_t rows = a.size();
    std::size_t w = rows ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != w) throw std::invalid_argument("linear system: ragged matrix");
    if (b && b->size() != rows) throw std::invalid_argument("linear system: rhs size mismatch");

    std::size_t aug = w + (b ? 1 : 0);
    CycMat m(rows, CycVec(aug, CyclotomicNumber::zero(n)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < w; ++j) m[i][j] = a[i][j].promoted(n);
        if (b) m[i][w] = (*b)[i].promoted(n);
    }

    Rref out;
    out.width = w;
    std::size_t r = 0;
    for (std::size_t col = 0; col < w && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        auto inv = m[r][col].inverse();
        for (std::size_t j = col; j < aug; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            auto f = m[i][col];
            for (std::size_t j = col; j < aug; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.m = std::move(m);
    return out;
}

}  // namespace

CycLinearSolution solve_linear_system(const CycMat& a, const CycVec& b) {
    auto rr = rref(a, &b);
    std::size_t w = rr.width;
    std::size_t rank = rr.pivot_cols.size();
    CycLinearSolution sol;
    sol.rank = rank;
    // Inconsistent iff some row is 0 = nonzero.
    for (std::size_t i = rank; i < rr.m.size(); ++i)
        if (!rr.m[i][w].is_zero()) {
            sol.consistent = false;
            return sol;
        }
    sol.consistent = true;
    long n = rr.m.empty() ? 1 : (rr.m[0].empty() ? 1 : rr.m[0][0].conductor());
    sol.particular.assign(w, CyclotomicNumber::zero(n));
    for (std::size_t r = 0; r < rank; ++r) sol.particular[rr.pivot_cols[r]] = rr.m[r][w];

    std::vector<bool> is_pivot(w, false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < w; ++free_col) {
        if (is_pivot[free_col]) continue;
        CycVec v(w, CyclotomicNumber::zero(n));
        v[free_col] = CyclotomicNumber::one(n);
        for (std::size_t r = 0; r < rank; ++r)
            v[rr.pivot_cols[r]] = -rr.m[r][free_col];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::vector<CycVec> nullspace(const CycMat& a) {
    std::size_t rows = a.size();
    CycVec zero(rows, CyclotomicNumber::zero(1));
    return solve_linear_system(a, zero).nullspace;
}

std::size_t matrix_rank(const CycMat& a) { return rref(a, nullptr).pivot_cols.size(); }

}  // namespace gradalg
