#include "gradalg/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gradalg {

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t r = a.size();
    std::size_t inner = r ? a[0].size() : 0;
    std::size_t c = b.empty() ? 0 : b[0].size();
    if (inner != b.size()) throw std::invalid_argument("mat_mul: dimension mismatch");
    IntMat out(r, std::vector<Int>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

// Bareiss fraction-free elimination; exact over Z.
Int mat_det(const IntMat& in) {
    IntMat a = in;
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("mat_det: not square");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> out;
    std::size_t n = std::min(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t i = 0; i < n; ++i) out.push_back(d[i][i]);
    return out;
}

SmithForm smith_normal_form(const IntMat& m) {
    std::size_t r = m.size();
    std::size_t c = r ? m[0].size() : 0;
    for (const auto& row : m)
        if (row.size() != c) throw std::invalid_argument("smith_normal_form: ragged matrix");

    SmithForm s{m, identity_matrix(r), identity_matrix(c)};
    IntMat& d = s.d;
    IntMat& u = s.u;
    IntMat& v = s.v;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(d[i], d[j]);
        std::swap(u[i], u[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : d) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    };
    auto row_addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t k = 0; k < c; ++k) d[dst][k] += q * d[src][k];
        for (std::size_t k = 0; k < r; ++k) u[dst][k] += q * u[src][k];
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < r; ++i) d[i][dst] += q * d[i][src];
        for (std::size_t i = 0; i < c; ++i) v[i][dst] += q * v[i][src];
    };
    auto row_negate = [&](std::size_t i) {
        for (auto& x : d[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    };

    std::size_t t = 0;
    while (t < r && t < c) {
        // Minimal nonzero pivot in the trailing submatrix.
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (d[i][j] != 0) {
                    Int a = abs(d[i][j]);
                    if (!found || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d[i][t] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
                row_addmul(i, t, -q);
                if (d[i][t] != 0) {
                    row_swap(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d[t][j] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
                col_addmul(j, t, -q);
                if (d[t][j] != 0) {
                    col_swap(t, j);
                    dirty = true;
                }
            }
        }
        if (d[t][t] < 0) row_negate(t);

        // The pivot must divide the rest of the submatrix for the chain to hold.
        bool redo = false;
        for (std::size_t i = t + 1; i < r && !redo; ++i)
            for (std::size_t j = t + 1; j < c; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    row_addmul(t, i, 1);
                    redo = true;
                    break;
                }
        if (redo) continue;
        ++t;
    }
    return s;
}

// ---------------------------------------------------------------------------
// AbelianGroup
// ---------------------------------------------------------------------------

AbelianGroup::AbelianGroup(std::vector<Int> cyclic_factors) {
    for (const auto& f : cyclic_factors)
        if (f < 1) throw std::invalid_argument("AbelianGroup: factors must be positive");
    std::size_t k = cyclic_factors.size();
    IntMat diag(k, std::vector<Int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) diag[i][i] = cyclic_factors[i];
    auto snf = smith_normal_form(diag);
    for (const auto& e : snf.diagonal())
        if (e > 1) factors_.push_back(e);
}

Int AbelianGroup::order() const {
    Int o = 1;
    for (const auto& f : factors_) o *= f;
    return o;
}

Int AbelianGroup::exponent() const { return factors_.empty() ? Int(1) : factors_.back(); }

std::size_t AbelianGroup::element_count() const {
    Int o = order();
    if (o > 1 << 20) throw std::domain_error("AbelianGroup: too large to enumerate");
    return static_cast<std::size_t>(o.get_ui());
}

AbelianElement zero_element(const AbelianGroup& h) {
    return AbelianElement{std::vector<Int>(h.rank(), 0)};
}

AbelianElement reduce_element(const AbelianGroup& h, const std::vector<Int>& raw) {
    if (raw.size() != h.rank()) throw std::invalid_argument("element: wrong coordinate count");
    AbelianElement a{raw};
    for (std::size_t i = 0; i < raw.size(); ++i) {
        mpz_fdiv_r(a.coords[i].get_mpz_t(), a.coords[i].get_mpz_t(),
                   h.invariant_factors()[i].get_mpz_t());
    }
    return a;
}

bool element_in_group(const AbelianGroup& h, const AbelianElement& a) {
    if (a.coords.size() != h.rank()) return false;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] < 0 || a.coords[i] >= h.invariant_factors()[i]) return false;
    return true;
}

AbelianElement add(const AbelianGroup& h, const AbelianElement& a, const AbelianElement& b) {
    std::vector<Int> raw(h.rank());
    for (std::size_t i = 0; i < h.rank(); ++i) raw[i] = a.coords[i] + b.coords[i];
    return reduce_element(h, raw);
}

AbelianElement negate(const AbelianGroup& h, const AbelianElement& a) {
    std::vector<Int> raw(h.rank());
    for (std::size_t i = 0; i < h.rank(); ++i) raw[i] = -a.coords[i];
    return reduce_element(h, raw);
}

AbelianElement scalar_mul(const AbelianGroup& h, const Int& k, const AbelianElement& a) {
    std::vector<Int> raw(h.rank());
    for (std::size_t i = 0; i < h.rank(); ++i) raw[i] = k * a.coords[i];
    return reduce_element(h, raw);
}

Int element_order(const AbelianGroup& h, const AbelianElement& a) {
    Int ord = 1;
    for (std::size_t i = 0; i < h.rank(); ++i) {
        Int g = gcd(a.coords[i], h.invariant_factors()[i]);
        Int o = h.invariant_factors()[i] / g;
        ord = lcm(ord, o);
    }
    return ord;
}

std::size_t element_index(const AbelianGroup& h, const AbelianElement& a) {
    if (!element_in_group(h, a)) throw std::invalid_argument("element_index: not reduced");
    Int idx = 0;
    for (std::size_t i = h.rank(); i-- > 0;) idx = idx * h.invariant_factors()[i] + a.coords[i];
    return static_cast<std::size_t>(idx.get_ui());
}

AbelianElement element_at(const AbelianGroup& h, std::size_t index) {
    if (index >= h.element_count()) throw std::out_of_range("element_at");
    AbelianElement a = zero_element(h);
    Int rem(static_cast<unsigned long>(index));
    for (std::size_t i = 0; i < h.rank(); ++i) {
        const Int& m = h.invariant_factors()[i];
        a.coords[i] = rem % m;
        rem /= m;
    }
    return a;
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

IntMatrixHom identity_hom(const AbelianGroup& h) {
    return IntMatrixHom{h, h, identity_matrix(h.rank())};
}

bool is_well_defined(const IntMatrixHom& f) {
    std::size_t tr = f.target.rank(), sr = f.source.rank();
    if (f.matrix.size() != tr) return false;
    for (const auto& row : f.matrix)
        if (row.size() != sr) return false;
    for (std::size_t i = 0; i < tr; ++i)
        for (std::size_t j = 0; j < sr; ++j) {
            Int prod = f.matrix[i][j] * f.source.invariant_factors()[j];
            if (prod % f.target.invariant_factors()[i] != 0) return false;
        }
    return true;
}

AbelianElement apply(const IntMatrixHom& f, const AbelianElement& a) {
    if (a.coords.size() != f.source.rank())
        throw std::invalid_argument("apply: element not in source group");
    std::vector<Int> raw(f.target.rank(), 0);
    for (std::size_t i = 0; i < f.target.rank(); ++i)
        for (std::size_t j = 0; j < f.source.rank(); ++j) raw[i] += f.matrix[i][j] * a.coords[j];
    return reduce_element(f.target, raw);
}

IntMatrixHom compose(const IntMatrixHom& f, const IntMatrixHom& g) {
    if (!(g.target == f.source)) throw std::invalid_argument("compose: domain mismatch");
    IntMatrixHom out{g.source, f.target, mat_mul(f.matrix, g.matrix)};
    for (std::size_t i = 0; i < out.matrix.size(); ++i)
        for (auto& x : out.matrix[i])
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), f.target.invariant_factors()[i].get_mpz_t());
    return out;
}

bool hom_equal(const IntMatrixHom& f, const IntMatrixHom& g) {
    if (!(f.source == g.source) || !(f.target == g.target)) return false;
    for (std::size_t i = 0; i < f.target.rank(); ++i)
        for (std::size_t j = 0; j < f.source.rank(); ++j) {
            Int diff = f.matrix[i][j] - g.matrix[i][j];
            if (diff % f.target.invariant_factors()[i] != 0) return false;
        }
    return true;
}

bool is_automorphism(const IntMatrixHom& f) {
    if (!(f.source == f.target)) throw std::invalid_argument("is_automorphism: not an endomorphism");
    if (!is_well_defined(f)) throw std::invalid_argument("is_automorphism: matrix is not well-defined");
    std::size_t k = f.source.rank();
    if (k == 0) return true;
    // Surjective (hence bijective) iff [M | diag(m)] has cokernel 0.
    IntMat stacked(k, std::vector<Int>(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) stacked[i][j] = f.matrix[i][j];
        stacked[i][k + i] = f.source.invariant_factors()[i];
    }
    auto diag = smith_normal_form(stacked).diagonal();
    for (const auto& e : diag)
        if (e != 1) return false;
    return true;
}

AbelianGroup quotient(const AbelianGroup& h, const std::vector<AbelianElement>& gens) {
    for (const auto& g : gens)
        if (!element_in_group(h, g))
            throw std::invalid_argument("quotient: generator outside the group");
    std::size_t k = h.rank();
    IntMat rel(k, std::vector<Int>(k + gens.size(), 0));
    for (std::size_t i = 0; i < k; ++i) rel[i][i] = h.invariant_factors()[i];
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < k; ++i) rel[i][k + j] = gens[j].coords[i];
    auto diag = smith_normal_form(rel).diagonal();
    std::vector<Int> factors;
    for (const auto& e : diag)
        if (e > 1) factors.push_back(e);
    return AbelianGroup(factors);
}

bool is_square_type(const AbelianGroup& h) {
    const auto& f = h.invariant_factors();
    if (f.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < f.size(); i += 2)
        if (f[i] != f[i + 1]) return false;
    return true;
}

namespace {
void chains_rec(const Int& remaining, const Int& max_factor, std::vector<Int>& acc,
                std::vector<AbelianGroup>& out) {
    if (remaining == 1) {
        std::vector<Int> asc(acc.rbegin(), acc.rend());
        out.emplace_back(asc);
        return;
    }
    for (Int d = 2; d <= remaining; ++d) {
        if (remaining % d != 0) continue;
        if (max_factor % d != 0) continue;
        acc.push_back(d);
        chains_rec(remaining / d, d, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(const Int& n) {
    if (n < 1) throw std::invalid_argument("abelian_groups_of_order: order must be positive");
    std::vector<AbelianGroup> out;
    if (n == 1) {
        out.emplace_back();
        return out;
    }
    std::vector<Int> acc;
    chains_rec(n, n, acc, out);
    return out;
}

// ---------------------------------------------------------------------------
// Linear solving mod N
// ---------------------------------------------------------------------------

namespace {

std::int64_t emod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// g = s*a + t*b
std::int64_t extgcd64(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
    if (b == 0) {
        s = (a < 0) ? -1 : 1;
        t = 0;
        return a < 0 ? -a : a;
    }
    std::int64_t s1, t1;
    std::int64_t g = extgcd64(b, a % b, s1, t1);
    s = t1;
    t = s1 - (a / b) * t1;
    return g;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t n) {
    std::int64_t s, t;
    std::int64_t g = extgcd64(emod(a, n), n, s, t);
    if (g != 1) throw std::logic_error("inv_mod: not invertible");
    return emod(s, n);
}

struct EchelonRow {
    std::size_t lead;
    ModRow data;  // width + 1 (augmented)
};

}  // namespace

std::optional<ModRow> solve_mod(const ModMat& a, const ModRow& b, std::int64_t n) {
    if (n < 1 || n > (1LL << 30)) throw std::invalid_argument("solve_mod: bad modulus");
    std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("solve_mod: rhs size mismatch");
    std::size_t w = rows ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != w) throw std::invalid_argument("solve_mod: ragged matrix");
    if (n == 1) return ModRow(w, 0);

    std::vector<EchelonRow> ech;  // sorted by lead column, one pivot per column
    bool inconsistent = false;

    // Canonicalize a freshly placed pivot so that its leading entry divides n,
    // then queue its annihilator row; returns rows still to insert.
    std::vector<ModRow> pending;

    auto insert_row = [&](ModRow row) {
        pending.push_back(std::move(row));
        while (!pending.empty()) {
            ModRow r = std::move(pending.back());
            pending.pop_back();
            for (auto& x : r) x = emod(x, n);
            std::size_t lead = 0;
            while (lead < w && r[lead] == 0) ++lead;
            bool consumed = false;
            while (!consumed && lead < w) {
                auto it = std::lower_bound(
                    ech.begin(), ech.end(), lead,
                    [](const EchelonRow& e, std::size_t l) { return e.lead < l; });
                if (it == ech.end() || it->lead != lead) {
                    // New pivot: normalize leading entry to gcd(entry, n) by a unit.
                    std::int64_t v = r[lead];
                    std::int64_t d = gcd64(v, n);
                    if (d != v) {
                        std::int64_t vh = v / d, nh = n / d;
                        std::int64_t u = inv_mod(emod(vh, nh), nh);
                        std::int64_t tries = 0;
                        while (gcd64(u, n) != 1) {
                            u += nh;
                            if (++tries > d) throw std::logic_error("solve_mod: unit lift failed");
                        }
                        for (auto& x : r) x = emod(x * u % n, n);
                    }
                    if (n / d > 1) {
                        ModRow ann(r.size());
                        std::int64_t f = n / d;
                        for (std::size_t k = 0; k < r.size(); ++k) ann[k] = emod(r[k] * f % n, n);
                        pending.push_back(std::move(ann));
                    }
                    ech.insert(it, EchelonRow{lead, std::move(r)});
                    consumed = true;
                    break;
                }
                // Combine with the existing pivot via extended gcd.
                std::int64_t p = it->data[lead], c = r[lead];
                std::int64_t s, t;
                std::int64_t g = extgcd64(p, c, s, t);
                ModRow np(it->data.size()), nr(r.size());
                for (std::size_t k = 0; k < r.size(); ++k) {
                    np[k] = emod((s % n) * it->data[k] % n + (t % n) * r[k] % n, n);
                    nr[k] = emod((p / g) % n * r[k] % n - (c / g) % n * it->data[k] % n, n);
                }
                if (np[lead] != it->data[lead]) {
                    // Pivot changed: remove and reinsert both rows.
                    ech.erase(it);
                    pending.push_back(std::move(np));
                    pending.push_back(std::move(nr));
                    consumed = true;
                    break;
                }
                r = std::move(nr);
                while (lead < w && r[lead] == 0) ++lead;
            }
            if (!consumed && r[w] != 0) inconsistent = true;
        }
    };

    for (std::size_t i = 0; i < rows; ++i) {
        ModRow aug = a[i];
        aug.push_back(b[i]);
        insert_row(std::move(aug));
        if (inconsistent) return std::nullopt;
    }

    // Back-substitution, rightmost pivot first. Pivots divide n by construction.
    ModRow x(w, 0);
    for (auto it = ech.rbegin(); it != ech.rend(); ++it) {
        std::size_t j = it->lead;
        std::int64_t acc = it->data[w];
        for (std::size_t k = j + 1; k < w; ++k) acc = emod(acc - it->data[k] * x[k] % n, n);
        std::int64_t d = it->data[j];
        if (acc % d != 0) return std::nullopt;
        x[j] = emod(acc / d, n / d);
    }
    // Exact verification guards against any elimination subtlety.
    for (std::size_t i = 0; i < rows; ++i) {
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < w; ++k) acc = emod(acc + a[i][k] % n * x[k] % n, n);
        if (acc != emod(b[i], n)) return std::nullopt;
    }
    return x;
}

}  // namespace gradalg
