#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gradalg/abelian.hpp"

namespace gradalg {

using Rational = mpq_class;

long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree,
/// computed by dividing x^n - 1 by the proper-divisor cyclotomics.
/// Cached per conductor; the cache fill is idempotent and mutex-guarded.
const std::vector<Int>& cyclotomic_polynomial(long n);

/// Element of Q(zeta_n): a rational polynomial in zeta_n of degree < phi(n),
/// reduced modulo the n-th cyclotomic polynomial. All arithmetic is exact.
/// Mixed conductors promote to the lcm; zeta_m embeds as zeta_n^(n/m).
class CyclotomicNumber {
public:
    CyclotomicNumber() : CyclotomicNumber(Rational(0), 1) {}
    CyclotomicNumber(const Rational& r, long n);
    CyclotomicNumber(long conductor, std::vector<Rational> reduced_coeffs);

    static CyclotomicNumber zero(long n) { return CyclotomicNumber(Rational(0), n); }
    static CyclotomicNumber one(long n) { return CyclotomicNumber(Rational(1), n); }
    static CyclotomicNumber from_int(long v) { return CyclotomicNumber(Rational(v), 1); }

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;

    CyclotomicNumber promoted(long n) const;  // n must be a multiple of conductor()

    CyclotomicNumber operator-() const;
    CyclotomicNumber inverse() const;  // throws std::domain_error on zero

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    long n_ = 1;
    std::vector<Rational> coeffs_;  // size phi(n_)
};

CyclotomicNumber zeta_power(long n, long j);

using CycMat = std::vector<std::vector<CyclotomicNumber>>;
using CycVec = std::vector<CyclotomicNumber>;

/// Exact reduced row echelon solve of a*x = b over Q(zeta).
/// `particular` is valid when consistent; `nullspace` is a basis in the
/// standard free-column form, deterministic for fixed input order.
struct CycLinearSolution {
    bool consistent = false;
    CycVec particular;
    std::vector<CycVec> nullspace;
    std::size_t rank = 0;
};

CycLinearSolution solve_linear_system(const CycMat& a, const CycVec& b);
std::vector<CycVec> nullspace(const CycMat& a);
std::size_t matrix_rank(const CycMat& a);

}  // namespace gradalg
