#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gradalg {

using Int = mpz_class;
using IntMat = std::vector<std::vector<Int>>;

IntMat identity_matrix(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
Int mat_det(const IntMat& a);

/// Result of a Smith decomposition: u * m * v = d, with d diagonal,
/// d[i][i] >= 0 and d[i][i] | d[i+1][i+1]; u and v unimodular.
struct SmithForm {
    IntMat d;
    IntMat u;
    IntMat v;
    std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMat& m);

/// Finite abelian group in invariant-factor form m_1 | m_2 | ... | m_k,
/// each factor >= 2. The trivial group has an empty factor list.
/// Arbitrary cyclic-factor lists are normalized through SNF on construction,
/// so equal groups compare equal.
class AbelianGroup {
public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<Int> cyclic_factors);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    bool is_trivial() const { return factors_.empty(); }
    Int order() const;
    Int exponent() const;

    /// Number of elements as a size_t; throws if the order is too large to
    /// enumerate (enumeration is used only at desk scale).
    std::size_t element_count() const;

    bool operator==(const AbelianGroup&) const = default;

private:
    std::vector<Int> factors_;
};

/// Element of an AbelianGroup: coordinate i lives in [0, m_i).
struct AbelianElement {
    std::vector<Int> coords;
    bool operator==(const AbelianElement&) const = default;
};

AbelianElement zero_element(const AbelianGroup& h);
AbelianElement reduce_element(const AbelianGroup& h, const std::vector<Int>& raw);
bool element_in_group(const AbelianGroup& h, const AbelianElement& a);
AbelianElement add(const AbelianGroup& h, const AbelianElement& a, const AbelianElement& b);
AbelianElement negate(const AbelianGroup& h, const AbelianElement& a);
AbelianElement scalar_mul(const AbelianGroup& h, const Int& k, const AbelianElement& a);
Int element_order(const AbelianGroup& h, const AbelianElement& a);

/// Mixed-radix enumeration with coordinate 0 varying fastest:
/// index = c_0 + m_0*(c_1 + m_1*(c_2 + ...)).
std::size_t element_index(const AbelianGroup& h, const AbelianElement& a);
AbelianElement element_at(const AbelianGroup& h, std::size_t index);

/// Homomorphism between finite abelian groups as an integer matrix:
/// image coords are matrix * source coords, reduced modulo target factors.
/// Well-definedness: matrix[i][j] * m_j^src == 0 (mod m_i^tgt) for all i, j.
struct IntMatrixHom {
    AbelianGroup source;
    AbelianGroup target;
    IntMat matrix;  // target.rank() x source.rank()
};

IntMatrixHom identity_hom(const AbelianGroup& h);
bool is_well_defined(const IntMatrixHom& f);
AbelianElement apply(const IntMatrixHom& f, const AbelianElement& a);
IntMatrixHom compose(const IntMatrixHom& f, const IntMatrixHom& g);  // f after g
bool hom_equal(const IntMatrixHom& f, const IntMatrixHom& g);

/// True iff f is a bijective endomorphism of its (finite) source group.
/// Throws on non-endomorphisms or matrices violating well-definedness.
bool is_automorphism(const IntMatrixHom& f);

/// Invariant factors of H / <gens>, computed from the SNF of the relation
/// matrix [diag(m) | gens]. Generators must be reduced elements of H.
AbelianGroup quotient(const AbelianGroup& h, const std::vector<AbelianElement>& gens);

/// True iff the invariant factors pair up, i.e. H is isomorphic to A x A.
bool is_square_type(const AbelianGroup& h);

/// All abelian groups of order exactly n, as invariant-factor chains.
std::vector<AbelianGroup> abelian_groups_of_order(const Int& n);

// ---------------------------------------------------------------------------
// Linear algebra mod N (N >= 1, values in [0, N)). Entries use int64 since
// every modulus in this artifact is a small root order; group-theoretic
// matrices above use arbitrary precision.
// ---------------------------------------------------------------------------

using ModRow = std::vector<std::int64_t>;
using ModMat = std::vector<ModRow>;

/// Solves a*x == b (mod n). Returns one solution if the system is consistent.
/// Correct for composite n (Howell-style echelon with annihilator rows).
std::optional<ModRow> solve_mod(const ModMat& a, const ModRow& b, std::int64_t n);

}  // namespace gradalg
