#pragma once

#include <map>

#include "gradalg/cohomology.hpp"
#include "gradalg/cyclotomic.hpp"

namespace gradalg {

/// Sparse element over the basis: sorted (index, coefficient) pairs with
/// nonzero coefficients.
using SparseVec = std::vector<std::pair<int, CyclotomicNumber>>;

SparseVec sparse_normalize(SparseVec v);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const CyclotomicNumber& c);

/// Finite-dimensional structure-constant algebra over Q(zeta_n) graded by a
/// finite group: structure[i][j] is the expansion of b_i b_j, supported only
/// on basis elements of degree grading(i) * grading(j). Construction checks
/// associativity, grading compatibility and unitality on the full basis.
class GradedAlgebra {
public:
    GradedAlgebra(long conductor, FiniteGroup grading_group, std::vector<int> grading,
                  std::vector<std::vector<SparseVec>> structure, SparseVec identity);

    long conductor() const { return conductor_; }
    int dim() const { return static_cast<int>(grading_.size()); }
    const FiniteGroup& grading_group() const { return group_; }
    int degree(int basis_index) const { return grading_.at(basis_index); }
    const std::vector<int>& grading() const { return grading_; }
    const SparseVec& basis_product(int i, int j) const { return structure_[i][j]; }
    const SparseVec& identity_element() const { return identity_; }

    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;

private:
    long conductor_;
    FiniteGroup group_;
    std::vector<int> grading_;
    std::vector<std::vector<SparseVec>> structure_;
    SparseVec identity_;
};

/// Twisted group algebra F^alpha H graded by (the Cayley-table copy of) H:
/// u_{h1} u_{h2} = zeta_n^{table} u_{h1h2}.
GradedAlgebra twisted_group_algebra(const AbelianGroup& h, const Cocycle2H& alpha);

/// Exact basis of the center, via the nullspace of the commutator map.
std::vector<SparseVec> center_basis(const GradedAlgebra& a);

/// Semisimplicity via nondegeneracy of the trace form (characteristic zero).
bool radical_is_zero(const GradedAlgebra& a);

/// Semisimple with one-dimensional center.
bool is_central_simple(const GradedAlgebra& a);

/// Bahturin-Sehgal-Zaicev presentation: a subgroup H of G (element indices,
/// sorted, containing the identity), a normalized 2-cocycle on H tabulated
/// over subgroup positions with values in mu_n, and the grading tuple
/// (g_1, ..., g_s) with g_1 = e.
struct BSZPresentation {
    FiniteGroup G;
    std::vector<int> h_elements;
    long n = 1;
    std::vector<std::vector<std::int64_t>> alpha;
    std::vector<int> tuple;
};

void require_bsz(const BSZPresentation& p);

/// Transport a cocycle on the abstract type of the subgroup to the
/// position-indexed table used by BSZPresentation.
std::vector<std::vector<std::int64_t>> bsz_alpha_from_cocycle(const FiniteGroup& g,
                                                              const std::vector<int>& h_elements,
                                                              const Cocycle2H& alpha);

/// The algebra F^alpha H (x) M_s(F) with A_g spanned by u_h (x) e_{i,j} for
/// g = g_i^-1 h g_j. Basis index is h_pos * s^2 + i * s + j.
GradedAlgebra bsz_algebra(const BSZPresentation& p);

struct HomogeneousDims {
    std::vector<int> dims;  // one per group element
    bool faithful = false;
};
HomogeneousDims homogeneous_dims(const GradedAlgebra& a);

/// Two-sided ideal closure from every homogeneous basis seed must have full
/// rank. Graded ideals are homogeneously generated, so closure multiplies by
/// basis elements only.
bool is_graded_simple(const GradedAlgebra& a);

/// Block direct sum with the same grading group.
GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b);

}  // namespace gradalg
