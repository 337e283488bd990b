#pragma once

#include "gradalg/structure.hpp"

namespace gradalg {

/// Variable dictionary of the coefficient monoid: one y per element of Q
/// (permuted by left translation), one z per pair of non-identity elements
/// of Q (generic cocycle values; z_{e,q} = z_{q,e} = 1 are constants), and
/// the symbol-layer indeterminates a, b when d > 1.
class VariableTable {
public:
    VariableTable() = default;
    VariableTable(int q_order, bool with_symbols);

    int count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    int y_index(int q) const;
    int z_index(int q1, int q2) const;  // -1 for constant-1 entries
    int a_index() const { return a_; }
    int b_index() const { return b_; }
    int q_order() const { return q_order_; }
    bool has_symbols() const { return a_ >= 0; }

    bool operator==(const VariableTable&) const = default;

private:
    int q_order_ = 1;
    int a_ = -1, b_ = -1;
    std::vector<std::string> names_;
};

/// root exponent of zeta_N plus a Laurent exponent vector; always a unit.
struct MonomialCoefficient {
    std::int64_t root = 0;
    std::vector<std::int64_t> exps;
    bool operator==(const MonomialCoefficient&) const = default;
    bool is_one() const;
};

MonomialCoefficient mc_one(int var_count);
MonomialCoefficient mc_root(int var_count, long conductor, std::int64_t exponent);
MonomialCoefficient mc_mul(long conductor, const MonomialCoefficient& a,
                           const MonomialCoefficient& b);
MonomialCoefficient mc_inverse(long conductor, const MonomialCoefficient& a);

/// Monomial substitution automorphism: the image of each variable.
struct MonomialAction {
    std::vector<MonomialCoefficient> image;
    bool operator==(const MonomialAction&) const = default;
};

MonomialAction identity_action(int var_count);
MonomialCoefficient apply_action(long conductor, const MonomialAction& f,
                                 const MonomialCoefficient& m);
MonomialAction compose_actions(long conductor, const MonomialAction& f,
                               const MonomialAction& g);

/// Finite presentation data of a generic crossed product realizing a triple:
/// symbols x_g with x_{g1} x_{g2} = gamma(g1,g2) x_{g1g2}, coefficients acted
/// on through the Q-part, and an optional degree-d symbol layer X^i Y^j with
/// X^d = a, Y^d = b, Y X = zeta_d X Y.
struct CrossedPresentation {
    FiniteGroup G;
    AbelianGroup H;                 // abstract kernel type
    int h_order = 1;                // |H|; indices 0..h_order-1 are the kernel
    long conductor = 1;
    long d = 1;
    VariableTable vars;
    Bicharacter phi;                // on H
    std::vector<std::vector<MonomialCoefficient>> gamma;
    std::vector<MonomialAction> action;
};

/// Basis symbol X^i Y^j x_g and a coefficient in front of it.
struct SymbolTerm {
    MonomialCoefficient m;
    int i = 0, j = 0;
    int g = 0;
};

SymbolTerm term_mul(const CrossedPresentation& p, const SymbolTerm& a, const SymbolTerm& b);
SymbolTerm term_inverse(const CrossedPresentation& p, const SymbolTerm& t);
SymbolTerm identity_term(const CrossedPresentation& p);

std::string mc_to_string(const CrossedPresentation& p, const MonomialCoefficient& m);
std::string relation_string(const CrossedPresentation& p, int g1, int g2);

/// Assembles the presentation of the given validated triple. The H x H
/// block of gamma carries the upper-triangular cocycle of phi (roots only),
/// the Q x Q block the generic z variables twisted by beta, and the
/// commutation cochain c(q, h) is solved exactly over mu_N, escalating the
/// conductor when needed. Throws std::runtime_error with a witness when the
/// data cannot be realized (e.g. phi not invariant).
CrossedPresentation build_presentation(const RealizableTriple& t);

struct PresentationCheck {
    bool cocycle_ok = false;      // twisted cocycle identity on all triples
    bool commutator_ok = false;   // H-commutators realize phi
    bool kernel_ok = false;       // y-action kernel is exactly H
    bool invertible_ok = false;   // every basis symbol has a two-sided inverse
    bool action_hom_ok = false;   // action is a homomorphism, identity at e
    bool e_rank_ok = false;       // e-component rank equals d^2
    bool assoc_ok = false;        // full-basis associativity (skipped if huge)
    bool assoc_checked = false;
    std::string witness;          // first failure
    bool all_ok() const {
        return cocycle_ok && commutator_ok && kernel_ok && invertible_ok && action_hom_ok &&
               e_rank_ok && (!assoc_checked || assoc_ok);
    }
};

PresentationCheck verify_presentation(const CrossedPresentation& p);

/// The degree-d symbol algebra over the monomial coefficients, as the
/// presentation with trivial group part.
CrossedPresentation symbol_algebra(long d);

/// Number of basis symbols commuting with every other basis symbol up to
/// the coefficient monoid (rank of the symbol-layer centralizer).
std::size_t central_symbol_count(const CrossedPresentation& p);

/// Lifts a d = 1 presentation to degree d by tensoring with the symbol
/// algebra; requires d to divide the conductor.
CrossedPresentation hilbert_twist(const CrossedPresentation& p, long d);

}  // namespace gradalg
