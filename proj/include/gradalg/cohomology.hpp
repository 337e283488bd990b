#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gradalg/groups.hpp"

namespace gradalg {

/// Alternating bicharacter phi: H x H -> mu_{n_H} as an integer exponent
/// matrix E on the invariant-factor basis: phi(e_i, e_j) = zeta_{n_H}^E[i][j].
/// Invariants: E[i][i] == 0 and E[j][i] == -E[i][j] (mod n_H), and
/// E[i][j] == 0 (mod n_H / gcd(m_i, m_j)).
struct Bicharacter {
    AbelianGroup H;
    std::vector<std::vector<std::int64_t>> E;

    bool is_trivial() const;
    bool operator==(const Bicharacter&) const = default;
};

Bicharacter trivial_bicharacter(const AbelianGroup& h);
bool bicharacter_valid(const Bicharacter& phi);
void require_bicharacter(const Bicharacter& phi);

/// Exponent of phi(a, b) in base zeta_{n_H}.
std::int64_t phi_exponent(const Bicharacter& phi, const AbelianElement& a,
                          const AbelianElement& b);

/// Normalized 2-cocycle on H with values in mu_n, tabulated over the
/// element enumeration of H: alpha(h1, h2) = zeta_n^table[i1][i2].
struct Cocycle2H {
    AbelianGroup H;
    long n = 1;
    std::vector<std::vector<std::int64_t>> table;
};

bool cocycle_valid(const Cocycle2H& alpha);
void require_cocycle(const Cocycle2H& alpha);

/// Invariant factors of the wedge square H ^ H: one cyclic factor of order
/// gcd(m_i, m_j) per pair i < j.
AbelianGroup schur_multiplier(const AbelianGroup& h);

/// phi(h1 ^ h2) = alpha(h1,h2) alpha(h2,h1)^-1, rescaled to conductor n_H.
Bicharacter commutator_form(const Cocycle2H& alpha);

/// The upper-triangular section alpha(a, b) = prod_{i<j} phi(e_i,e_j)^(a_i b_j);
/// commutator_form of the result returns phi exactly.
Cocycle2H cocycle_from_bicharacter(const Bicharacter& phi);

struct CoboundaryWitness {
    bool is_coboundary = false;
    std::vector<std::int64_t> gamma;  // exponents of gamma: H -> mu_n, when true
};
CoboundaryWitness is_coboundary(const Cocycle2H& alpha);

/// phi(q.h1, q.h2) == phi(h1, h2) for every automorphism in the list.
bool is_invariant(const Bicharacter& phi, const std::vector<IntMatrixHom>& auts);
bool q_invariant(const Bicharacter& phi, const Extension& ext);

/// All valid bicharacters on H fixed by the given automorphisms, in
/// lexicographic order of the exponent matrix.
std::vector<Bicharacter> enumerate_bicharacters(const AbelianGroup& h,
                                                const std::vector<IntMatrixHom>& auts);
std::vector<Bicharacter> enumerate_invariant_bicharacters(const Extension& ext);

/// Subgroup of H described by generators, full element list (sorted by
/// element index) and abstract type.
struct SubgroupOfH {
    std::vector<AbelianElement> generators;
    std::vector<AbelianElement> elements;
    AbelianGroup type;
};

/// Radical S = {s : phi(s, h) = 1 for all h}, found as the integer nullspace
/// of E^T mod n_H through SNF.
SubgroupOfH radical(const Bicharacter& phi);
bool is_nondegenerate(const Bicharacter& phi);

}  // namespace gradalg
