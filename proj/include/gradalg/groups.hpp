#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/abelian.hpp"

namespace gradalg {

/// Finite group as a Cayley table of element indices. Index 0 is the
/// identity; construction validates the table (permutation rows/columns,
/// identity, associativity), which is affordable at desk scale.
class FiniteGroup {
public:
    FiniteGroup();  // trivial group
    explicit FiniteGroup(std::vector<std::vector<int>> cayley,
                         std::vector<std::string> names = {});

    int order() const { return static_cast<int>(cayley_.size()); }
    int mul(int a, int b) const { return cayley_.at(a).at(b); }
    int inverse(int a) const { return inverse_.at(a); }
    static constexpr int identity = 0;
    int element_order(int a) const;
    bool is_abelian() const;
    int conjugate(int by, int x) const { return mul(mul(by, x), inverse(by)); }

    const std::vector<std::vector<int>>& cayley() const { return cayley_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name_of(int a) const { return names_.at(a); }

    bool operator==(const FiniteGroup&) const = default;

private:
    std::vector<std::vector<int>> cayley_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
};

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup dihedral_d4();
FiniteGroup quaternion_q8();
FiniteGroup symmetric_s3();
FiniteGroup group_from_abelian(const AbelianGroup& h);

/// Parses "Z12", "Z2xZ4", "D4", "Q8", "S3" (case-insensitive, spaces ignored).
std::optional<FiniteGroup> named_group(const std::string& name);

/// Sorted index set closed under product and inverse, with its own copy of
/// the parent table (tables are small).
struct Subgroup {
    FiniteGroup parent;
    std::vector<int> elements;
    bool contains(int x) const;
    int order() const { return static_cast<int>(elements.size()); }
};

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup full_subgroup(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const std::vector<int>& elements);
bool is_abelian_subset(const FiniteGroup& g, const std::vector<int>& elements);
Subgroup center(const FiniteGroup& g);
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

struct NormalAbelianSubgroup {
    Subgroup sub;
    AbelianGroup type;
};
std::vector<NormalAbelianSubgroup> normal_abelian_subgroups(const FiniteGroup& g);

/// Invariant-factor decomposition of an abelian subgroup together with
/// generators realizing it: the abstract element with coordinates (c_1..c_k)
/// corresponds to prod generators[i]^(c_i). element_by_index follows the
/// mixed-radix enumeration of AbelianGroup (coordinate 0 fastest).
struct AbelianDecomposition {
    AbelianGroup type;
    std::vector<int> generators;
    std::vector<int> element_by_index;
    std::map<int, std::size_t> index_by_element;

    AbelianElement coords_of(int parent_element) const;
    int element_of(const AbelianElement& a) const;
};

AbelianDecomposition abelian_decomposition(const FiniteGroup& g,
                                           const std::vector<int>& elements);

/// Decomposition of group_from_abelian(h) with the canonical basis: the
/// abstract enumeration coincides with the element indices.
AbelianDecomposition canonical_decomposition(const AbelianGroup& h);

/// Conjugation h -> g h g^-1 restricted to a normal abelian subgroup,
/// expressed on the decomposition basis. Throws if conjugation leaves the
/// subgroup.
IntMatrixHom conjugation_on_subgroup(const FiniteGroup& g, const AbelianDecomposition& dec,
                                     int by);

// ---------------------------------------------------------------------------
// Extensions 1 -> H -> G -> Q -> 1 with abelian kernel
// ---------------------------------------------------------------------------

/// Extension data (H, Q, action, beta). beta is a normalized 2-cocycle
/// Q x Q -> H written additively; the assembled group lives on pairs (h, q)
/// with (h1,q1)(h2,q2) = (h1 + q1.h2 + beta(q1,q2), q1 q2) and element index
/// q_index * |H| + h_index, so serialized tables are reproducible.
struct Extension {
    AbelianGroup H;
    FiniteGroup Q;
    std::vector<IntMatrixHom> action;               // one automorphism per q
    std::vector<std::vector<AbelianElement>> beta;  // |Q| x |Q|
};

struct CocycleReport {
    bool ok = false;
    std::string message;  // first violation, empty when ok
};

CocycleReport validate_cocycle_beta(const Extension& ext);
Extension split_extension(const AbelianGroup& h, const FiniteGroup& q,
                          std::vector<IntMatrixHom> action);
Extension trivial_action_extension(const AbelianGroup& h, const FiniteGroup& q,
                                   std::vector<std::vector<AbelianElement>> beta);

int extension_element_index(const Extension& ext, const AbelianElement& h, int q);
std::pair<AbelianElement, int> extension_element_parts(const Extension& ext, int g);

/// Assembles the Cayley table; throws std::invalid_argument when
/// validate_cocycle_beta fails or an action entry is not an automorphism.
FiniteGroup build_extension_group(const Extension& ext);

/// Conjugation action of each g in G on the embedded copy of H, as matrices
/// on the invariant-factor basis. Indexed by the element order of
/// build_extension_group.
std::vector<IntMatrixHom> conjugation_action_on_H(const Extension& ext);

std::string describe(const AbelianGroup& h);

}  // namespace gradalg
