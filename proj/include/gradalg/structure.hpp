#pragma once

#include "gradalg/graded_algebra.hpp"

namespace gradalg {

/// An extension class, an invariant bicharacter on its kernel, and the
/// degree of the e-component.
struct RealizableTriple {
    Extension ext;
    Bicharacter phi;
    long d = 1;
};

struct TripleValidation {
    bool valid = false;
    bool beta_valid = false;
    bool phi_valid = false;
    bool phi_invariant = false;
    bool d_positive = false;
    std::string message;
};

TripleValidation validate_triple(const Extension& ext, const Bicharacter& phi, long d);

/// d * sqrt(H_order / S_order) * index_GH with the square root exact;
/// rejects a non-square ratio (which signals an invalid radical).
Int degree_formula(long d, const Int& h_order, const Int& s_order, const Int& index_gh);

/// Derived structure data of a grading with kernel subgroup H and
/// commutator form phi on it.
struct StructureReport {
    AbelianGroup H_type;
    std::vector<int> H_elements;
    Bicharacter phi;          // on H_type, in the decomposition basis
    bool phi_trivial = true;
    AbelianGroup S_type;      // radical of phi
    std::vector<int> S_elements;
    bool S_central = false;   // S contained in Z(G)
    bool K_graded = false;    // iff S is central
    bool K_in_De = false;     // iff phi nondegenerate
    bool K_equals_K0 = false; // iff phi nondegenerate
    Int L_over_K0_degree;     // [G:H]
    Int D_degree;
    AbelianGroup H_mod_S_type;
    long d = 1;
};

/// Requires H normal abelian in G and phi invariant under conjugation.
StructureReport structure_report(const FiniteGroup& g, const std::vector<int>& h_elements,
                                 const Bicharacter& phi, long d);

/// When S is central the center is the twisted group algebra K_0^alpha S;
/// returns S and the restriction of the section cocycle of phi to S x S
/// (position-indexed over S_elements). The cohomologous correction over L
/// is absorbed symbolically.
struct GradedCenterPresentation {
    AbelianGroup S_type;
    std::vector<int> S_elements;  // indices in G
    long n = 1;
    std::vector<std::vector<std::int64_t>> alpha_restricted;
};

GradedCenterPresentation graded_center_presentation(const FiniteGroup& g,
                                                    const std::vector<int>& h_elements,
                                                    const Bicharacter& phi);

/// The four form-existence conditions for a BSZ presentation. Condition 4
/// is decided at the bicharacter level and is evaluated only when the
/// subgroup is abelian and normal; it reports false otherwise.
struct FormExistence {
    bool exists = false;
    bool h_abelian = false;
    bool cosets_equal = false;
    bool h_normal = false;
    bool alpha_invariant = false;
};

FormExistence form_exists(const BSZPresentation& p);

/// One row per (normal abelian H, invariant phi) pair; rows whose full
/// report data coincide are merged with a subgroup count. Sorted by |H|,
/// then invariant factors, then the exponent matrix of phi.
struct CaseRow {
    StructureReport report;
    int merged_subgroups = 1;
    bool merged_conjugate = false;  // the merged subgroups are pairwise conjugate
};

std::vector<CaseRow> case_report(const FiniteGroup& g, long d);

}  // namespace gradalg
