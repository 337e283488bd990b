#include "gradalg/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gradalg {

TripleValidation validate_triple(const Extension& ext, const Bicharacter& phi, long d) {
    TripleValidation v;
    auto rep = validate_cocycle_beta(ext);
    v.beta_valid = rep.ok;
    if (!rep.ok) v.message = "extension data invalid: " + rep.message;
    v.phi_valid = (phi.H == ext.H) && bicharacter_valid(phi);
    if (!v.phi_valid && v.message.empty())
        v.message = "bicharacter invalid or defined on the wrong group";
    v.phi_invariant = v.phi_valid && v.beta_valid && q_invariant(phi, ext);
    if (v.phi_valid && v.beta_valid && !v.phi_invariant && v.message.empty())
        v.message = "bicharacter is not invariant under the Q-action";
    v.d_positive = d >= 1;
    if (!v.d_positive && v.message.empty()) v.message = "d must be a positive integer";
    v.valid = v.beta_valid && v.phi_valid && v.phi_invariant && v.d_positive;
    return v;
}

Int degree_formula(long d, const Int& h_order, const Int& s_order, const Int& index_gh) {
    if (d < 1) throw std::invalid_argument("degree_formula: d must be positive");
    if (s_order <= 0 || h_order <= 0 || index_gh <= 0)
        throw std::invalid_argument("degree_formula: orders must be positive");
    if (h_order % s_order != 0)
        throw std::invalid_argument("degree_formula: S order must divide H order");
    Int ratio = h_order / s_order;
    if (mpz_perfect_square_p(ratio.get_mpz_t()) == 0)
        throw std::invalid_argument("degree_formula: [H:S] is not a perfect square");
    Int root;
    mpz_sqrt(root.get_mpz_t(), ratio.get_mpz_t());
    return Int(d) * root * index_gh;
}

StructureReport structure_report(const FiniteGroup& g, const std::vector<int>& h_elements,
                                 const Bicharacter& phi, long d) {
    if (d < 1) throw std::invalid_argument("structure_report: d must be positive");
    if (!is_abelian_subset(g, h_elements))
        throw std::invalid_argument("structure_report: H must be abelian");
    if (!is_normal(g, h_elements))
        throw std::invalid_argument("structure_report: H must be normal in G");
    auto dec = abelian_decomposition(g, h_elements);
    if (!(phi.H == dec.type))
        throw std::invalid_argument("structure_report: bicharacter group mismatch");
    require_bicharacter(phi);
    std::vector<IntMatrixHom> auts;
    for (int a = 0; a < g.order(); ++a) auts.push_back(conjugation_on_subgroup(g, dec, a));
    if (!is_invariant(phi, auts))
        throw std::invalid_argument("structure_report: bicharacter is not G-invariant");

    StructureReport r;
    r.H_type = dec.type;
    r.H_elements = h_elements;
    r.phi = phi;
    r.phi_trivial = phi.is_trivial();
    r.d = d;

    auto rad = radical(phi);
    r.S_type = rad.type;
    for (const auto& s : rad.elements)
        r.S_elements.push_back(dec.element_of(s));
    std::sort(r.S_elements.begin(), r.S_elements.end());

    auto z = center(g);
    r.S_central = std::all_of(r.S_elements.begin(), r.S_elements.end(),
                              [&](int s) { return z.contains(s); });
    r.K_graded = r.S_central;
    bool nondeg = rad.elements.size() == 1;
    r.K_in_De = nondeg;
    r.K_equals_K0 = nondeg;
    r.L_over_K0_degree = Int(g.order()) / Int(h_elements.size());
    r.D_degree = degree_formula(d, Int(h_elements.size()), Int(rad.elements.size()),
                                r.L_over_K0_degree);
    r.H_mod_S_type = quotient(dec.type, rad.generators);
    return r;
}

GradedCenterPresentation graded_center_presentation(const FiniteGroup& g,
                                                    const std::vector<int>& h_elements,
                                                    const Bicharacter& phi) {
    auto dec = abelian_decomposition(g, h_elements);
    if (!(phi.H == dec.type))
        throw std::invalid_argument("graded_center_presentation: bicharacter group mismatch");
    auto rad = radical(phi);
    std::vector<int> s_elements;
    for (const auto& s : rad.elements) s_elements.push_back(dec.element_of(s));
    std::sort(s_elements.begin(), s_elements.end());
    auto z = center(g);
    for (int s : s_elements)
        if (!z.contains(s))
            throw std::invalid_argument(
                "graded_center_presentation: S is not central, the center is ungraded");

    auto alpha = cocycle_from_bicharacter(phi);
    GradedCenterPresentation out;
    out.S_type = rad.type;
    out.S_elements = s_elements;
    out.n = alpha.n;
    std::size_t m = s_elements.size();
    out.alpha_restricted.assign(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto ai = dec.index_by_element.at(s_elements[i]);
            auto aj = dec.index_by_element.at(s_elements[j]);
            out.alpha_restricted[i][j] = alpha.table[ai][aj];
        }
    return out;
}

FormExistence form_exists(const BSZPresentation& p) {
    require_bsz(p);
    FormExistence f;
    f.h_abelian = is_abelian_subset(p.G, p.h_elements);
    f.h_normal = is_normal(p.G, p.h_elements);

    // Right cosets Hg, identified by their least member.
    auto coset_id = [&](int g) {
        int best = p.G.order();
        for (int h : p.h_elements) best = std::min(best, p.G.mul(h, g));
        return best;
    };
    std::map<int, int> counts;
    for (int g = 0; g < p.G.order(); ++g) counts[coset_id(g)] = 0;
    for (int t : p.tuple) ++counts[coset_id(t)];
    int first = counts.begin()->second;
    f.cosets_equal = first > 0 && std::all_of(counts.begin(), counts.end(),
                                              [&](const auto& kv) { return kv.second == first; });

    if (f.h_abelian && f.h_normal) {
        auto dec = abelian_decomposition(p.G, p.h_elements);
        std::size_t hs = p.h_elements.size();
        Cocycle2H alpha{dec.type, p.n,
                        std::vector<std::vector<std::int64_t>>(hs, std::vector<std::int64_t>(hs, 0))};
        for (std::size_t i = 0; i < hs; ++i)
            for (std::size_t j = 0; j < hs; ++j)
                alpha.table[dec.index_by_element.at(p.h_elements[i])]
                           [dec.index_by_element.at(p.h_elements[j])] = p.alpha[i][j];
        auto phi = commutator_form(alpha);
        std::vector<IntMatrixHom> auts;
        for (int a = 0; a < p.G.order(); ++a)
            auts.push_back(conjugation_on_subgroup(p.G, dec, a));
        f.alpha_invariant = is_invariant(phi, auts);
    } else {
        f.alpha_invariant = false;
    }
    f.exists = f.h_abelian && f.cosets_equal && f.h_normal && f.alpha_invariant;
    return f;
}

namespace {

struct RowKey {
    std::vector<Int> h_factors;
    std::vector<std::vector<std::int64_t>> e;
    std::vector<Int> s_factors;
    bool s_central;
    Int degree;
    auto tie() const { return std::tie(h_factors, e, s_factors, s_central, degree); }
    bool operator<(const RowKey& o) const { return tie() < o.tie(); }
    bool operator==(const RowKey& o) const { return tie() == o.tie(); }
};

RowKey key_of(const StructureReport& r) {
    return RowKey{r.H_type.invariant_factors(), r.phi.E, r.S_type.invariant_factors(),
                  r.S_central, r.D_degree};
}

bool subgroups_conjugate(const FiniteGroup& g, const std::vector<int>& a,
                         const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (int x = 0; x < g.order(); ++x) {
        std::vector<int> image;
        for (int s : a) image.push_back(g.conjugate(x, s));
        std::sort(image.begin(), image.end());
        if (image == b) return true;
    }
    return false;
}

}  // namespace

std::vector<CaseRow> case_report(const FiniteGroup& g, long d) {
    struct Accum {
        CaseRow row;
        std::vector<std::vector<int>> subgroups;
    };
    std::map<RowKey, Accum> merged;
    for (const auto& nas : normal_abelian_subgroups(g)) {
        auto dec = abelian_decomposition(g, nas.sub.elements);
        std::vector<IntMatrixHom> auts;
        for (int a = 0; a < g.order(); ++a)
            auts.push_back(conjugation_on_subgroup(g, dec, a));
        for (const auto& phi : enumerate_bicharacters(dec.type, auts)) {
            auto rep = structure_report(g, nas.sub.elements, phi, d);
            auto key = key_of(rep);
            auto it = merged.find(key);
            if (it == merged.end()) {
                Accum acc;
                acc.row = CaseRow{std::move(rep), 1, false};
                acc.subgroups.push_back(nas.sub.elements);
                merged.emplace(key, std::move(acc));
            } else {
                if (std::find(it->second.subgroups.begin(), it->second.subgroups.end(),
                              nas.sub.elements) == it->second.subgroups.end()) {
                    it->second.subgroups.push_back(nas.sub.elements);
                    ++it->second.row.merged_subgroups;
                }
            }
        }
    }
    std::vector<CaseRow> out;
    for (auto& [key, acc] : merged) {
        if (acc.subgroups.size() > 1) {
            bool conj = true;
            for (std::size_t i = 1; i < acc.subgroups.size() && conj; ++i)
                conj = subgroups_conjugate(g, acc.subgroups[0], acc.subgroups[i]);
            acc.row.merged_conjugate = conj;
        }
        out.push_back(std::move(acc.row));
    }
    // std::map iteration is already sorted by RowKey: |H| sorts first because
    // shorter divisibility chains of larger factors compare after... sort
    // explicitly by (|H|, factors, E) to pin the order.
    std::sort(out.begin(), out.end(), [](const CaseRow& a, const CaseRow& b) {
        auto ta = std::make_tuple(a.report.H_type.order(), a.report.H_type.invariant_factors(),
                                  a.report.phi.E);
        auto tb = std::make_tuple(b.report.H_type.order(), b.report.H_type.invariant_factors(),
                                  b.report.phi.E);
        return ta < tb;
    });
    return out;
}

}  // namespace gradalg
