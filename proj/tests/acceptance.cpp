// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "gradalg/json_io.hpp"

using namespace gradalg;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int number, std::string description, double time_limit_seconds = 0)
        : number_(number), desc_(std::move(description)), limit_(time_limit_seconds) {
        start_ = std::chrono::steady_clock::now();
    }

    void expect(bool ok, const std::string& what) {
        if (!ok && problem_.empty()) problem_ = what;
    }

    ~Criterion() {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                           .count();
        bool ok = problem_.empty() && (limit_ <= 0 || elapsed <= limit_);
        if (problem_.empty() && limit_ > 0 && elapsed > limit_)
            problem_ = "time limit exceeded (" + std::to_string(limit_) + "s)";
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "PASS" : "FAIL") << " criterion " << number_ << ": " << desc_ << " ["
             << elapsed << "s]";
        if (!ok) line << " -- " << problem_;
        std::cout << line.str() << "\n";
        if (!ok) ++failures;
    }

private:
    int number_;
    std::string desc_;
    double limit_;
    std::string problem_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<AbelianGroup> groups_up_to(int bound) {
    std::vector<AbelianGroup> out;
    for (int n = 1; n <= bound; ++n)
        for (auto& h : abelian_groups_of_order(n)) out.push_back(h);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) return {};
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// --------------------------------------------------------------------------
// Shared extension builders
// --------------------------------------------------------------------------

Extension quaternion_extension(bool split) {
    AbelianGroup h({2});
    FiniteGroup q = direct_product(cyclic_group(2), cyclic_group(2));
    auto ext = split_extension(h, q, std::vector<IntMatrixHom>(4, identity_hom(h)));
    if (!split) {
        auto one = reduce_element(h, {1});
        for (auto [a, b] : {std::pair{1, 1}, {2, 2}, {3, 3}, {2, 1}, {3, 2}, {1, 3}})
            ext.beta[a][b] = one;
    }
    return ext;
}

Extension d4_extension() {
    AbelianGroup h({2, 2});
    IntMatrixHom twist{h, h, {{1, 1}, {0, 1}}};
    return split_extension(h, cyclic_group(2), {identity_hom(h), twist});
}

Extension z33_extension(bool inversion) {
    AbelianGroup h({3, 3});
    IntMatrixHom f = inversion ? IntMatrixHom{h, h, {{2, 0}, {0, 2}}}
                               : IntMatrixHom{h, h, {{0, 1}, {1, 0}}};
    return split_extension(h, cyclic_group(2), {identity_hom(h), f});
}

Extension trivial_kernel_extension(const FiniteGroup& q) {
    AbelianGroup h;
    return split_extension(h, q, std::vector<IntMatrixHom>(q.order(), identity_hom(h)));
}

Extension z4_from_z2_extension() {
    AbelianGroup h({2});
    auto ext = split_extension(h, cyclic_group(2), {identity_hom(h), identity_hom(h)});
    ext.beta[1][1] = reduce_element(h, {1});
    return ext;
}

Extension whole_group_extension(const AbelianGroup& h) {
    return split_extension(h, cyclic_group(1), {identity_hom(h)});
}

// --------------------------------------------------------------------------
// Criteria
// --------------------------------------------------------------------------

void criterion_1_golden_tables() {
    Criterion c(1, "golden case tables for Q8 and D4 at d = 1", 5.0);

    auto q8 = case_report(quaternion_q8(), 1);
    c.expect(q8.size() == 3, "Q8 must have 3 rows");
    if (q8.size() == 3) {
        c.expect(q8[0].report.H_type.is_trivial() && q8[0].report.D_degree == 8,
                 "Q8 case (1): degree 8");
        c.expect(q8[1].report.H_type == AbelianGroup({2}) && q8[1].report.D_degree == 4 &&
                     q8[1].report.K_graded,
                 "Q8 case (2): degree 4, K graded");
        c.expect(q8[2].report.H_type == AbelianGroup({4}) && q8[2].report.D_degree == 2 &&
                     !q8[2].report.K_graded && q8[2].merged_subgroups == 3,
                 "Q8 case (3): degree 2, K ungraded, three subgroups");
    }

    auto d4 = case_report(dihedral_d4(), 1);
    c.expect(d4.size() == 5, "D4 must have 5 rows");
    if (d4.size() == 5) {
        std::vector<Int> degrees;
        std::vector<bool> graded;
        for (const auto& r : d4) {
            degrees.push_back(r.report.D_degree);
            graded.push_back(r.report.K_graded);
        }
        c.expect(degrees == std::vector<Int>{8, 4, 2, 4, 2}, "D4 degrees (8,4,2,4,2)");
        // Row 0 is the trivial subgroup; its flag renders as "-".
        c.expect(graded[1] && !graded[2] && graded[3] && !graded[4],
                 "D4 K-graded flags (-, yes, no, yes, no)");
        c.expect(d4[3].report.K_equals_K0 && !d4[2].report.K_equals_K0 &&
                     !d4[1].report.K_equals_K0 && !d4[4].report.K_equals_K0,
                 "K = K0 exactly in the nontrivial-phi case");
        c.expect(!d4[3].report.phi_trivial && d4[2].report.phi_trivial,
                 "rows 3 and 4 are the two Klein bicharacters");
    }

    // Byte-exact CLI output against the golden files.
    for (auto [name, golden] : {std::pair{"Q8", "tests/golden/q8_d1.md"},
                                std::pair{"D4", "tests/golden/d4_d1.md"}}) {
        std::ostringstream out, err;
        int status = run_cli({"case-report", "--group", name, "--d", "1", "--format",
                              "markdown"},
                             out, err);
        c.expect(status == 0, std::string("case-report ") + name + " must succeed");
        std::string want = slurp(golden);
        c.expect(!want.empty(), std::string("missing golden file ") + golden);
        c.expect(out.str() == want, std::string("markdown differs from ") + golden);
    }
}

void criterion_2_roundtrip() {
    Criterion c(2, "commutator-form roundtrip for all |H| <= 16", 60.0);
    for (const auto& h : groups_up_to(16)) {
        for (const auto& phi : enumerate_bicharacters(h, {})) {
            auto alpha = cocycle_from_bicharacter(phi);
            if (!cocycle_valid(alpha)) {
                c.expect(false, "section is not a cocycle on " + describe(h));
                return;
            }
            if (!(commutator_form(alpha) == phi)) {
                c.expect(false, "roundtrip failed on " + describe(h));
                return;
            }
        }
    }
}

void criterion_3_center_is_span_of_radical() {
    Criterion c(3, "center of F^alpha H is spanned by {u_s : s in radical}", 0);
    for (const auto& h : groups_up_to(16)) {
        for (const auto& phi : enumerate_bicharacters(h, {})) {
            auto a = twisted_group_algebra(h, cocycle_from_bicharacter(phi));
            auto rad = radical(phi);
            auto cb = center_basis(a);
            if (cb.size() != rad.elements.size()) {
                c.expect(false, "center dimension mismatch on " + describe(h));
                return;
            }
            std::vector<int> got;
            bool units = true;
            for (const auto& v : cb) {
                if (v.size() != 1 || !v[0].second.is_one()) units = false;
                if (!v.empty()) got.push_back(v[0].first);
            }
            std::sort(got.begin(), got.end());
            std::vector<int> want;
            for (const auto& s : rad.elements)
                want.push_back(static_cast<int>(element_index(h, s)));
            if (!units || got != want) {
                c.expect(false, "center basis is not {u_s} on " + describe(h));
                return;
            }
        }
    }
}

void criterion_4_nondegeneracy_oracle() {
    Criterion c(4, "central simplicity cross-validates nondegeneracy", 0);
    for (const auto& h : groups_up_to(16)) {
        for (const auto& phi : enumerate_bicharacters(h, {})) {
            auto a = twisted_group_algebra(h, cocycle_from_bicharacter(phi));
            bool nd = is_nondegenerate(phi);
            if (is_central_simple(a) != nd) {
                c.expect(false, "oracle mismatch on " + describe(h));
                return;
            }
            if (nd && !is_square_type(h)) {
                c.expect(false, "nondegenerate on a non-square type " + describe(h));
                return;
            }
        }
    }
}

void criterion_5_semisimplicity() {
    Criterion c(5, "every twisted group algebra in the corpus is semisimple", 0);
    for (const auto& h : groups_up_to(16)) {
        for (const auto& phi : enumerate_bicharacters(h, {})) {
            auto a = twisted_group_algebra(h, cocycle_from_bicharacter(phi));
            if (!radical_is_zero(a)) {
                c.expect(false, "trace form degenerate on " + describe(h));
                return;
            }
        }
    }
}

void criterion_6_multiplier_exponent() {
    Criterion c(6, "exp(M(H)) divides exp(H) for all |H| <= 64", 0);
    for (const auto& h : groups_up_to(64)) {
        if (h.exponent() % schur_multiplier(h).exponent() != 0) {
            c.expect(false, "fails on " + describe(h));
            return;
        }
    }
}

void criterion_7_form_existence() {
    Criterion c(7, "20 hand-classified BSZ presentations and their algebras", 0);
    auto d4 = dihedral_d4();
    auto q8 = quaternion_q8();
    auto s3 = symmetric_s3();
    auto z4 = cyclic_group(4);
    auto z6 = cyclic_group(6);
    auto g18 = build_extension_group(z33_extension(false));
    auto v4 = direct_product(cyclic_group(2), cyclic_group(2));

    std::vector<int> klein{0, 2, 4, 6};
    AbelianGroup vt({2, 2});
    auto nondeg = cocycle_from_bicharacter(Bicharacter{vt, {{0, 1}, {1, 0}}});
    auto klein_alpha = bsz_alpha_from_cocycle(d4, klein, nondeg);
    auto triv = [](std::size_t n) {
        return std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0));
    };
    std::vector<int> z33_all(9);
    std::iota(z33_all.begin(), z33_all.end(), 0);
    auto hdec = abelian_decomposition(g18, z33_all);
    auto pairing_alpha = bsz_alpha_from_cocycle(
        g18, z33_all, cocycle_from_bicharacter(Bicharacter{hdec.type, {{0, 1}, {2, 0}}}));
    std::vector<int> v4_all{0, 1, 2, 3};
    auto v4_alpha = bsz_alpha_from_cocycle(v4, v4_all, nondeg);

    struct Case {
        BSZPresentation p;
        bool exists;
        std::string label;
    };
    std::vector<Case> cases = {
        {{d4, klein, 2, klein_alpha, {0, 1}}, true, "D4 Klein nondeg (e,r)"},
        {{d4, klein, 2, klein_alpha, {0, 0, 1, 1}}, true, "D4 Klein nondeg d=2"},
        {{d4, klein, 1, triv(4), {0, 1}}, true, "D4 Klein trivial alpha"},
        {{d4, {0, 2}, 1, triv(2), {0, 1, 4, 5}}, true, "D4 center"},
        {{q8, {0, 1, 4, 5}, 1, triv(4), {0, 2}}, true, "Q8 <i>"},
        {{q8, {0, 4}, 1, triv(2), {0, 1, 2, 3}}, true, "Q8 center"},
        {{s3, {0, 3, 4}, 1, triv(3), {0, 1}}, true, "S3 A3"},
        {{z4, {0, 1, 2, 3}, 1, triv(4), {0}}, true, "Z4 whole"},
        {{z6, {0, 3}, 1, triv(2), {0, 1, 2}}, true, "Z6 index 3"},
        {{v4, v4_all, 2, v4_alpha, {0}}, true, "V4 nondeg whole"},
        {{q8, {0, 1, 2, 3, 4, 5, 6, 7}, 1, triv(8), {0}}, false, "Q8 whole (nonabelian)"},
        {{s3, {0, 1, 2, 3, 4, 5}, 1, triv(6), {0}}, false, "S3 whole (nonabelian)"},
        {{s3, {0, 1}, 1, triv(2), {0, 2, 4}}, false, "S3 <(12)> non-normal"},
        {{s3, {0, 1}, 1, triv(2), {0, 2}}, false, "S3 <(12)> missing coset"},
        {{d4, klein, 2, klein_alpha, {0, 0, 1}}, false, "D4 unequal multiplicities"},
        {{d4, klein, 2, klein_alpha, {0, 0}}, false, "D4 missing coset"},
        {{g18, z33_all, 3, pairing_alpha, {0, 9}}, false, "Z3xZ3 swap non-invariant"},
        {{g18, z33_all, 3, pairing_alpha, {0, 0, 9}}, false, "Z3xZ3 swap two failures"},
        {{d4, {0, 4}, 1, triv(2), {0, 1, 2, 3}}, false, "D4 <s> non-normal"},
        {{q8, {0, 1, 4, 5}, 1, triv(4), {0, 0, 2}}, false, "Q8 <i> unequal multiplicities"},
    };
    if (cases.size() != 20) {
        c.expect(false, "corpus must have 20 presentations");
        return;
    }
    for (const auto& tc : cases) {
        auto f = form_exists(tc.p);
        if (f.exists != tc.exists) {
            c.expect(false, "verdict mismatch: " + tc.label);
            return;
        }
        if (!f.exists) continue;
        auto a = bsz_algebra(tc.p);
        if (!is_graded_simple(a)) {
            c.expect(false, "passing case not graded-simple: " + tc.label);
            return;
        }
        if (!radical_is_zero(a)) {
            c.expect(false, "passing case not semisimple: " + tc.label);
            return;
        }
        auto dims = homogeneous_dims(a);
        int s = static_cast<int>(tc.p.tuple.size());
        int hs = static_cast<int>(tc.p.h_elements.size());
        int total = std::accumulate(dims.dims.begin(), dims.dims.end(), 0);
        if (total != hs * s * s) {
            c.expect(false, "component dimensions do not sum to |H| s^2: " + tc.label);
            return;
        }
        int expected = hs * s * s / tc.p.G.order();
        for (int dim : dims.dims)
            if (dim != expected) {
                c.expect(false, "components not equidimensional: " + tc.label);
                return;
            }
    }
}

void criterion_8_realizations() {
    Criterion c(8, "realization corpus verifies all four checks", 120.0);
    struct Case {
        Extension ext;
        Bicharacter phi;
        long d;
        std::string label;
    };
    AbelianGroup z2({2}), vt({2, 2}), z33({3, 3});
    Bicharacter vt_nondeg{vt, {{0, 1}, {1, 0}}};
    Bicharacter z33_pairing{z33, {{0, 1}, {2, 0}}};
    AbelianGroup z4({4});
    std::vector<Case> cases = {
        {quaternion_extension(false), trivial_bicharacter(z2), 1, "Q8 nonsplit"},
        {quaternion_extension(true), trivial_bicharacter(z2), 1, "Q8 split"},
        {d4_extension(), trivial_bicharacter(vt), 1, "D4 trivial phi"},
        {d4_extension(), vt_nondeg, 1, "D4 nondeg phi"},
        {d4_extension(), vt_nondeg, 2, "D4 nondeg phi d=2"},
        {z33_extension(false), trivial_bicharacter(z33), 1, "Z3xZ3 swap trivial phi"},
        {z33_extension(true), z33_pairing, 1, "Z3xZ3 inversion pairing"},
        {z33_extension(true), z33_pairing, 3, "Z3xZ3 inversion pairing d=3"},
        {trivial_kernel_extension(symmetric_s3()), trivial_bicharacter(AbelianGroup()), 1,
         "S3 classical"},
        {trivial_kernel_extension(symmetric_s3()), trivial_bicharacter(AbelianGroup()), 2,
         "S3 classical d=2"},
        {whole_group_extension(z4), trivial_bicharacter(z4), 1, "Z4 = H"},
        {z4_from_z2_extension(), trivial_bicharacter(z2), 2, "Z4 extension d=2"},
    };
    for (const auto& tc : cases) {
        auto v = validate_triple(tc.ext, tc.phi, tc.d);
        if (!v.valid) {
            c.expect(false, "triple rejected: " + tc.label + " (" + v.message + ")");
            return;
        }
        CrossedPresentation p;
        try {
            p = build_presentation(RealizableTriple{tc.ext, tc.phi, tc.d});
            if (tc.d > 1) p = hilbert_twist(p, tc.d);
        } catch (const std::exception& e) {
            c.expect(false, "build failed: " + tc.label + " (" + e.what() + ")");
            return;
        }
        auto check = verify_presentation(p);
        if (!(check.cocycle_ok && check.commutator_ok && check.kernel_ok &&
              check.invertible_ok)) {
            c.expect(false, "checks failed: " + tc.label + " (" + check.witness + ")");
            return;
        }
        if (!check.all_ok()) {
            c.expect(false, "extended checks failed: " + tc.label + " (" + check.witness + ")");
            return;
        }
        // Kernel equals H and the e-component has rank d^2 over coefficients.
        if (!check.kernel_ok || !check.e_rank_ok || p.d != tc.d) {
            c.expect(false, "kernel or e-rank wrong: " + tc.label);
            return;
        }
    }
}

void criterion_9_degree_formula() {
    Criterion c(9, "degree formula reproduces the worked degrees", 0);
    c.expect(degree_formula(1, 4, 1, 2) == 4, "D4 nontrivial-phi Klein case");
    c.expect(degree_formula(1, 4, 4, 2) == 2, "Q8 Z4 case");
    c.expect(degree_formula(1, 1, 1, 8) == 8, "trivial-H crossed product of Q8");
    c.expect(degree_formula(1, 2, 2, 4) == 4, "center case of Q8 and D4");
    c.expect(degree_formula(3, 9, 1, 2) == 18, "degree-3 pairing case");
    // Specialization with trivial radical: d sqrt(|H|) [G:H].
    for (long d : {1L, 2L, 3L})
        for (const auto& h : groups_up_to(16)) {
            if (!is_square_type(h)) continue;
            Int root;
            Int order = h.order();
            mpz_sqrt(root.get_mpz_t(), order.get_mpz_t());
            for (Int idx : {Int(1), Int(2), Int(6)})
                c.expect(degree_formula(d, h.order(), 1, idx) == Int(d) * root * idx,
                         "specialization d sqrt(|H|) [G:H] on " + describe(h));
        }
    // All case-report degrees agree with the formula on their own data.
    for (const auto& g : {quaternion_q8(), dihedral_d4()})
        for (const auto& row : case_report(g, 1))
            c.expect(row.report.D_degree ==
                         degree_formula(1, Int(row.report.H_elements.size()),
                                        Int(row.report.S_elements.size()),
                                        row.report.L_over_K0_degree),
                     "case-report degree consistency");
}

}  // namespace

int main() {
    criterion_1_golden_tables();
    criterion_2_roundtrip();
    criterion_3_center_is_span_of_radical();
    criterion_4_nondegeneracy_oracle();
    criterion_5_semisimplicity();
    criterion_6_multiplier_exponent();
    criterion_7_form_existence();
    criterion_8_realizations();
    criterion_9_degree_formula();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
