#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gradalg/cohomology.hpp"

using namespace gradalg;

namespace {

// All abelian groups of order <= bound.
std::vector<AbelianGroup> groups_up_to(int bound) {
    std::vector<AbelianGroup> out;
    for (int n = 1; n <= bound; ++n)
        for (auto& h : abelian_groups_of_order(n)) out.push_back(h);
    return out;
}

std::vector<Bicharacter> all_bicharacters(const AbelianGroup& h) {
    return enumerate_bicharacters(h, {});
}

// Brute-force radical straight from the definition.
std::vector<AbelianElement> radical_brute(const Bicharacter& phi) {
    std::vector<AbelianElement> out;
    const auto& h = phi.H;
    for (std::size_t i = 0; i < h.element_count(); ++i) {
        auto s = element_at(h, i);
        bool in = true;
        for (std::size_t j = 0; j < h.element_count() && in; ++j)
            in = phi_exponent(phi, s, element_at(h, j)) == 0;
        if (in) out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("schur multiplier of abelian groups") {
    CHECK(schur_multiplier(AbelianGroup({7})).is_trivial());
    CHECK(schur_multiplier(AbelianGroup({2, 2})) == AbelianGroup({2}));
    CHECK(schur_multiplier(AbelianGroup({2, 2, 4})) == AbelianGroup({2, 2, 2}));
    CHECK(schur_multiplier(AbelianGroup({3, 9})) == AbelianGroup({3}));
    CHECK(schur_multiplier(AbelianGroup()).is_trivial());
}

TEST_CASE("schur multiplier order matches the bicharacter count") {
    for (const auto& h : groups_up_to(16)) {
        auto m = schur_multiplier(h);
        CHECK(Int(all_bicharacters(h).size()) == m.order());
    }
}

TEST_CASE("multiplier exponent divides the group exponent") {
    for (const auto& h : groups_up_to(64))
        CHECK(h.exponent() % schur_multiplier(h).exponent() == 0);
}

TEST_CASE("commutator form worked examples") {
    AbelianGroup v({2, 2});
    {
        auto alpha = cocycle_from_bicharacter(trivial_bicharacter(v));
        CHECK(commutator_form(alpha).is_trivial());
    }
    {
        // Standard upper-triangular cocycle alpha(a,b) = (-1)^(a_1 b_2).
        std::size_t sz = v.element_count();
        Cocycle2H alpha{v, 2, std::vector<std::vector<std::int64_t>>(
                                  sz, std::vector<std::int64_t>(sz, 0))};
        for (std::size_t a = 0; a < sz; ++a)
            for (std::size_t b = 0; b < sz; ++b) {
                auto ea = element_at(v, a), eb = element_at(v, b);
                alpha.table[a][b] = Int(ea.coords[0] * eb.coords[1]).get_si() % 2;
            }
        REQUIRE(cocycle_valid(alpha));
        auto phi = commutator_form(alpha);
        CHECK(phi.E[0][1] == 1);
        CHECK(phi.E[1][0] == 1);  // -1 mod 2
    }
    {
        // Symmetric cocycles have trivial commutator form.
        AbelianGroup z4({4});
        std::size_t sz = z4.element_count();
        Cocycle2H alpha{z4, 4, std::vector<std::vector<std::int64_t>>(
                                   sz, std::vector<std::int64_t>(sz, 0))};
        for (std::size_t a = 0; a < sz; ++a)
            for (std::size_t b = 0; b < sz; ++b) alpha.table[a][b] = ((a + b) / 4) * 3 % 4;
        REQUIRE(cocycle_valid(alpha));
        CHECK(commutator_form(alpha).is_trivial());
    }
}

TEST_CASE("cocycle_from_bicharacter worked example on Z2xZ2") {
    AbelianGroup v({2, 2});
    Bicharacter phi{v, {{0, 1}, {1, 0}}};
    auto alpha = cocycle_from_bicharacter(phi);
    CHECK(cocycle_valid(alpha));
    auto e1 = reduce_element(v, {1, 0}), e2 = reduce_element(v, {0, 1});
    CHECK(alpha.table[element_index(v, e1)][element_index(v, e2)] == 1);   // -1
    CHECK(alpha.table[element_index(v, e2)][element_index(v, e1)] == 0);   // +1
}

TEST_CASE("roundtrip commutator_form . cocycle_from_bicharacter = id") {
    for (const auto& h : groups_up_to(16)) {
        for (const auto& phi : all_bicharacters(h)) {
            auto alpha = cocycle_from_bicharacter(phi);
            CHECK(cocycle_valid(alpha));
            CHECK(commutator_form(alpha) == phi);
        }
    }
}

TEST_CASE("is_coboundary") {
    AbelianGroup v({2, 2});
    auto trivial = cocycle_from_bicharacter(trivial_bicharacter(v));
    auto w = is_coboundary(trivial);
    CHECK(w.is_coboundary);

    Bicharacter phi{v, {{0, 1}, {1, 0}}};
    CHECK_FALSE(is_coboundary(cocycle_from_bicharacter(phi)).is_coboundary);

    // On Z2 with n = 4: alpha(1,1) = -1 is the coboundary of gamma(1) = zeta_4.
    AbelianGroup z2({2});
    Cocycle2H alpha{z2, 4, {{0, 0}, {0, 2}}};
    REQUIRE(cocycle_valid(alpha));
    auto wit = is_coboundary(alpha);
    REQUIRE(wit.is_coboundary);
    CHECK(wit.gamma[0] == 0);
    CHECK((wit.gamma[1] == 1 || wit.gamma[1] == 3));
}

TEST_CASE("coboundaries have trivial commutator form") {
    for (const auto& h : groups_up_to(9)) {
        for (const auto& phi : all_bicharacters(h)) {
            auto alpha = cocycle_from_bicharacter(phi);
            auto w = is_coboundary(alpha);
            if (w.is_coboundary) {
                CHECK(commutator_form(alpha).is_trivial());
                // Verify the witness solves the coboundary equation.
                std::size_t sz = h.element_count();
                for (std::size_t a = 0; a < sz; ++a)
                    for (std::size_t b = 0; b < sz; ++b) {
                        std::size_t ab = element_index(
                            h, add(h, element_at(h, a), element_at(h, b)));
                        std::int64_t lhs =
                            (w.gamma[a] + w.gamma[b] - w.gamma[ab]) % alpha.n;
                        if (lhs < 0) lhs += alpha.n;
                        CHECK(lhs == alpha.table[a][b] % alpha.n);
                    }
            }
        }
    }
}

TEST_CASE("q-invariance") {
    // Trivial bicharacter is invariant under anything.
    AbelianGroup v({2, 2});
    FiniteGroup z2 = cyclic_group(2);
    IntMatrixHom twist{v, v, {{1, 1}, {0, 1}}};
    auto d4ext = split_extension(v, z2, {identity_hom(v), twist});
    CHECK(q_invariant(trivial_bicharacter(v), d4ext));

    // The nontrivial phi on Z2xZ2 is invariant under the D4 conjugation action.
    Bicharacter phi{v, {{0, 1}, {1, 0}}};
    CHECK(q_invariant(phi, d4ext));

    // Swapping the two Z3 factors sends the zeta_3 pairing to its inverse.
    AbelianGroup z33({3, 3});
    IntMatrixHom swap{z33, z33, {{0, 1}, {1, 0}}};
    auto swapext = split_extension(z33, z2, {identity_hom(z33), swap});
    Bicharacter pairing{z33, {{0, 1}, {2, 0}}};
    REQUIRE(bicharacter_valid(pairing));
    CHECK_FALSE(q_invariant(pairing, swapext));
}

TEST_CASE("enumerate invariant bicharacters") {
    AbelianGroup z4({4});
    auto anyext = split_extension(z4, cyclic_group(1), {identity_hom(z4)});
    CHECK(enumerate_invariant_bicharacters(anyext).size() == 1);

    AbelianGroup v({2, 2});
    IntMatrixHom twist{v, v, {{1, 1}, {0, 1}}};
    auto d4ext = split_extension(v, cyclic_group(2), {identity_hom(v), twist});
    CHECK(enumerate_invariant_bicharacters(d4ext).size() == 2);

    auto free_ext = split_extension(v, cyclic_group(1), {identity_hom(v)});
    CHECK(enumerate_invariant_bicharacters(free_ext).size() == 2);
}

TEST_CASE("invariant bicharacter sets are closed under inversion") {
    AbelianGroup z33({3, 3});
    IntMatrixHom inv{z33, z33, {{2, 0}, {0, 2}}};
    auto ext = split_extension(z33, cyclic_group(2), {identity_hom(z33), inv});
    auto list = enumerate_invariant_bicharacters(ext);
    CHECK(list.size() == 3);  // inversion fixes every pairing on Z3xZ3
    for (const auto& phi : list) {
        Bicharacter invphi = phi;
        std::int64_t n = phi.H.exponent().get_si();
        for (auto& row : invphi.E)
            for (auto& x : row) x = (n - x % n) % n;
        CHECK(std::find(list.begin(), list.end(), invphi) != list.end());
    }
}

TEST_CASE("radical worked examples and brute-force agreement") {
    {
        AbelianGroup v({2, 2});
        auto s = radical(trivial_bicharacter(v));
        CHECK(s.elements.size() == 4);
        CHECK(s.type == v);
    }
    {
        AbelianGroup v({2, 2});
        Bicharacter phi{v, {{0, 1}, {1, 0}}};
        auto s = radical(phi);
        CHECK(s.elements.size() == 1);
        CHECK(s.type.is_trivial());
        CHECK(is_nondegenerate(phi));
    }
    {
        AbelianGroup h({2, 2, 2});
        Bicharacter phi{h, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}};
        auto s = radical(phi);
        CHECK(s.elements.size() == 2);
        CHECK(s.type == AbelianGroup({2}));
        CHECK(std::find(s.elements.begin(), s.elements.end(),
                        reduce_element(h, {0, 0, 1})) != s.elements.end());
    }
    for (const auto& h : groups_up_to(16)) {
        for (const auto& phi : all_bicharacters(h)) {
            auto s = radical(phi);
            auto brute = radical_brute(phi);
            CHECK(s.elements == brute);
        }
    }
}

TEST_CASE("nondegeneracy forces square type") {
    for (const auto& h : groups_up_to(16)) {
        bool square = is_square_type(h);
        for (const auto& phi : all_bicharacters(h)) {
            if (is_nondegenerate(phi)) CHECK(square);
            // H / radical is of central type for every phi.
            auto s = radical(phi);
            CHECK(is_square_type(quotient(h, s.generators)));
        }
    }
}

TEST_CASE("symplectic pairing on Zm x Zm is nondegenerate") {
    for (int m : {2, 3, 4, 5}) {
        AbelianGroup h({m, m});
        Bicharacter phi{h, {{0, 1}, {m - 1, 0}}};
        REQUIRE(bicharacter_valid(phi));
        CHECK(is_nondegenerate(phi));
    }
}
