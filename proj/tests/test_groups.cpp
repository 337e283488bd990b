#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "gradalg/groups.hpp"

using namespace gradalg;

namespace {

std::map<int, int> order_profile(const FiniteGroup& g) {
    std::map<int, int> p;
    for (int a = 0; a < g.order(); ++a) ++p[g.element_order(a)];
    return p;
}

std::map<int, int> order_profile_subset(const FiniteGroup& g, const std::vector<int>& elems) {
    std::map<int, int> p;
    for (int a : elems) ++p[g.element_order(a)];
    return p;
}

Extension quaternion_extension() {
    AbelianGroup h({2});
    FiniteGroup q = direct_product(cyclic_group(2), cyclic_group(2));
    auto ext = split_extension(h, q, std::vector<IntMatrixHom>(4, identity_hom(h)));
    auto one = reduce_element(h, {1});
    // Signs of quaternion unit multiplication with 0=e, 1=i, 2=j, 3=k.
    for (auto [a, b] : {std::pair{1, 1}, {2, 2}, {3, 3}, {2, 1}, {3, 2}, {1, 3}})
        ext.beta[a][b] = one;
    return ext;
}

Extension d4_extension() {
    AbelianGroup h({2, 2});
    FiniteGroup q = cyclic_group(2);
    IntMatrixHom twist{h, h, {{1, 1}, {0, 1}}};
    return split_extension(h, q, {identity_hom(h), twist});
}

}  // namespace

TEST_CASE("built-in groups") {
    CHECK(dihedral_d4().order() == 8);
    CHECK(quaternion_q8().order() == 8);
    CHECK(symmetric_s3().order() == 6);
    CHECK(order_profile(dihedral_d4()) == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});
    CHECK(order_profile(quaternion_q8()) == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
    CHECK(order_profile(symmetric_s3()) == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}});
    CHECK_FALSE(dihedral_d4().is_abelian());
    CHECK(cyclic_group(12).is_abelian());
}

TEST_CASE("named group parsing") {
    CHECK(named_group("D4")->order() == 8);
    CHECK(named_group("q8")->order() == 8);
    CHECK(named_group("Z12")->order() == 12);
    CHECK(named_group("Z2 x Z4")->order() == 8);
    CHECK(named_group("Z2xZ2xZ2")->order() == 8);
    CHECK_FALSE(named_group("E8").has_value());
    CHECK_FALSE(named_group("Zx").has_value());
}

TEST_CASE("cayley table validation") {
    CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("centers") {
    CHECK(center(quaternion_q8()).elements == std::vector<int>{0, 4});
    CHECK(center(dihedral_d4()).elements == std::vector<int>{0, 2});
    CHECK(center(symmetric_s3()).elements == std::vector<int>{0});
    CHECK(center(cyclic_group(6)).order() == 6);
}

TEST_CASE("validate_cocycle_beta") {
    AbelianGroup h({2});
    FiniteGroup q = cyclic_group(2);
    auto split = split_extension(h, q, {identity_hom(h), identity_hom(h)});
    CHECK(validate_cocycle_beta(split).ok);

    // beta(c, c) = 1 over trivial action gives the Z4 extension of Z2 by Z2.
    auto z4ext = split;
    z4ext.beta[1][1] = reduce_element(h, {1});
    CHECK(validate_cocycle_beta(z4ext).ok);
    auto g = build_extension_group(z4ext);
    CHECK(order_profile(g) == order_profile(cyclic_group(4)));

    auto bad = split;
    bad.beta[0][1] = reduce_element(h, {1});
    auto rep = validate_cocycle_beta(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.message.find("normalized") != std::string::npos);
    CHECK_THROWS_AS(build_extension_group(bad), std::invalid_argument);
}

TEST_CASE("quaternion group from its extension data") {
    auto ext = quaternion_extension();
    CHECK(validate_cocycle_beta(ext).ok);
    auto g = build_extension_group(ext);
    CHECK(g.order() == 8);
    CHECK(order_profile(g) == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
    CHECK(center(g).order() == 2);
}

TEST_CASE("dihedral group from its split extension data") {
    auto g = build_extension_group(d4_extension());
    CHECK(order_profile(g) == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});
}

TEST_CASE("degenerate extension with trivial kernel") {
    AbelianGroup h;
    auto q = symmetric_s3();
    auto ext = split_extension(h, q, std::vector<IntMatrixHom>(6, identity_hom(h)));
    auto g = build_extension_group(ext);
    CHECK(g.cayley() == q.cayley());
}

TEST_CASE("extension roundtrip: embedded kernel and quotient profiles") {
    for (const auto& ext : {quaternion_extension(), d4_extension()}) {
        auto g = build_extension_group(ext);
        int nh = static_cast<int>(ext.H.element_count());
        std::vector<int> embedded(nh);
        for (int i = 0; i < nh; ++i) embedded[i] = i;
        CHECK(is_normal(g, embedded));
        CHECK(abelian_decomposition(g, embedded).type == ext.H);
        // The projection (h,q) -> q must be a homomorphism onto Q.
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                CHECK(g.mul(a, b) / nh == ext.Q.mul(a / nh, b / nh));
    }
}

TEST_CASE("conjugation action on H") {
    auto ext = d4_extension();
    auto g = build_extension_group(ext);
    auto conj = conjugation_action_on_H(ext);
    int nh = static_cast<int>(ext.H.element_count());
    // Elements (h, e) act trivially on the abelian kernel.
    for (int a = 0; a < nh; ++a) CHECK(hom_equal(conj[a], identity_hom(ext.H)));
    // Elements (0, q) act exactly by action(q); (h, q) the same since H is abelian.
    for (int q = 0; q < ext.Q.order(); ++q)
        for (int hidx = 0; hidx < nh; ++hidx)
            CHECK(hom_equal(conj[q * nh + hidx], ext.action[q]));
    // The generator of Q sends tau = e_2 to r2 tau = e_1 + e_2.
    auto tau = reduce_element(ext.H, {0, 1});
    auto image = apply(conj[nh], tau);
    CHECK(image == reduce_element(ext.H, {1, 1}));
    (void)g;
}

TEST_CASE("normal abelian subgroups of Q8") {
    auto list = normal_abelian_subgroups(quaternion_q8());
    REQUIRE(list.size() == 5);
    CHECK(list[0].type.is_trivial());
    CHECK(list[1].type == AbelianGroup({2}));
    for (int i = 2; i < 5; ++i) CHECK(list[i].type == AbelianGroup({4}));
}

TEST_CASE("normal abelian subgroups of D4") {
    auto list = normal_abelian_subgroups(dihedral_d4());
    REQUIRE(list.size() == 5);
    CHECK(list[0].type.is_trivial());
    CHECK(list[1].type == AbelianGroup({2}));
    CHECK(list[1].sub.elements == std::vector<int>{0, 2});
    int klein = 0, z4 = 0;
    for (int i = 2; i < 5; ++i) {
        if (list[i].type == AbelianGroup({2, 2})) ++klein;
        if (list[i].type == AbelianGroup({4})) ++z4;
    }
    CHECK(klein == 2);
    CHECK(z4 == 1);
}

TEST_CASE("normal abelian subgroups of cyclic groups: one per divisor") {
    for (int n : {4, 6, 12, 15}) {
        auto list = normal_abelian_subgroups(cyclic_group(n));
        int divisors = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) ++divisors;
        CHECK(static_cast<int>(list.size()) == divisors);
    }
}

TEST_CASE("normal abelian subgroups are conjugation-stable, brute force") {
    for (const auto& g : {dihedral_d4(), quaternion_q8(), symmetric_s3(),
                          direct_product(cyclic_group(4), cyclic_group(4))}) {
        for (const auto& nas : normal_abelian_subgroups(g)) {
            for (int a = 0; a < g.order(); ++a)
                for (int x : nas.sub.elements) CHECK(nas.sub.contains(g.conjugate(a, x)));
        }
    }
}

TEST_CASE("abelian decomposition") {
    auto q8 = quaternion_q8();
    auto dec = abelian_decomposition(q8, {0, 1, 4, 5});  // <i>
    CHECK(dec.type == AbelianGroup({4}));
    for (std::size_t idx = 0; idx < 4; ++idx)
        CHECK(dec.index_by_element.at(dec.element_by_index[idx]) == idx);

    auto d4 = dihedral_d4();
    auto klein = abelian_decomposition(d4, {0, 2, 4, 6});  // {e, r2, s, r2s}
    CHECK(klein.type == AbelianGroup({2, 2}));
    // Multiplication transported through coordinates agrees with the table.
    for (int x : {0, 2, 4, 6})
        for (int y : {0, 2, 4, 6}) {
            auto sum = add(klein.type, klein.coords_of(x), klein.coords_of(y));
            CHECK(klein.element_of(sum) == d4.mul(x, y));
        }

    CHECK(abelian_decomposition(cyclic_group(12), {0, 3, 6, 9}).type == AbelianGroup({4}));
    CHECK_THROWS_AS(abelian_decomposition(symmetric_s3(), {0, 1, 2, 3, 4, 5}),
                    std::invalid_argument);
}

TEST_CASE("conjugation_on_subgroup is an action by automorphisms") {
    auto d4 = dihedral_d4();
    auto dec = abelian_decomposition(d4, {0, 2, 4, 6});
    for (int a = 0; a < 8; ++a) {
        auto f = conjugation_on_subgroup(d4, dec, a);
        CHECK(is_automorphism(f));
        for (int b = 0; b < 8; ++b)
            CHECK(hom_equal(compose(conjugation_on_subgroup(d4, dec, a),
                                    conjugation_on_subgroup(d4, dec, b)),
                            conjugation_on_subgroup(d4, dec, d4.mul(a, b))));
    }
}
