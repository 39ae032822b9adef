#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "weylq/characters.hpp"

using namespace weylq;

namespace {
Weight wi(std::vector<i64> v) { return Weight::of_ints(std::move(v)); }

using Expansion = std::map<Weight, i64>;
} // namespace

TEST_CASE("partition enumeration") {
    auto up = partitions_up_to(2, 2);
    REQUIRE(up.size() == 4);
    CHECK(up[0] == wi({0, 0}));
    CHECK(up[1] == wi({0, 1}));
    CHECK(up[2] == wi({0, 2}));
    CHECK(up[3] == wi({1, 1}));
    auto ex = partitions_exact(3, 3);
    REQUIRE(ex.size() == 3);
    CHECK(ex[0] == wi({0, 0, 3}));
    CHECK(ex[1] == wi({0, 1, 2}));
    CHECK(ex[2] == wi({1, 1, 1}));
    CHECK(partitions_up_to(4, 6).size() == 27); // p(k, <=4 parts) summed over k=0..6
}

TEST_CASE("small characters in closed form") {
    SUBCASE("GL_2") {
        CharacterRing ring(RootSystem::build(Type::A, 2));
        CHECK(ring.character(wi({0, 1})).str() == "1 * x1^0 x2^1\n1 * x1^1 x2^0");
        CHECK(ring.character(wi({0, 2})).str() ==
              "1 * x1^0 x2^2\n1 * x1^1 x2^1\n1 * x1^2 x2^0");
        CHECK(ring.character(wi({1, 1})).str() == "1 * x1^1 x2^1");
        // determinant twists: negative GL weights are fine
        CHECK(ring.character(wi({-1, -1})).str() == "1 * x1^-1 x2^-1");
    }
    SUBCASE("C_2 standard representation") {
        CharacterRing ring(RootSystem::build(Type::C, 2));
        CHECK(ring.character(wi({0, 1})).str() ==
              "1 * x1^-1 x2^0\n1 * x1^0 x2^-1\n1 * x1^0 x2^1\n1 * x1^1 x2^0");
    }
}

TEST_CASE("dimensions against the product formula") {
    CharacterRing a3(RootSystem::build(Type::A, 3));
    CHECK(a3.dim(wi({0, 1, 2})) == 8);
    CHECK(a3.dim(wi({0, 0, 3})) == 10);
    CharacterRing b2(RootSystem::build(Type::B, 2));
    CHECK(b2.dim(wi({0, 1})) == 5);
    CHECK(b2.dim(wi({1, 1})) == 10);
    CHECK(b2.dim(wi({0, 2})) == 14);
    CharacterRing c2(RootSystem::build(Type::C, 2));
    CHECK(c2.dim(wi({0, 1})) == 4);
    CHECK(c2.dim(wi({1, 1})) == 5);
    CHECK(c2.dim(wi({0, 2})) == 10);
    CharacterRing d2(RootSystem::build(Type::D, 2));
    CHECK(d2.dim(wi({0, 1})) == 4);
    CHECK(d2.dim(wi({1, 1})) == 3);
    CHECK(d2.dim(wi({-1, 1})) == 3);
}

TEST_CASE("weight multiplicities") {
    CharacterRing b2(RootSystem::build(Type::B, 2));
    CHECK(b2.weight_multiplicity(wi({0, 1}), wi({0, 0})) == 1);
    CHECK(b2.weight_multiplicity(wi({1, 1}), wi({0, 0})) == 2); // adjoint: rank copies of 0
    CharacterRing c2(RootSystem::build(Type::C, 2));
    CHECK(c2.weight_multiplicity(wi({1, 1}), wi({0, 0})) == 1);
    CHECK(c2.weight_multiplicity(wi({0, 2}), wi({0, 0})) == 2);
    CHECK(c2.weight_multiplicity(wi({0, 1}), wi({0, 0})) == 0);
}

TEST_CASE("characters are invariant under the group") {
    for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
        CharacterRing ring(RootSystem::build(t, 3));
        for (const Weight& lam : {wi({0, 1, 2}), wi({1, 1, 3})}) {
            const ZPoly& ch = ring.character(lam);
            for (const auto& s : ring.root_system().simple_reflections())
                CHECK(weyl_act(s, ch) == ch);
        }
    }
}

TEST_CASE("tensor product decompositions") {
    SUBCASE("GL_2 Clebsch-Gordan") {
        CharacterRing ring(RootSystem::build(Type::A, 2));
        ZPoly p = ring.character(wi({0, 1})) * ring.character(wi({0, 1}));
        Expansion expect{{wi({0, 2}), 1}, {wi({1, 1}), 1}};
        CHECK(ring.decompose(p) == expect);
    }
    SUBCASE("C_2 standard squared") {
        CharacterRing ring(RootSystem::build(Type::C, 2));
        ZPoly p = ring.character(wi({0, 1})) * ring.character(wi({0, 1}));
        Expansion expect{{wi({0, 0}), 1}, {wi({0, 2}), 1}, {wi({1, 1}), 1}};
        CHECK(ring.decompose(p) == expect);
    }
    SUBCASE("B_2 vector squared") {
        CharacterRing ring(RootSystem::build(Type::B, 2));
        ZPoly p = ring.character(wi({0, 1})) * ring.character(wi({0, 1}));
        Expansion expect{{wi({0, 0}), 1}, {wi({0, 2}), 1}, {wi({1, 1}), 1}};
        CHECK(ring.decompose(p) == expect);
    }
}

TEST_CASE("decompose round trip and agreement with the subtraction oracle") {
    for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
        CharacterRing ring(RootSystem::build(t, 2));
        std::vector<Weight> lams = partitions_up_to(2, 3);
        if (t == Type::D) {
            lams.push_back(wi({-1, 1}));
            lams.push_back(wi({-2, 2}));
            lams.push_back(wi({-1, 2}));
        }
        if (t == Type::A) lams.push_back(wi({-2, 1}));
        for (const Weight& lam : lams) {
            Expansion expect{{lam, 1}};
            CHECK(ring.decompose(ring.character(lam)) == expect);
        }
        for (const Weight& lam : lams)
            for (const Weight& mu : lams) {
                ZPoly p = ring.character(lam) * ring.character(mu);
                CHECK(ring.decompose(p) == ring.decompose_by_subtraction(p));
            }
    }
}

TEST_CASE("Jacobi-Trudi cross-check at rank 3") {
    CharacterRing ring(RootSystem::build(Type::A, 3));
    auto h = [&](i64 m) {
        if (m < 0) return ZPoly(3);
        return ring.character(wi({0, 0, m}));
    };
    // mu=(1,1,2) increasing, i.e. parts 2 >= 1 >= 1 decreasing
    std::vector<i64> parts = {2, 1, 1};
    auto entry = [&](int i, int j) { return h(parts[static_cast<std::size_t>(i)] - i + j); };
    ZPoly det(3);
    int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (int k = 0; k < 6; ++k) {
        ZPoly prod = entry(0, perms[k][0]) * entry(1, perms[k][1]) * entry(2, perms[k][2]);
        if (k < 3) det += prod;
        else det -= prod;
    }
    CHECK(det == ring.character(wi({1, 1, 2})));
}

TEST_CASE("power-sum plethysm on characters") {
    SUBCASE("GL_2 classics") {
        CharacterRing ring(RootSystem::build(Type::A, 2));
        CHECK(ring.psi_plethysm_schur(wi({0, 1}), 1) == Expansion{{wi({0, 1}), 1}});
        CHECK(ring.psi_plethysm_schur(wi({0, 1}), 2) ==
              Expansion{{wi({0, 2}), 1}, {wi({1, 1}), -1}});
        CHECK(ring.psi_plethysm_schur(wi({0, 1}), 3) ==
              Expansion{{wi({0, 3}), 1}, {wi({1, 2}), -1}});
    }
    SUBCASE("rank-1 symplectic") {
        CharacterRing ring(RootSystem::build(Type::C, 1));
        CHECK(ring.psi_plethysm_schur(wi({1}), 2) == Expansion{{wi({2}), 1}, {wi({0}), -1}});
    }
}

TEST_CASE("adjoint plethysm tables") {
    SUBCASE("type A is exact and graded") {
        CharacterRing ring(RootSystem::build(Type::A, 2));
        CharExpansionZ e = phi_plethysm_truncated(ring, wi({1, 1}), 2, 0);
        CHECK(!e.truncation_bound.has_value());
        CHECK(e.terms == Expansion{{wi({0, 1}), -1}});
        e = phi_plethysm_truncated(ring, wi({0, 2}), 2, 0);
        CHECK(e.terms == Expansion{{wi({0, 1}), 1}});
        e = phi_plethysm_truncated(ring, wi({1, 2}), 2, 0); // |mu| not divisible by ell
        CHECK(e.terms.empty());
        CHECK(!e.truncation_bound.has_value());
    }
    SUBCASE("rank-1 symplectic trivial weight: alternating series") {
        CharacterRing ring(RootSystem::build(Type::C, 1));
        CharExpansionZ e = phi_plethysm_truncated(ring, wi({0}), 2, 4);
        REQUIRE(e.truncation_bound.has_value());
        CHECK(*e.truncation_bound == 4);
        Expansion expect{{wi({0}), 1}, {wi({1}), -1}, {wi({2}), 1}, {wi({3}), -1}, {wi({4}), 1}};
        CHECK(e.terms == expect);
    }
    SUBCASE("ell = 1 is the identity") {
        CharacterRing ring(RootSystem::build(Type::B, 2));
        CharExpansionZ e = phi_plethysm_truncated(ring, wi({1, 2}), 1, 5);
        CHECK(e.terms == Expansion{{wi({1, 2}), 1}});
    }
    SUBCASE("parallel tables agree with serial ones") {
        CharacterRing ring(RootSystem::build(Type::A, 3));
        auto lams = partitions_up_to(3, 4);
        CHECK(psi_table(ring, 2, lams, 1) == psi_table(ring, 2, lams, 3));
    }
}

TEST_CASE("Hall-Littlewood expansions") {
    SUBCASE("GL_2 and GL_3 Kostka-Foulkes") {
        CharacterRing g2(RootSystem::build(Type::A, 2));
        CharExpansionQ e = hall_littlewood_truncated(g2, wi({1, 1}), 0);
        REQUIRE(e.terms.size() == 2);
        CHECK(e.terms.at(wi({1, 1})) == QPolyHalf{QPoly(1), false});
        CHECK(e.terms.at(wi({0, 2})) == QPolyHalf{QPoly::monomial(1, 1), false});
        CharacterRing g3(RootSystem::build(Type::A, 3));
        e = hall_littlewood_truncated(g3, wi({1, 1, 1}), 0);
        REQUIRE(e.terms.size() == 3);
        CHECK(e.terms.at(wi({1, 1, 1})) == QPolyHalf{QPoly(1), false});
        CHECK(e.terms.at(wi({0, 1, 2})) ==
              QPolyHalf{QPoly::monomial(1, 1) + QPoly::monomial(1, 2), false});
        CHECK(e.terms.at(wi({0, 0, 3})) == QPolyHalf{QPoly::monomial(1, 3), false});
    }
    SUBCASE("C_2 trivial weight") {
        CharacterRing ring(RootSystem::build(Type::C, 2));
        CharExpansionQ e = hall_littlewood_truncated(ring, wi({0, 0}), 2);
        REQUIRE(e.truncation_bound.has_value());
        REQUIRE(e.terms.size() == 3);
        CHECK(e.terms.at(wi({0, 0})) == QPolyHalf{QPoly(1), false});
        CHECK(e.terms.at(wi({1, 1})) == QPolyHalf{QPoly::monomial(1, 2), false});
        // the adjoint coefficient records the exponents 1, 3 of Sp_4
        CHECK(e.terms.at(wi({0, 2})) ==
              QPolyHalf{QPoly::monomial(1, 1) + QPoly::monomial(1, 3), false});
    }
    SUBCASE("evaluation at q=1 gives weight multiplicities") {
        for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
            CharacterRing ring(RootSystem::build(t, 2));
            const RootSystem& rs = ring.root_system();
            PartitionFn pf(rs.positive_roots(), 2);
            for (const Weight& lam : partitions_up_to(2, 3))
                for (const Weight& mu : partitions_up_to(2, 3)) {
                    QPoly k = lusztig_q(rs, ring.group(), pf, lam, mu);
                    CHECK(k.nonnegative());
                    CHECK(k.at_one() == ring.weight_multiplicity(lam, mu));
                }
        }
    }
}
