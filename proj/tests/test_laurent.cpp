#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylq/laurent.hpp"
#include "weylq/rootsys.hpp"

#include <random>

using namespace weylq;

namespace {

Weight wt(std::vector<i64> v) { return Weight::of_ints(std::move(v)); }

ZPoly random_poly(std::mt19937& rng, std::size_t rank, int n_terms) {
    std::uniform_int_distribution<i64> expo(-3, 3), coeff(-4, 4);
    ZPoly p(rank);
    for (int t = 0; t < n_terms; ++t) {
        std::vector<i64> e(rank);
        for (auto& x : e) x = expo(rng);
        p.add_term(Weight::of_ints(e), coeff(rng));
    }
    return p;
}

/** x^rho sum_w eps(w) x^{-w rho}, the alternating side of (1 - x^a) products. */
ZPoly signed_rho_sum(const RootSystem& rs) {
    ZPoly q(static_cast<std::size_t>(rs.rank()));
    for (const auto& w : rs.weyl_group()) q.add_term(rs.rho() - w.act(rs.rho()), w.det());
    return q;
}

} // namespace

TEST_CASE("monomial product law and binomial cancellation") {
    auto m1 = ZPoly::monomial(wt({1, -2}), 3);
    auto m2 = ZPoly::monomial(wt({0, 5}), -2);
    CHECK(m1 * m2 == ZPoly::monomial(wt({1, 3}), -6));

    Weight a = wt({-1, 1});
    ZPoly one = ZPoly::one(2);
    ZPoly lo = one - ZPoly::monomial(a, 1);
    ZPoly hi = one + ZPoly::monomial(a, 1);
    CHECK(lo * hi == one - ZPoly::monomial(a.scaled(2), 1));
}

TEST_CASE("delta product for GL_3 has six unit terms") {
    auto a3 = RootSystem::build(Type::A, 3);
    ZPoly d = delta_product(a3.positive_roots(), 3);
    CHECK(d.n_terms() == 6);
    for (const auto& [e, c] : d.terms()) CHECK((c == 1 || c == -1));
    CHECK(d.coefficient(Weight(3)) == 1);
}

TEST_CASE("delta product matches the alternating rho sum at rank <= 4") {
    for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
        for (int rank = 1; rank <= 4; ++rank) {
            auto rs = RootSystem::build(t, rank);
            CHECK(delta_product(rs.positive_roots(), static_cast<std::size_t>(rank)) ==
                  signed_rho_sum(rs));
        }
    }
}

TEST_CASE("psi_l is a ring morphism and phi_l is its one-sided inverse") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 20; ++trial) {
        ZPoly p = random_poly(rng, 3, 6);
        ZPoly q = random_poly(rng, 3, 6);
        CHECK(psi_l(p, 1) == p);
        CHECK(psi_l(p * q, 3) == psi_l(p, 3) * psi_l(q, 3));
        CHECK(phi_l(psi_l(p, 3), 3) == p);
        // phi_l(psi_l(P) Q) = P phi_l(Q)
        CHECK(phi_l(psi_l(p, 2) * q, 2) == p * phi_l(q, 2));
    }
}

TEST_CASE("phi_l keeps exactly the divisible exponents") {
    CHECK(phi_l(ZPoly::monomial(wt({2, 4}), 1), 2) == ZPoly::monomial(wt({1, 2}), 1));
    CHECK(phi_l(ZPoly::monomial(wt({1, 2}), 1), 2).is_zero());
    // psi_l phi_l projects onto the divisible part
    ZPoly mix = ZPoly::monomial(wt({2, -4}), 5) + ZPoly::monomial(wt({1, 0}), 7);
    CHECK(psi_l(phi_l(mix, 2), 2) == ZPoly::monomial(wt({2, -4}), 5));
}

TEST_CASE("the SO_4 obstruction product") {
    // phi_2((1 - x2/x1)(1 - x1 x2)) = 1 + x2
    auto d2 = RootSystem::build(Type::D, 2);
    ZPoly d = delta_product(d2.positive_roots(), 2);
    ZPoly expect = ZPoly::one(2) + ZPoly::monomial(wt({0, 1}), 1);
    CHECK(phi_l(d, 2) == expect);
}

TEST_CASE("packed and generic multiplication agree") {
    std::mt19937 rng(7);
    ZPoly a(4), b(4);
    std::uniform_int_distribution<i64> expo(-6, 6), coeff(-3, 3);
    for (int t = 0; t < 90; ++t) {
        std::vector<i64> e(4);
        for (auto& x : e) x = expo(rng);
        a.add_term(Weight::of_ints(e), coeff(rng));
        for (auto& x : e) x = expo(rng);
        b.add_term(Weight::of_ints(e), coeff(rng));
    }
    REQUIRE(a.n_terms() * b.n_terms() >= 4096); // forces the packed path
    ZPoly prod = a * b;
    ZPoly ref(4);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) ref.add_term(ea + eb, ca * cb);
    CHECK(prod == ref);
}

TEST_CASE("q-coefficient polynomials multiply exactly") {
    ZqPoly p(2), q(2);
    p.add_term(wt({1, 0}), QPoly::monomial(1, 1));          // q * x1
    p.add_term(wt({0, 0}), QPoly(1));                       // 1
    q.add_term(wt({-1, 0}), QPoly(1) + QPoly::monomial(1, 2)); // (1 + q^2)/x1
    ZqPoly prod = p * q;
    CHECK(prod.coefficient(wt({0, 0})) == QPoly::monomial(1, 1) + QPoly::monomial(1, 3));
    CHECK(prod.coefficient(wt({-1, 0})) == QPoly(1) + QPoly::monomial(1, 2));
}

TEST_CASE("canonical text form") {
    ZPoly p(2);
    p.add_term(wt({0, 1}), -2);
    p.add_term(wt({1, -1}), 1);
    CHECK(p.str() == "-2 * x1^0 x2^1\n1 * x1^1 x2^-1");
    CHECK(ZPoly(2).str() == "0");
}
