#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weylq/characters.hpp"
#include "weylq/quotient.hpp"

#include <set>
#include <string>
#include <vector>

using namespace weylq;

namespace {

Weight wt(std::vector<i64> v) { return Weight::of_ints(std::move(v)); }

using Status = FactorizationReport::Status;

std::vector<std::vector<i64>> mu_grid(int rank, int max_sum) {
    std::vector<std::vector<i64>> out;
    for (const Weight& w : partitions_up_to(rank, max_sum)) out.push_back(w.ints());
    return out;
}

} // namespace

TEST_CASE("coordinate shifts round-trip") {
    const int n = 6;
    std::set<i64> image_b, image_d;
    for (i64 x = -n; x <= n; ++x) {
        if (x == 0) continue;
        CHECK(from_shifted_b(to_shifted_b(x)) == x);
        image_b.insert(to_shifted_b(x));
        image_d.insert(to_shifted_d(x));
    }
    // The type-B shift is onto {-(n-1)..n}; the type-D collapse is onto
    // {-(n-1)..n-1} and two-to-one exactly over 0.
    CHECK(image_b.size() == 2 * n);
    CHECK(*image_b.begin() == -(n - 1));
    CHECK(*image_b.rbegin() == n);
    CHECK(image_d.size() == 2 * n - 1);
    CHECK(to_shifted_d(1) == 0);
    CHECK(to_shifted_d(-1) == 0);
    CHECK(to_shifted_d(5) == 4);
    CHECK(to_shifted_d(-5) == -4);
}

TEST_CASE("type A rank 8 step 3") {
    auto r = ell_quotient(Type::A, 8, {1, 2, 3, 4, 4, 4, 6, 6}, 3);
    REQUIRE_FALSE(r.zero);
    REQUIRE(r.datum.blocks.size() == 3);
    CHECK(r.datum.blocks[0].indices == std::vector<int>{3, 5});
    CHECK(r.datum.blocks[1].indices == std::vector<int>{2, 6, 7});
    CHECK(r.datum.blocks[2].indices == std::vector<int>{1, 4, 8});
    CHECK(r.quotient.comps[0] == std::vector<i64>{1, 1});
    CHECK(r.quotient.comps[1] == std::vector<i64>{1, 2, 2});
    CHECK(r.quotient.comps[2] == std::vector<i64>{0, 1, 2});
    CHECK(levi_label(r.datum) == "GL2xGL3xGL3");
    CHECK(r.w0.window() == std::vector<int>{2, 1, 3, 5, 6, 4, 7, 8});
    CHECK(r.sign == -1);
    for (const auto& blk : r.datum.blocks) CHECK(blk.kind == BlockKind::GL);
}

TEST_CASE("type C rank 8 step 3") {
    auto r = ell_quotient(Type::C, 8, {1, 2, 3, 4, 4, 4, 6, 6}, 3);
    REQUIRE_FALSE(r.zero);
    REQUIRE(r.datum.blocks.size() == 2);
    CHECK(r.datum.blocks[0].kind == BlockKind::Sp);
    CHECK(r.datum.blocks[0].indices == std::vector<int>{3, 5});
    CHECK(r.datum.blocks[1].kind == BlockKind::GL);
    CHECK(r.datum.blocks[1].indices == std::vector<int>{-7, -6, -2, 1, 4, 8});
    CHECK(r.quotient.comps[0] == std::vector<i64>{1, 1});
    CHECK(r.quotient.comps[1] == std::vector<i64>{-2, -2, -1, 0, 1, 2});
    CHECK(levi_label(r.datum) == "Sp4xGL6");
    CHECK(r.datum.alpha_offsets == std::vector<int>{2});
    CHECK(r.sign == -1);
}

TEST_CASE("type D rank 8 step 3") {
    auto r = ell_quotient(Type::D, 8, {1, 2, 3, 4, 4, 4, 6, 6}, 3);
    REQUIRE_FALSE(r.zero);
    REQUIRE(r.datum.blocks.size() == 2);
    CHECK(r.datum.blocks[0].kind == BlockKind::SOeven);
    CHECK(r.datum.blocks[0].indices == std::vector<int>{2, 6, 7});
    CHECK(r.datum.blocks[1].indices == std::vector<int>{-8, -4, -1, 3, 5});
    CHECK(r.quotient.comps[0] == std::vector<i64>{1, 2, 2});
    CHECK(r.quotient.comps[1] == std::vector<i64>{-2, -1, 0, 1, 1});
    CHECK(levi_label(r.datum) == "SO6xGL5");
    CHECK(r.datum.alpha_offsets == std::vector<int>{2});
    CHECK(r.sign == -1);
}

TEST_CASE("type B rank 6 step 2 (even branch)") {
    auto r = ell_quotient(Type::B, 6, {2, 5, 5, 6, 7, 9}, 2);
    REQUIRE_FALSE(r.zero);
    REQUIRE(r.datum.blocks.size() == 1);
    CHECK(r.datum.blocks[0].kind == BlockKind::GL);
    CHECK(r.datum.blocks[0].indices == std::vector<int>{-6, -2, -1, 3, 4, 5});
    CHECK(r.quotient.comps[0] == std::vector<i64>{-5, -2, -1, 3, 3, 3});
    CHECK(levi_label(r.datum) == "GL6");
    CHECK(r.w0.window() == std::vector<int>{1, 3, 2, 4, 6, 5});
    CHECK(r.sign == +1);
}

TEST_CASE("type B rank 6 step 3 (odd branch)") {
    auto r = ell_quotient(Type::B, 6, {1, 5, 5, 6, 7, 9}, 3);
    REQUIRE_FALSE(r.zero);
    REQUIRE(r.datum.blocks.size() == 2);
    CHECK(r.datum.blocks[0].kind == BlockKind::SOodd);
    CHECK(r.datum.blocks[0].indices == std::vector<int>{1, 3});
    CHECK(r.datum.blocks[1].indices == std::vector<int>{-4, -2, 5, 6});
    CHECK(r.quotient.comps[0] == std::vector<i64>{0, 1});
    CHECK(r.quotient.comps[1] == std::vector<i64>{-2, -2, 3, 3});
    CHECK(levi_label(r.datum) == "SO5xGL4");
    CHECK(r.datum.alpha_offsets == std::vector<int>{1});
    CHECK(r.w0.window() == std::vector<int>{2, 1, 5, 4, 3, 6});
    CHECK(r.sign == +1);
}

TEST_CASE("step 1 reproduces the identity decomposition") {
    for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
        const int n = 4;
        std::vector<i64> mu = {0, 1, 1, 3};
        auto r = ell_quotient(t, n, mu, 1);
        REQUIRE_FALSE(r.zero);
        CHECK(r.sign == +1);
        CHECK(r.w0.is_identity());
        REQUIRE(r.datum.blocks.size() == 1);
        CHECK(r.datum.blocks[0].indices == std::vector<int>{1, 2, 3, 4});
        CHECK(r.quotient.comps[0] == mu);
        switch (t) {
            case Type::A: CHECK(levi_label(r.datum) == "GL4"); break;
            case Type::B: CHECK(levi_label(r.datum) == "SO9"); break;
            case Type::C: CHECK(levi_label(r.datum) == "Sp8"); break;
            case Type::D: CHECK(levi_label(r.datum) == "SO8"); break;
        }
    }
}

TEST_CASE("even steps are rejected for types C and D") {
    CHECK_THROWS_AS(ell_quotient(Type::C, 2, {0, 1}, 2), user_error);
    CHECK_THROWS_AS(ell_quotient(Type::C, 3, {1, 1, 2}, 4), user_error);
    CHECK_THROWS_AS(ell_quotient(Type::D, 2, {0, 0}, 2), user_error);
    CHECK_THROWS_AS(ell_quotient(Type::D, 4, {0, 1, 1, 2}, 2), user_error);
    // Bad inputs.
    CHECK_THROWS_AS(ell_quotient(Type::A, 3, {1, 2}, 2), user_error);
    CHECK_THROWS_AS(ell_quotient(Type::A, 2, {2, 1}, 2), user_error);
    CHECK_THROWS_AS(ell_quotient(Type::A, 2, {1, 2}, 0), user_error);
}

TEST_CASE("rank-2 obstruction for even step in type D") {
    const RootSystem rs = RootSystem::build(Type::D, 2);
    ZPoly image = phi_l(delta_product(rs.positive_roots(), 2), 2);
    ZPoly expected(2);
    expected.add_term(wt({0, 0}), 1);
    expected.add_term(wt({0, 1}), 1);
    CHECK(image == expected);

    auto rep = verify_quotient_factorization(Type::D, 2, {0, 0}, 2);
    CHECK(rep.status == Status::not_factorizable);
    CHECK(rep.ok);
    CHECK(rep.lhs == expected);
}

TEST_CASE("product identity on the small grid, valid parities") {
    int checked = 0, zeros = 0;
    for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
        const int lo = t == Type::D ? 2 : 1;
        for (int n = lo; n <= 4; ++n) {
            for (int ell : {1, 2, 3, 5}) {
                if ((t == Type::C || t == Type::D) && ell % 2 == 0) continue;
                for (const auto& mu : mu_grid(n, 5)) {
                    auto rep = verify_quotient_factorization(t, n, mu, ell);
                    CHECK(rep.ok);
                    const bool good = rep.status == Status::factorized ||
                                      rep.status == Status::zero;
                    CHECK(good);
                    if (!rep.ok || !good)
                        MESSAGE("type ", type_to_string(t), " n=", n, " ell=", ell);
                    ++checked;
                    if (rep.status == Status::zero) ++zeros;
                }
            }
        }
    }
    // The grid must exercise both outcomes in quantity.
    CHECK(checked > 500);
    CHECK(zeros > 50);
    CHECK(checked - zeros > 100);
}

TEST_CASE("even step in type C factors through an extra odd-orthogonal block") {
    int quasi = 0;
    for (int n = 2; n <= 4; ++n) {
        for (int ell : {2, 4}) {
            for (const auto& mu : mu_grid(n, 5)) {
                auto rep = verify_quotient_factorization(Type::C, n, mu, ell);
                CHECK(rep.ok);
                const bool good = rep.status == Status::quasi_factorized ||
                                  rep.status == Status::factorized ||
                                  rep.status == Status::zero;
                CHECK(good);
                if (rep.status == Status::quasi_factorized) ++quasi;
            }
        }
    }
    CHECK(quasi > 20);
}

TEST_CASE("even step in type D never certifies a product form on the grid") {
    int certified = 0, inconclusive = 0;
    for (int n = 2; n <= 4; ++n) {
        for (int ell : {2, 4}) {
            for (const auto& mu : mu_grid(n, 5)) {
                auto rep = verify_quotient_factorization(Type::D, n, mu, ell);
                const bool good = rep.status == Status::zero ||
                                  rep.status == Status::not_factorizable ||
                                  rep.status == Status::inconclusive;
                CHECK(good);
                if (rep.status == Status::not_factorizable) {
                    CHECK(rep.ok);
                    ++certified;
                }
                if (rep.status == Status::inconclusive) ++inconclusive;
            }
        }
    }
    CHECK(certified > 5);
    CHECK(certified + inconclusive > 20);
}

TEST_CASE("vanishing matches the character-side oracle in type A") {
    CharacterRing ring(RootSystem::build(Type::A, 2));
    for (int ell : {2, 3}) {
        for (const auto& mu : mu_grid(2, 4)) {
            const i64 total = mu[0] + mu[1];
            bool oracle_nonzero = false;
            int oracle_sign = 0;
            if (total % ell == 0) {
                for (const Weight& lam : partitions_exact(2, static_cast<int>(total / ell))) {
                    auto tab = ring.psi_plethysm_schur(lam, ell);
                    auto it = tab.find(wt({mu[0], mu[1]}));
                    if (it != tab.end() && it->second != 0) {
                        oracle_nonzero = true;
                        oracle_sign = it->second > 0 ? 1 : -1;
                        CHECK(std::abs(it->second) == 1);
                    }
                }
            }
            auto r = ell_quotient(Type::A, 2, mu, ell);
            CHECK(r.zero == !oracle_nonzero);
            if (!r.zero) CHECK(r.sign == oracle_sign);
        }
    }
}

TEST_CASE("factor shape depends only on type, rank and step") {
    for (Type t : {Type::A, Type::B, Type::C, Type::D}) {
        const int lo = t == Type::D ? 2 : 1;
        for (int n = lo; n <= 5; ++n) {
            for (int ell = 1; ell <= 5; ++ell) {
                if ((t == Type::C || t == Type::D) && ell % 2 == 0) continue;
                std::set<std::string> labels;
                std::set<std::string> shapes;
                for (const auto& mu : mu_grid(n, 8)) {
                    auto r = ell_quotient(t, n, mu, ell);
                    if (r.zero) continue;
                    CHECK(levi_dominant(r.datum, r.quotient));
                    labels.insert(levi_label(r.datum));
                    std::string shape;
                    for (const auto& blk : r.datum.blocks)
                        shape += block_kind_name(blk.kind) + std::to_string(blk.size()) + "|";
                    shapes.insert(shape);
                }
                CHECK(labels.size() <= 1);
                CHECK(shapes.size() <= 1);
            }
        }
    }
}
