#include <doctest.h>

#include "jack/error.hpp"
#include "jack/lattice.hpp"
#include "jack/lr.hpp"

using namespace jack;

namespace {

LatticeRational lr(std::initializer_list<std::pair<BoxCoord, int>> l) {
    LatticeRational::Orders o;
    for (const auto& [b, k] : l) o[b] = k;
    return LatticeRational(o);
}

// Every row and every column carries as many zeros as poles.
bool balanced_lines(const LatticeRational& t) {
    std::map<int, int> rows, cols;
    for (const auto& [b, k] : t.orders()) {
        rows[b.y] += k;
        cols[b.x] += k;
    }
    for (const auto& [y, s] : rows)
        if (s != 0) return false;
    for (const auto& [x, s] : cols)
        if (s != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("elementary factor") {
    CHECK(t_box({0, 0}) == lr({{{0, 0}, 1}, {{1, 1}, 1}, {{1, 0}, -1}, {{0, 1}, -1}}));
    CHECK((t_box({0, 0}) * t_box({0, 0})).order_at({1, 1}) == 2);
    CHECK(t_gamma({{{0, 0}, 1}}) == t_box({0, 0}));
    CHECK((t_box({2, 3}) / t_box({2, 3})).is_one());
    CHECK(t_box({0, 0}).shifted({2, 3}) == t_box({2, 3}));
    CHECK(t_box({0, 0}).inverse() * t_box({0, 0}) == LatticeRational());
    CHECK(LatticeRational::factor({1, 1}, 0).is_one());
}

TEST_CASE("T of a partition") {
    const LatticeRational t = t_partition(Partition{3, 3, 1});
    CHECK(t == lr({{{0, 0}, 1}, {{1, 3}, 1}, {{3, 2}, 1}, {{0, 3}, -1}, {{1, 2}, -1}, {{3, 0}, -1}}));
    CHECK(t_partition(Partition{}).is_one());
    CHECK(t_partition(Partition{1}) == t_box({0, 0}));
    for (int k = 0; k <= 10; ++k)
        for (const auto& mu : partitions_of(k)) {
            REQUIRE(t_partition(mu) == t_gamma(as_multiset(mu)));
            REQUIRE(t_partition(mu).zero_count() == t_partition(mu).pole_count());
        }
}

TEST_CASE("T of a star product") {
    const Partition mu{3, 3, 1}, nu{4, 4, 3, 1, 1};
    const LatticeRational t = t_star(mu, nu);
    CHECK(t == t_star(nu, mu));
    bool has_double = false;
    for (const auto& [b, k] : t.orders()) has_double |= k == 2;
    CHECK(has_double);
    CHECK(t_star(mu, Partition{}).is_one());
    LatticeRational prod;
    for (auto b : nu.boxes()) prod *= t_partition(mu).shifted(b);
    CHECK(prod == t);
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (const auto& p : partitions_of(a))
                for (const auto& q : partitions_of(b)) {
                    const LatticeRational s = t_star(p, q);
                    REQUIRE(s.zero_count() == s.pole_count());
                    REQUIRE(balanced_lines(s));
                }
}

TEST_CASE("residues and values") {
    // T_(1) = u(u-[1,1]) / ((u-[1,0])(u-[0,1]))
    const AlphaPoly A = AlphaPoly::alpha();
    CHECK(residue_at(t_box({0, 0}), {1, 0}) == AlphaRat(A, A + 1));
    CHECK_THROWS_AS(residue_at(t_box({0, 0}), {0, 0}), NotASimplePole);
    CHECK_THROWS_AS(residue_at(t_box({0, 0}) * t_box({0, 0}), {1, 0}), NotASimplePole);
    CHECK(value_at(t_box({0, 0}), {2, 0}) == AlphaRat(2 * A * (A + 1), A * (2 * A + 1)));
    CHECK_THROWS_AS(value_at(t_box({0, 0}), {1, 1}), PoleOrZeroAtPoint);
}

TEST_CASE("order formula bridge") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (const auto& mu : partitions_of(a))
                for (const auto& nu : partitions_of(b)) {
                    const LatticeRational t = t_star(mu, nu);
                    for (int x = -1; x <= 9; ++x)
                        for (int y = -1; y <= 9; ++y) REQUIRE(order_formula(mu, nu, {x, y}) == -order_at(t, {x, y}));
                }
}

TEST_CASE("sum-product identity, small cases") {
    CHECK(verify_sum_product(Partition{}, Partition{}).ok);
    CHECK(verify_sum_product(Partition{1}, Partition{}).ok);
    CHECK(verify_sum_product(Partition{1}, Partition{1}).ok);
    CHECK(verify_sum_product(Partition{2, 1}, Partition{1, 1}).ok);
    CHECK(verify_sum_product(Partition{2}, Partition{2, 1, 1}).ok);
}

TEST_CASE("expansion lemma") {
    const auto e = expansion_relative_to(Partition{1}, {0, 0});
    CHECK(e.row_ratio == LatticeRational::factor({0, 1}, -1));
    CHECK(e.column_ratio == LatticeRational::factor({1, 0}, -1));
    CHECK(e.product() == t_partition(Partition{1}));
    CHECK(expansion_relative_to(Partition{3, 3, 1}, {2, 1}).product() == t_partition(Partition{3, 3, 1}));
    const Partition big{7, 4, 2, 2, 1};
    for (auto s : inner_corners(big)) {
        const auto f = expansion_relative_to(big, s);
        CHECK(f.product() == t_partition(big));
        CHECK(expansion_quadrants_hold(f, s));
    }
    CHECK_THROWS_AS(expansion_relative_to(Partition{3, 3, 1}, {0, 0}), NotAnInnerCorner);
}

TEST_CASE("flip and mirror rules") {
    CHECK(flip_rule_check(Partition{1}, {0, 0}, 2, 2));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (const auto& sigma : partitions_in_rectangle(m, n)) {
                REQUIRE(mirror_rule_check(sigma, m, n));
                for (auto t : inner_corners(sigma)) REQUIRE(flip_rule_check(sigma, t, m, n));
            }
    CHECK_THROWS_AS(flip_rule_check(Partition{4}, {3, 0}, 3, 3), NotContained);
}

TEST_CASE("three-quadrant decomposition") {
    const auto q = mumu_quadrants(Partition{1}, 2, 2);
    CHECK(q.product() == t_star(Partition{1}, Partition{2, 1}));
    const auto full = mumu_quadrants(Partition::rectangle(2, 3), 2, 3);
    CHECK(full.lower_hooks.is_one());
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const auto& mu : partitions_in_rectangle(m, n)) {
                const Partition mubar = complement(mu, m, n);
                const auto a = mumu_quadrants(mu, m, n), b = mumu_quadrants(mubar, m, n);
                REQUIRE(a.product() == t_star(mu, mubar));
                REQUIRE(a.boxes == b.boxes);
                REQUIRE(a.lower_hooks == b.lower_hooks);
                REQUIRE(a.upper_hooks == b.upper_hooks);
                if (mu.empty() || mubar.empty()) continue;
                REQUIRE(order_at(t_star(mu, mubar), {m - 1, n - 1}) == -1);
                REQUIRE(rectangular_residue_formula(mu, m, n) == stanley_coeff(mu, mubar, Partition::rectangle(m, n)));
            }
    CHECK_THROWS_AS(rectangular_residue_formula(Partition{}, 2, 2), Error);
}

TEST_CASE("rectangular-union factorization") {
    CHECK(union_factorization_check(Partition{4, 2, 2, 1, 1}, 3, 4).ok);
    CHECK(union_factorization_check(Partition{2, 1}, 1, 1).ok);
    CHECK(union_factorization_check(Partition{2, 1}, 2, 2).ok);
    for (auto s : outer_corners(Partition{4, 2, 2, 1, 1})) {
        if (s.x < 3 && s.y < 4) continue;
        if (!is_generic_for_rectangle(Partition{4, 2, 2, 1, 1}.with_box(s), 3, 4)) continue;
        const TBoxFactor f = t_box_factor(Partition{4, 2, 2, 1, 1}, s, 3, 4);
        CHECK(f.formula == f.direct);
    }
    CHECK_THROWS_AS(t_box_factor(Partition{4, 2, 2, 1, 1}, {1, 1}, 3, 4), Error);
    CHECK_THROWS_AS(union_factorization_check(Partition{3, 3}, 2, 1), GenericShapeViolation);
}
