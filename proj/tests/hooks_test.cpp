#include <doctest.h>

#include "jack/error.hpp"
#include "jack/hooks.hpp"
#include "jack/lr.hpp"

using namespace jack;

namespace {

const AlphaPoly A = AlphaPoly::alpha();

}  // namespace

TEST_CASE("hook values") {
    const Partition p{3, 3, 1};
    CHECK(hook_value(p, {0, 0}, Hook::U) == 3 * A + 2);
    CHECK(hook_value(p, {0, 0}, Hook::L) == 2 * A + 3);
    CHECK(hook_value(p, {2, 1}, Hook::U) == A);
    CHECK(hook_value(p, {2, 1}, Hook::L) == AlphaPoly(1));
    CHECK(flip(Hook::U) == Hook::L);
    CHECK(to_char(Hook::L) == 'L');
}

TEST_CASE("assignments") {
    HookAssignment a(Partition{2, 1});
    CHECK(a.count(Hook::L) == 3);
    a.set({1, 0}, Hook::U);
    CHECK(a.at({1, 0}) == Hook::U);
    CHECK(a.grid() == "L\nL U");
    CHECK(a.flipped().grid() == "U\nU L");
    CHECK_THROWS_AS(a.set({2, 0}, Hook::U), BoxNotInDiagram);
    CHECK_THROWS_AS(a.at({0, 2}), BoxNotInDiagram);
    CHECK_THROWS_AS(HookAssignment(Partition{1}, std::map<BoxCoord, Hook>{{{1, 0}, Hook::U}}), BoxNotInDiagram);
    // lower hooks of 21: (1)(1)(1+alpha)... arm 1 leg 1 at the origin.
    CHECK(HookAssignment(Partition{2, 1}).value() == A + 2);
    CHECK(HookAssignment(Partition{}).value() == AlphaPoly(1));
}

TEST_CASE("products and the LR form") {
    const StanleyProduct p = make_product(HookAssignment(Partition{1}, Hook::L), HookAssignment(Partition{1}, Hook::U),
                                          HookAssignment(Partition{2}, Hook::U));
    // 1 * alpha * (2alpha)(alpha)
    CHECK(p.value == 2 * A * A * A);
    CHECK_FALSE(p.balanced());
    const StanleyProduct q = make_product(HookAssignment(Partition{1}, Hook::L), HookAssignment(Partition{1}, Hook::U),
                                          HookAssignment(Partition(std::vector<int>{2}),
                                                         std::map<BoxCoord, Hook>{{{0, 0}, Hook::U}, {{1, 0}, Hook::L}}));
    CHECK(q.value == 2 * A * A);
    CHECK(q.balanced());
    CHECK(to_lr_form(q).value() == AlphaRat(AlphaPoly(1), A + 1));
    const StanleyProduct e = make_product(HookAssignment(Partition{}), HookAssignment(Partition{}), HookAssignment(Partition{}));
    CHECK(e.value == AlphaPoly(1));
    CHECK(e.balanced());
}

TEST_CASE("evaluating a fixed assignment") {
    HookAssignment mu(Partition{3, 2, 1}, Hook::U);
    mu.set({2, 0}, Hook::L);
    const HookAssignment nu(Partition{3, 1}, Hook::U), lambda(Partition{3, 2, 2, 1, 1}, Hook::L);
    const AlphaPoly v = evaluate_assignment(mu, nu, lambda);
    CHECK(to_string(*factor_linear(v)) == "2^3*alpha^5*(3+alpha)^2*(4+alpha)*(1+2alpha)^2*(5+2alpha)*(1+3alpha)*(2+3alpha)");
    CHECK(evaluate_assignment(HookAssignment(Partition{}), HookAssignment(Partition{}), HookAssignment(Partition{})) ==
          AlphaPoly(1));
}

TEST_CASE("Pieri assignment") {
    const StanleyProduct p = pieri_assignment(Partition{1}, Partition{2}, 1);
    CHECK(p.value == 2 * A * A);
    CHECK(p.balanced());
    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            for (int r = 0; r <= 3; ++r)
                for (const auto& lambda : partitions_of(n + r)) {
                    if (!is_horizontal_strip(lambda, mu)) continue;
                    const StanleyProduct q = pieri_assignment(mu, lambda, r);
                    REQUIRE(q.balanced());
                    REQUIRE(AlphaRat(q.value) == stanley_coeff(mu, r ? Partition{r} : Partition{}, lambda));
                }
    CHECK_THROWS_AS(pieri_assignment(Partition{1}, Partition{1, 1, 1}, 2), NotAHorizontalStrip);
    CHECK_THROWS_AS(pieri_assignment(Partition{1}, Partition{3}, 1), NotAHorizontalStrip);
}

TEST_CASE("rectangular assignment") {
    const StanleyProduct p = rectangular_assignment(Partition{1}, 2, 1);
    CHECK(p.value == 2 * A * A);
    const StanleyProduct g = rectangular_assignment(Partition{2, 1, 1}, 3, 3);
    CHECK(g.mu_factor.grid() == "L\nL\nL L");
    CHECK(g.nu_factor.grid() == "U\nU U\nU U");
    CHECK(g.lambda_factor.grid() == "U U L\nU L L\nU L L");
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const auto& mu : partitions_in_rectangle(m, n)) {
                const Partition mubar = complement(mu, m, n);
                const AlphaRat st = stanley_coeff(mu, mubar, Partition::rectangle(m, n));
                for (Variant v : {Variant::A, Variant::B}) {
                    const StanleyProduct q = rectangular_assignment(mu, m, n, v);
                    REQUIRE(q.balanced());
                    REQUIRE(AlphaRat(q.value) == st);
                    REQUIRE(rectangular_lr(mu, m, n, v).value() == lr_coefficient(mu, mubar, Partition::rectangle(m, n)));
                }
            }
    CHECK_THROWS_AS(rectangular_assignment(Partition{3}, 2, 2), NotContained);
}

TEST_CASE("rectangular-union assignment") {
    const StanleyProduct p = rect_union_assignment(Partition{4, 2, 2, 1, 1}, 3, 4);
    CHECK(p.mu_factor.grid() == "L\nL\nL L\nL L\nU U U U");
    CHECK(p.nu_factor.grid() == "U\nU\nU U");
    CHECK(p.lambda_factor.grid() == "U\nU U L\nU U L\nU L L\nL L L L");
    CHECK(to_string(*factor_linear(p.value)) ==
          "2^9*3^2*alpha^6*(1+alpha)^4*(2+alpha)*(3+alpha)^2*(4+alpha)^2*(1+2alpha)*(1+3alpha)*(2+3alpha)^2*(5+3alpha)");
    CHECK(rect_union_assignment(Partition{1}, 2, 1) == rectangular_assignment(Partition{1}, 2, 1));
    CHECK(rect_union_assignment(Partition{2, 1}, 1, 1, Variant::B).balanced());
    CHECK_THROWS_AS(rect_union_assignment(Partition{3, 3}, 2, 1), GenericShapeViolation);
}

TEST_CASE("union factored form") {
    for (const auto& [mu, m, n] : std::vector<std::tuple<Partition, int, int>>{
             {Partition{4, 2, 2, 1, 1}, 3, 4}, {Partition{2, 1}, 1, 1}, {Partition{3, 1}, 2, 2}}) {
        const auto d = decompose_wrt_rectangle(mu, m, n);
        const UnionFactoredForm f = union_factored_form(mu, m, n);
        CHECK(f.value() == lr_coefficient(mu, d.sigma_bar, d.uni));
        CHECK(f.left_numerator.size() == f.left_boxes.size());
        CHECK(f.below_denominator.size() == f.below_boxes.size());
    }
    const UnionFactoredForm inside = union_factored_form(Partition{1}, 2, 2);
    CHECK(inside.f() == AlphaRat(1));
    CHECK(inside.left_boxes.empty());
    CHECK(inside.below_boxes.empty());
}

TEST_CASE("balanced assignment search") {
    const auto target = stanley_coeff(Partition{1}, Partition{1}, Partition{2}).num();
    const auto found = balanced_assignment_search(Partition{1}, Partition{1}, Partition{2}, target);
    REQUIRE_FALSE(found.empty());
    for (const auto& p : found) {
        CHECK(p.balanced());
        CHECK(p.value == target);
    }
    CHECK(balanced_assignment_search(Partition{1}, Partition{1}, Partition{2}, AlphaPoly()).empty());
    CHECK(balanced_assignment_search(Partition{1}, Partition{1}, Partition{2}, A * A + 1).empty());

    const Partition mu{2, 1}, nu{1, 1}, lambda{3, 2};
    const auto t = stanley_coeff(mu, nu, lambda).num();
    const auto one = balanced_assignment_search(mu, nu, lambda, t);
    SearchOptions par;
    par.jobs = 4;
    CHECK(balanced_assignment_search(mu, nu, lambda, t, par) == one);
    CHECK_FALSE(one.empty());

    SearchOptions tight;
    tight.max_boxes = 3;
    CHECK_THROWS_AS(balanced_assignment_search(mu, nu, lambda, t, tight), SearchBoundExceeded);
    CHECK_THROWS_AS(balanced_assignment_search(Partition{1}, Partition{1}, Partition{3}, t), SizeMismatch);
}
