#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "jack/error.hpp"
#include "jack/partition.hpp"

using namespace jack;

namespace {

std::set<BoxCoord> as_set(const std::vector<BoxCoord>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("parse and print") {
    CHECK(Partition::parse("4,2,2,1,1") == Partition{4, 2, 2, 1, 1});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("3,0,0") == Partition{3});
    CHECK(Partition::parse("12,") == Partition{12});
    CHECK(Partition::parse("7") == Partition{7});
    CHECK_THROWS_AS(Partition::parse("42211"), ParseError);
    CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
    CHECK_THROWS_AS(Partition::parse("2,-1"), ParseError);
    CHECK_THROWS_AS(Partition::parse("2,,1"), ParseError);
    CHECK_THROWS_AS(Partition::parse("a"), ParseError);
    CHECK(Partition{4, 2, 2, 1, 1}.to_string() == "4,2,2,1,1");
    CHECK(Partition{4, 2, 2, 1, 1}.compact() == "42211");
    CHECK(Partition{10, 2}.compact() == "{10,2}");
}

TEST_CASE("diagram membership follows the French convention") {
    const Partition l{7, 4, 2, 2, 1};
    CHECK(l.size() == 16);
    CHECK(static_cast<int>(l.boxes().size()) == l.size());
    CHECK(l.contains(BoxCoord{6, 0}));
    CHECK_FALSE(l.contains(BoxCoord{7, 0}));
    CHECK(l.contains(BoxCoord{0, 4}));
    CHECK_FALSE(l.contains(BoxCoord{1, 4}));
    CHECK(l.column(0) == 5);
    CHECK(l.column(2) == 2);
    CHECK(l.conjugate() == Partition{5, 4, 2, 2, 1, 1, 1});
    CHECK(l.conjugate().conjugate() == l);
}

TEST_CASE("arm and leg") {
    const Partition l{7, 4, 2, 2, 1};
    CHECK(arm(l, {1, 0}) == 5);
    CHECK(leg(l, {1, 0}) == 3);
    CHECK(arm(Partition{1}, {0, 0}) == 0);
    CHECK(leg(Partition{1}, {0, 0}) == 0);
    CHECK(arm(Partition{3, 3, 1}, {0, 0}) == 2);
    CHECK(leg(Partition{3, 3, 1}, {0, 0}) == 2);
    CHECK_THROWS_AS(arm(l, {7, 0}), BoxNotInDiagram);
    CHECK_THROWS_AS(leg(l, {0, 5}), BoxNotInDiagram);
}

TEST_CASE("hook vectors") {
    const Partition l{7, 4, 2, 2, 1};
    CHECK(upper_hook(l, {1, 0}) == HookVector{6, -3});
    CHECK(lower_hook(l, {1, 0}) == HookVector{5, -4});
    CHECK(upper_hook(Partition{1}, {0, 0}) == HookVector{1, 0});
    CHECK(lower_hook(Partition{1}, {0, 0}) == HookVector{0, -1});
    for (int k = 1; k <= 12; ++k)
        for (const auto& p : partitions_of(k))
            for (auto b : p.boxes()) {
                const auto u = upper_hook(p, b), w = lower_hook(p, b);
                REQUIRE(w.dx == u.dx - 1);
                REQUIRE(w.dy == u.dy - 1);
            }
}

TEST_CASE("corners") {
    const Partition l{7, 4, 2, 2, 1};
    CHECK(outer_corners(l).size() == 5);
    CHECK(inner_corners(l).size() == 4);
    CHECK(as_set(outer_corners(Partition{})) == std::set<BoxCoord>{{0, 0}});
    CHECK(inner_corners(Partition{}).empty());
    const Partition p{3, 3, 1};
    CHECK(as_set(inner_corners_shifted(p)) == std::set<BoxCoord>{{1, 3}, {3, 2}});
    CHECK(as_set(outer_corners(p)) == std::set<BoxCoord>{{0, 3}, {1, 2}, {3, 0}});
    for (int k = 1; k <= 12; ++k)
        for (const auto& q : partitions_of(k)) REQUIRE(outer_corners(q).size() == inner_corners(q).size() + 1);
}

TEST_CASE("row and column sets") {
    const Partition l{7, 4, 2, 2, 1};
    CHECK(row_set(l, {3, 1}).size() == 4);
    CHECK(column_set(l, {0, 2}).size() == 5);
    CHECK(row_set(l, {2, 9}).empty());  // s need not lie in the diagram
}

TEST_CASE("complement") {
    CHECK(complement(Partition{7, 5, 4, 2, 1}, 7, 6) == Partition{7, 6, 5, 3, 2});
    CHECK(complement(Partition::rectangle(3, 4), 3, 4) == Partition{});
    CHECK(complement(Partition{3, 2, 2, 1}, 3, 4) == Partition{2, 1, 1});
    CHECK_THROWS_AS(complement(Partition{4}, 3, 4), NotContained);
    CHECK_THROWS_AS(complement(Partition{1, 1, 1, 1, 1}, 3, 4), NotContained);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (const auto& mu : partitions_in_rectangle(m, n)) {
                const Partition c = complement(mu, m, n);
                REQUIRE(complement(c, m, n) == mu);
                REQUIRE(mu.size() + c.size() == m * n);
            }
}

TEST_CASE("star product") {
    const BoxMultiset s = star_product(Partition{3, 1}, Partition{2, 2, 1});
    int total = 0;
    for (const auto& [b, k] : s) total += k;
    CHECK(total == 20);
    CHECK(s.at({1, 1}) == 3);
    CHECK(s.at({0, 0}) == 1);
    CHECK(star_product(Partition{3, 1}, Partition{1}) == as_multiset(Partition{3, 1}));
    CHECK(star_product(Partition{3, 1}, Partition{}).empty());
}

TEST_CASE("join, meet and flips") {
    CHECK(join({5, 1}, {2, 4}) == BoxCoord{2, 1});
    CHECK(meet({5, 1}, {2, 4}) == BoxCoord{5, 4});
    CHECK(join({2, 2}, {2, 2}) == BoxCoord{2, 2});
    CHECK(join({0, 0}, {3, 3}) == BoxCoord{0, 0});
    CHECK(vflip({0, 0}, 3, 4) == BoxCoord{0, 3});
    CHECK(hflip({0, 0}, 3, 4) == BoxCoord{2, 0});
    CHECK(bar({0, 0}, 3, 4) == BoxCoord{2, 3});
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int i = 0; i < 100; ++i) {
        const BoxCoord b{d(rng), d(rng)};
        REQUIRE(vflip(vflip(b, 5, 7), 5, 7) == b);
        REQUIRE(hflip(bar(b, 5, 7), 5, 7) == vflip(b, 5, 7));
    }
}

TEST_CASE("rectangle hooks against box offsets") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            const Partition rect = Partition::rectangle(m, n);
            for (auto b : rect.boxes()) {
                REQUIRE(upper_hook(rect, vflip(b, m, n)).as_point() == BoxCoord{m, 0} - b);
                REQUIRE(lower_hook(rect, hflip(b, m, n)).as_point() == b - BoxCoord{0, n});
            }
        }
}

TEST_CASE("corner differences are hook vectors") {
    for (int k = 1; k <= 10; ++k)
        for (const auto& sigma : partitions_of(k)) {
            const auto inner = inner_corners(sigma);
            const auto outer = outer_corners(sigma);
            for (auto s : inner) {
                const Partition smaller = sigma.without_box(s);
                const BoxCoord sp = s + BoxCoord{1, 1};
                for (auto t : inner) {
                    const BoxCoord tp = t + BoxCoord{1, 1};
                    if (t.x < s.x) REQUIRE(sp - tp == upper_hook(smaller, join(s, t)).as_point());
                    if (t.x > s.x) REQUIRE(sp - tp == -lower_hook(smaller, join(s, t)).as_point());
                }
                for (auto t : outer) {
                    if (t.x < s.x) REQUIRE(sp - t == upper_hook(sigma, join(s, t)).as_point());
                    if (t.x > s.x) REQUIRE(sp - t == -lower_hook(sigma, join(s, t)).as_point());
                }
            }
        }
}

TEST_CASE("partition enumeration") {
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
    const auto p4 = partitions_of(4);
    CHECK(p4.front() == Partition{4});
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4.back() == Partition{1, 1, 1, 1});
    CHECK(partitions_in_rectangle(3, 3).size() == 20);
    CHECK(dominates(Partition{3}, Partition{2, 1}));
    CHECK_FALSE(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
}

TEST_CASE("intersection, union, horizontal strips") {
    CHECK(intersection(Partition{4, 2, 2, 1, 1}, Partition::rectangle(3, 4)) == Partition{3, 2, 2, 1});
    CHECK(union_of(Partition{4, 2, 2, 1, 1}, Partition::rectangle(3, 4)) == Partition{4, 3, 3, 3, 1});
    CHECK(is_horizontal_strip(Partition{3, 1}, Partition{1}));
    CHECK_FALSE(is_horizontal_strip(Partition{2, 2}, Partition{1}));
    CHECK_FALSE(is_horizontal_strip(Partition{1}, Partition{2}));
}

TEST_CASE("decomposition against a rectangle") {
    const auto d = decompose_wrt_rectangle(Partition{4, 2, 2, 1, 1}, 3, 4);
    CHECK(d.sigma == Partition{3, 2, 2, 1});
    CHECK(d.sigma_bar == Partition{2, 1, 1});
    CHECK(d.r == 1);
    CHECK(d.c == 1);
    CHECK(d.k == 2);
    CHECK(d.l == 3);
    CHECK(d.mu2 == Partition{1, 1});
    CHECK(d.uni == Partition{4, 3, 3, 3, 1});

    const auto inside = decompose_wrt_rectangle(Partition{2, 1}, 3, 3);
    CHECK(inside.r == 0);
    CHECK(inside.c == 0);
    CHECK(inside.mu1.empty());
    CHECK(inside.mu3.empty());
    CHECK(inside.mu2 == Partition{2, 1});

    const auto empty = decompose_wrt_rectangle(Partition{}, 2, 3);
    CHECK(empty.sigma.empty());
    CHECK(empty.sigma_bar == Partition::rectangle(2, 3));
    CHECK(empty.mu2.empty());

    CHECK_THROWS_AS(decompose_wrt_rectangle(Partition{3, 3}, 2, 1), GenericShapeViolation);
    CHECK_FALSE(is_generic_for_rectangle(Partition{3, 3}, 2, 1));

    // Structural guarantees over every generic shape.
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= 9; ++k)
                for (const auto& mu : partitions_of(k)) {
                    if (!is_generic_for_rectangle(mu, m, n)) continue;
                    const auto e = decompose_wrt_rectangle(mu, m, n);
                    for (int y = 0; y < e.r; ++y) REQUIRE(e.sigma.row(y) == m);
                    for (int x = 0; x < e.c; ++x) REQUIRE(e.sigma.column(x) == n);
                    REQUIRE(complement(e.mu2, e.k, e.l) == e.sigma_bar);
                    REQUIRE(e.k == m - e.c);
                    REQUIRE(e.l == n - e.r);
                }
}
