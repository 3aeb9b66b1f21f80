#include <doctest.h>

#include "jack/suites.hpp"

using namespace jack;
using namespace jack::suites;

namespace {

void check_pass(const SuiteReport& r) {
    INFO(to_text(r));
    CHECK(r.ok());
    CHECK(r.cases > 0);
    CHECK(r.witnesses.empty());
}

}  // namespace

TEST_CASE("small scopes pass") {
    check_pass(degree3_fixtures());
    check_pass(norms(4));
    check_pass(sum_product(3));
    check_pass(rectangular(6));
    check_pass(rect_union(5, 3));
    check_pass(pieri(4));
    check_pass(expansion(5));
    check_pass(flip(2, 3));
    check_pass(flip_all(6));
    check_pass(pole_orders(3, 20));
    check_pass(quadrants(6));
    check_pass(cross_fixtures(6));
    check_pass(stanley_sweep(4));
}

TEST_CASE("parallel runs match serial runs") {
    Options serial, parallel;
    parallel.jobs = 4;
    CHECK(to_json(rect_union(5, 3, serial)).dump() == to_json(rect_union(5, 3, parallel)).dump());
    CHECK(to_json(pole_orders(3, 20, serial)).dump() == to_json(pole_orders(3, 20, parallel)).dump());
    CHECK(to_json(stanley_sweep(4, serial)).dump() == to_json(stanley_sweep(4, parallel)).dump());
}

TEST_CASE("report text") {
    const SuiteReport r = degree3_fixtures();
    CHECK(to_text(r).rfind("degree3", 0) == 0);
    CHECK(to_json(r)["cases"] == r.cases);
}
