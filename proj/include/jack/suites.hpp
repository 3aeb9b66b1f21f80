#pragma once

// Exhaustive verification sweeps shared by the command-line tool and the
// acceptance runner. Every suite enumerates its cases in a fixed order and
// reports them in that order whatever the job count.

#include <cstdint>
#include <string>
#include <vector>

#include "jack/json_io.hpp"

namespace jack::suites {

struct Options {
    int jobs = 1;
    std::uint32_t seed = 20240611;
    std::size_t max_witnesses = 10;
};

struct SuiteReport {
    std::string name;
    std::string scope;  // human-readable description of the domain
    long cases = 0;
    long failures = 0;
    std::vector<std::string> witnesses;  // first few failures
    double seconds = 0;

    bool ok() const { return failures == 0; }
};

// The six known expansions of J_3, J_21, J_111 in the m and p bases.
SuiteReport degree3_fixtures(const Options& opts = {});
// <J_l, J_l> = prod over boxes of upper times lower hooks, |l| <= max_size.
SuiteReport norms(int max_size, const Options& opts = {});
// Sum-product identity for all |mu| + |nu| <= max_size.
SuiteReport sum_product(int max_size, const Options& opts = {});
// Both rectangular variants, Stanley and LR forms, for mu in m^n with mn <= max_area,
// plus the 211 in 3^3 grids.
SuiteReport rectangular(int max_area, const Options& opts = {});
// Rectangular-union assignments for generic mu with |mu ∪ m^n| <= max_size and
// m, n <= max_side, together with the factored forms and the 42211 in 3^4 fixture.
SuiteReport rect_union(int max_size, int max_side = 4, const Options& opts = {});
// Pieri assignments for every horizontal strip with |lambda| <= max_size.
SuiteReport pieri(int max_size, const Options& opts = {});
// Expansion lemma for every sigma with |sigma| <= max_size and every inner corner.
SuiteReport expansion(int max_size, const Options& opts = {});
// Flip and mirror rules for all sigma in m^n.
SuiteReport flip(int m, int n, const Options& opts = {});
// flip() over every rectangle with mn <= max_area.
SuiteReport flip_all(int max_area, const Options& opts = {});
// Order formula against the factored T and the order bounds, `samples`
// random lattice points per pair |mu|, |nu| <= max_size, plus the simple pole
// at (m-1, n-1) for mu in m^n with mn <= 9.
SuiteReport pole_orders(int max_size, int samples, const Options& opts = {});
// Three-quadrant decomposition of T_{mu*mu_bar}, its factor-wise symmetry,
// and the residue formula, for mu in m^n with mn <= max_area.
SuiteReport quadrants(int max_area, const Options& opts = {});
// Fixed Schur and Kostka values and the rectangular support lemma for
// mn <= max_area.
SuiteReport cross_fixtures(int max_area, const Options& opts = {});
// Every <J_mu J_nu, J_lambda> with |lambda| <= max_size lies in Z>=0[alpha].
SuiteReport stanley_sweep(int max_size, const Options& opts = {});

// {"suite", "scope", "status", "cases", "failures", "witnesses"}. Timing is
// left out so equal runs give equal bytes.
json::Json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace jack::suites
