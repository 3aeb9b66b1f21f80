#include "jack/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "jack/error.hpp"
#include "jack/hooks.hpp"
#include "jack/lattice.hpp"
#include "jack/lr.hpp"

namespace jack::suites {

namespace {

using Outcome = std::optional<std::string>;  // nullopt = pass, else a witness
using Case = std::function<Outcome()>;

// Runs the cases on `jobs` threads; results land in case order.
SuiteReport run(std::string name, std::string scope, const std::vector<Case>& cases, const Options& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Outcome> out(cases.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < cases.size();) {
            try {
                out[i] = cases[i]();
            } catch (const std::exception& e) {
                out[i] = std::string("exception: ") + e.what();
            }
        }
    };
    const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(cases.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SuiteReport r;
    r.name = std::move(name);
    r.scope = std::move(scope);
    r.cases = static_cast<long>(cases.size());
    for (auto& o : out)
        if (o) {
            ++r.failures;
            if (r.witnesses.size() < opts.max_witnesses) r.witnesses.push_back(std::move(*o));
        }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

Outcome expect(bool ok, const std::function<std::string()>& witness) {
    if (ok) return std::nullopt;
    return witness();
}

std::string rect_name(int m, int n) { return std::to_string(m) + "^" + std::to_string(n); }

// All (m, n) with m, n >= 1 and mn <= max_area.
std::vector<std::pair<int, int>> rectangles(int max_area) {
    std::vector<std::pair<int, int>> out;
    for (int m = 1; m <= max_area; ++m)
        for (int n = 1; m * n <= max_area; ++n) out.emplace_back(m, n);
    return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
    std::vector<Partition> out;
    for (int k = 0; k <= max_size; ++k)
        for (auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

AlphaPoly hook_norm(const Partition& lambda) {
    AlphaPoly acc(1);
    for (auto b : lambda.boxes()) acc *= hook_value(lambda, b, Hook::U) * hook_value(lambda, b, Hook::L);
    return acc;
}

AlphaPoly poly(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return AlphaPoly(std::move(c));
}

}  // namespace

// ---------------------------------------------------------------- fixtures

SuiteReport degree3_fixtures(const Options& opts) {
    struct Fixture {
        Partition lambda;
        Basis basis;
        std::vector<std::pair<Partition, AlphaPoly>> terms;
    };
    const Partition p3{3}, p21{2, 1}, p111{1, 1, 1};
    const std::vector<Fixture> fixtures = {
        {p3, Basis::monomial, {{p3, poly({1, 3, 2})}, {p21, poly({3, 3})}, {p111, poly({6})}}},
        {p21, Basis::monomial, {{p21, poly({2, 1})}, {p111, poly({6})}}},
        {p111, Basis::monomial, {{p111, poly({6})}}},
        {p3, Basis::powersum, {{p3, poly({0, 0, 2})}, {p21, poly({0, 3})}, {p111, poly({1})}}},
        {p21, Basis::powersum, {{p3, poly({0, -1})}, {p21, poly({-1, 1})}, {p111, poly({1})}}},
        {p111, Basis::powersum, {{p3, poly({2})}, {p21, poly({-3})}, {p111, poly({1})}}},
    };
    std::vector<Case> cases;
    for (const auto& f : fixtures)
        cases.push_back([f]() -> Outcome {
            SymFunc expected(f.basis);
            for (const auto& [p, c] : f.terms) expected.add(p, AlphaRat(c));
            const SymFunc got = f.basis == Basis::monomial ? jack_J(f.lambda) : jack_J_powersum(f.lambda);
            return expect(got == expected, [&] {
                return "J_" + f.lambda.compact() + " in " + to_string(f.basis) + " basis differs";
            });
        });
    return run("degree3", "J_3, J_21, J_111 in the monomial and power-sum bases", cases, opts);
}

SuiteReport norms(int max_size, const Options& opts) {
    std::vector<Case> cases;
    for (int k = 1; k <= max_size; ++k)
        for (const auto& lambda : partitions_of(k))
            cases.push_back([lambda]() -> Outcome {
                const SymFunc J = jack_J_powersum(lambda);
                const AlphaRat got = hall_inner(J, J);
                const AlphaRat want(hook_norm(lambda));
                return expect(got == want, [&] {
                    return "<J_" + lambda.compact() + ", J_" + lambda.compact() + "> = " + to_string(got) +
                           ", hook product " + to_string(want);
                });
            });
    return run("norms", "all lambda with 1 <= |lambda| <= " + std::to_string(max_size), cases, opts);
}

SuiteReport sum_product(int max_size, const Options& opts) {
    std::vector<Case> cases;
    for (int a = 0; a <= max_size; ++a)
        for (int b = 0; a + b <= max_size; ++b)
            for (const auto& mu : partitions_of(a))
                for (const auto& nu : partitions_of(b))
                    cases.push_back([mu, nu]() -> Outcome {
                        const SumProductReport r = verify_sum_product(mu, nu);
                        return expect(r.ok, [&] { return "(" + mu.compact() + ", " + nu.compact() + "): " + r.witness; });
                    });
    return run("sum-product", "all (mu, nu) with |mu| + |nu| <= " + std::to_string(max_size), cases, opts);
}

SuiteReport rectangular(int max_area, const Options& opts) {
    std::vector<Case> cases;
    for (auto [m, n] : rectangles(max_area))
        for (const auto& mu : partitions_in_rectangle(m, n))
            cases.push_back([mu, m = m, n = n]() -> Outcome {
                const Partition mubar = complement(mu, m, n);
                const Partition rect = Partition::rectangle(m, n);
                const AlphaRat st = stanley_coeff(mu, mubar, rect);
                const AlphaRat g = lr_coefficient(mu, mubar, rect);
                for (Variant v : {Variant::A, Variant::B}) {
                    const char* tag = v == Variant::A ? "A" : "B";
                    const StanleyProduct p = rectangular_assignment(mu, m, n, v);
                    const std::string where = mu.compact() + " in " + rect_name(m, n) + " variant " + tag;
                    if (!p.balanced()) return where + ": unbalanced";
                    if (AlphaRat(p.value) != st)
                        return where + ": hooks give " + to_string(p.value) + ", oracle " + to_string(st);
                    if (rectangular_lr(mu, m, n, v).value() != g) return where + ": LR fraction differs";
                }
                return std::nullopt;
            });
    cases.push_back([]() -> Outcome {
        const StanleyProduct p = rectangular_assignment(Partition{2, 1, 1}, 3, 3);
        const bool ok = p.mu_factor.grid() == "L\nL\nL L" && p.nu_factor.grid() == "U\nU U\nU U" &&
                        p.lambda_factor.grid() == "U U L\nU L L\nU L L";
        return expect(ok, [&] {
            return "211 in 3^3 grids:\n" + p.mu_factor.grid() + "\n\n" + p.nu_factor.grid() + "\n\n" +
                   p.lambda_factor.grid();
        });
    });
    return run("rectangular", "all mu in m^n with mn <= " + std::to_string(max_area) + ", both variants", cases, opts);
}

SuiteReport rect_union(int max_size, int max_side, const Options& opts) {
    std::vector<Case> cases;
    for (int m = 1; m <= max_side; ++m)
        for (int n = 1; n <= max_side; ++n)
            for (int k = 0; k <= max_size; ++k)
                for (const auto& mu : partitions_of(k)) {
                    if (!is_generic_for_rectangle(mu, m, n)) continue;
                    if (union_of(mu, Partition::rectangle(m, n)).size() > max_size) continue;
                    cases.push_back([mu, m, n]() -> Outcome {
                        const auto d = decompose_wrt_rectangle(mu, m, n);
                        const std::string where = mu.compact() + " with " + rect_name(m, n);
                        const AlphaRat st = stanley_coeff(mu, d.sigma_bar, d.uni);
                        const bool inside = Partition::rectangle(m, n).contains(mu);
                        for (Variant v : {Variant::A, Variant::B}) {
                            const StanleyProduct p = rect_union_assignment(mu, m, n, v);
                            const char* tag = v == Variant::A ? " variant A" : " variant B";
                            if (!p.balanced()) return where + tag + ": unbalanced";
                            if (AlphaRat(p.value) != st)
                                return where + tag + ": hooks give " + to_string(p.value) + ", oracle " +
                                       to_string(st);
                            if (inside && p != rectangular_assignment(mu, m, n, v))
                                return where + tag + ": does not reduce to the rectangular assignment";
                        }
                        const AlphaRat g = lr_coefficient(mu, d.sigma_bar, d.uni);
                        const UnionFactoredForm f = union_factored_form(mu, m, n);
                        if (f.value() != g) return where + ": F * inner = " + to_string(f.value()) + ", g = " + to_string(g);
                        if (inside && !f.f().num().is_one()) return where + ": F is not 1 inside the rectangle";
                        const Report u = union_factorization_check(mu, m, n);
                        if (!u.ok) return where + ": " + u.witness;
                        for (auto s : outer_corners(mu)) {
                            if (s.x < m && s.y < n) continue;
                            if (!is_generic_for_rectangle(mu.with_box(s), m, n)) continue;
                            const TBoxFactor t = t_box_factor(mu, s, m, n);
                            if (t.formula != t.direct)
                                return where + ": T factor at " + to_string(s) + " is " + to_string(t.formula) +
                                       " by hooks, " + to_string(t.direct) + " directly";
                        }
                        return std::nullopt;
                    });
                }
    cases.push_back([]() -> Outcome {
        const StanleyProduct p = rect_union_assignment(Partition{4, 2, 2, 1, 1}, 3, 4);
        const bool grids = p.mu_factor.grid() == "L\nL\nL L\nL L\nU U U U" && p.nu_factor.grid() == "U\nU\nU U" &&
                           p.lambda_factor.grid() == "U\nU U L\nU U L\nU L L\nL L L L";
        if (!grids)
            return "42211 with 3^4 grids:\n" + p.mu_factor.grid() + "\n\n" + p.nu_factor.grid() + "\n\n" +
                   p.lambda_factor.grid();
        const auto fac = factor_linear(p.value);
        const std::string want =
            "2^9*3^2*alpha^6*(1+alpha)^4*(2+alpha)*(3+alpha)^2*(4+alpha)^2*(1+2alpha)*(1+3alpha)*(2+3alpha)^2*(5+3alpha)";
        const std::string got = fac ? to_string(*fac) : to_string(p.value);
        return expect(got == want, [&] { return "42211 with 3^4 value " + got; });
    });
    return run("rect-union",
               "generic mu with |mu ∪ m^n| <= " + std::to_string(max_size) + ", m, n <= " + std::to_string(max_side),
               cases, opts);
}

SuiteReport pieri(int max_size, const Options& opts) {
    std::vector<Case> cases;
    for (int k = 1; k <= max_size; ++k)
        for (const auto& lambda : partitions_of(k))
            for (int a = 0; a < k; ++a)
                for (const auto& mu : partitions_of(a)) {
                    if (!is_horizontal_strip(lambda, mu)) continue;
                    cases.push_back([mu, lambda, r = k - a]() -> Outcome {
                        const StanleyProduct p = pieri_assignment(mu, lambda, r);
                        const AlphaRat st = stanley_coeff(mu, Partition{r}, lambda);
                        const std::string where = lambda.compact() + "/" + (mu.empty() ? "0" : mu.compact());
                        if (!p.balanced()) return where + ": unbalanced";
                        return expect(AlphaRat(p.value) == st, [&] {
                            return where + ": hooks give " + to_string(p.value) + ", oracle " + to_string(st);
                        });
                    });
                }
    return run("pieri", "all horizontal strips with |lambda| <= " + std::to_string(max_size), cases, opts);
}

// ------------------------------------------------------------------ lemmas

SuiteReport expansion(int max_size, const Options& opts) {
    std::vector<Case> cases;
    for (int k = 1; k <= max_size; ++k)
        for (const auto& sigma : partitions_of(k))
            cases.push_back([sigma]() -> Outcome {
                const LatticeRational T = t_partition(sigma);
                if (T != t_gamma(as_multiset(sigma))) return sigma.compact() + ": closed form of T differs";
                for (auto s : inner_corners(sigma)) {
                    const CornerExpansion e = expansion_relative_to(sigma, s);
                    if (e.product() != T) return sigma.compact() + " at " + to_string(s) + ": product differs from T";
                    if (!expansion_quadrants_hold(e, s))
                        return sigma.compact() + " at " + to_string(s) + ": factor outside its quadrant";
                }
                return std::nullopt;
            });
    return run("expansion", "all sigma with 1 <= |sigma| <= " + std::to_string(max_size) + ", all inner corners",
               cases, opts);
}

namespace {

std::vector<Case> flip_cases(int m, int n) {
    std::vector<Case> cases;
    for (const auto& sigma : partitions_in_rectangle(m, n))
        cases.push_back([sigma, m, n]() -> Outcome {
            const std::string where = (sigma.empty() ? std::string("0") : sigma.compact()) + " in " + rect_name(m, n);
            if (!mirror_rule_check(sigma, m, n)) return where + ": mirror rule fails";
            for (auto t : inner_corners(sigma)) {
                const FlipSides f = flip_rule_sides(sigma, t, m, n);
                if (f.column_lhs != f.column_rhs)
                    return where + " at " + to_string(t) + ": column flip " + to_string(f.column_lhs) + " vs " +
                           to_string(f.column_rhs);
                if (f.row_lhs != f.row_rhs)
                    return where + " at " + to_string(t) + ": row flip " + to_string(f.row_lhs) + " vs " +
                           to_string(f.row_rhs);
            }
            return std::nullopt;
        });
    return cases;
}

}  // namespace

SuiteReport flip(int m, int n, const Options& opts) {
    if (m < 1 || n < 1) throw Error("rectangle sides must be positive");
    return run("flip", "all sigma in " + rect_name(m, n) + ", all inner corners", flip_cases(m, n), opts);
}

SuiteReport flip_all(int max_area, const Options& opts) {
    std::vector<Case> cases;
    for (auto [m, n] : rectangles(max_area))
        for (auto& c : flip_cases(m, n)) cases.push_back(std::move(c));
    return run("flip", "all sigma in m^n with mn <= " + std::to_string(max_area) + ", all inner corners", cases, opts);
}

SuiteReport pole_orders(int max_size, int samples, const Options& opts) {
    const auto parts = partitions_up_to(max_size);
    std::vector<Case> cases;
    std::mt19937 rng(opts.seed);
    for (const auto& mu : parts)
        for (const auto& nu : parts) {
            // Points are drawn up front so the sweep does not depend on scheduling.
            const int w = mu.row(0) + nu.row(0) + 2, h = mu.length() + nu.length() + 2;
            std::uniform_int_distribution<int> dx(-2, w), dy(-2, h);
            std::vector<BoxCoord> pts;
            for (int i = 0; i < samples; ++i) pts.push_back({dx(rng), dy(rng)});
            cases.push_back([mu, nu, pts]() -> Outcome {
                const LatticeRational T = t_star(mu, nu);
                const int floor = 1 - static_cast<int>(std::max(outer_corners(mu).size(), outer_corners(nu).size()));
                std::vector<BoxCoord> all = pts;
                for (const auto& [b, k] : T.orders()) all.push_back(b);
                for (auto s : all) {
                    const int pole = order_formula(mu, nu, s);
                    const std::string where = "(" + mu.compact() + ", " + nu.compact() + ") at " + to_string(s);
                    if (pole != -order_at(T, s))
                        return where + ": formula " + std::to_string(pole) + ", factored T " +
                               std::to_string(-order_at(T, s));
                    if (pole > 1 || pole < floor) return where + ": order " + std::to_string(pole) + " out of bounds";
                }
                return std::nullopt;
            });
        }
    for (auto [m, n] : rectangles(9))
        for (const auto& mu : partitions_in_rectangle(m, n))
            cases.push_back([mu, m = m, n = n]() -> Outcome {
                const Partition mubar = complement(mu, m, n);
                if (mu.empty() || mubar.empty()) return std::nullopt;
                const int ord = order_at(t_star(mu, mubar), {m - 1, n - 1});
                return expect(ord == -1, [&] {
                    return mu.compact() + " in " + rect_name(m, n) + ": order " + std::to_string(ord) + " at (m-1,n-1)";
                });
            });
    return run("pole-orders",
               std::to_string(samples) + " random points per pair |mu|, |nu| <= " + std::to_string(max_size) +
                   ", plus every zero and pole",
               cases, opts);
}

SuiteReport quadrants(int max_area, const Options& opts) {
    std::vector<Case> cases;
    for (auto [m, n] : rectangles(max_area))
        for (const auto& mu : partitions_in_rectangle(m, n))
            cases.push_back([mu, m = m, n = n]() -> Outcome {
                const Partition mubar = complement(mu, m, n);
                const std::string where = (mu.empty() ? std::string("0") : mu.compact()) + " in " + rect_name(m, n);
                const QuadrantFactors q = mumu_quadrants(mu, m, n);
                const QuadrantFactors qb = mumu_quadrants(mubar, m, n);
                if (q.product() != t_star(mu, mubar)) return where + ": product differs from T";
                if (q.boxes != qb.boxes) return where + ": box factor not symmetric";
                if (q.lower_hooks != qb.lower_hooks) return where + ": lower-hook factor not symmetric";
                if (q.upper_hooks != qb.upper_hooks) return where + ": upper-hook factor not symmetric";
                if (mu.empty() || mubar.empty()) return std::nullopt;
                const AlphaRat res = rectangular_residue_formula(mu, m, n);
                const AlphaRat st = stanley_coeff(mu, mubar, Partition::rectangle(m, n));
                return expect(res == st, [&] { return where + ": residue gives " + to_string(res) + ", oracle " + to_string(st); });
            });
    return run("quadrants", "all mu in m^n with mn <= " + std::to_string(max_area), cases, opts);
}

SuiteReport cross_fixtures(int max_area, const Options& opts) {
    std::vector<Case> cases;
    cases.push_back([]() -> Outcome {
        const Integer c = schur_lr(Partition{4, 2, 2, 1, 1}, Partition{2, 1, 1}, Partition{4, 3, 3, 3, 1});
        return expect(c == 1, [&] { return "c(42211, 211; 43331) = " + c.get_str(); });
    });
    cases.push_back([]() -> Outcome {
        const Integer k = kostka(Partition{4, 2, 2, 1, 1}, {2, 2, 2, 3, 1});
        return expect(k == 3, [&] { return "K(42211, 22231) = " + k.get_str(); });
    });
    for (auto [m, n] : rectangles(max_area)) {
        const Partition rect = Partition::rectangle(m, n);
        for (int a = 0; a <= m * n; ++a)
            for (const auto& mu : partitions_of(a))
                for (const auto& nu : partitions_of(m * n - a))
                    cases.push_back([mu, nu, rect, m = m, n = n]() -> Outcome {
                        const Integer c = (rect.contains(mu) && rect.contains(nu)) ? schur_lr(mu, nu, rect) : Integer(0);
                        const bool want = rect.contains(mu) && nu == complement(mu, m, n);
                        return expect(c == (want ? 1 : 0), [&] {
                            return "c(" + mu.compact() + ", " + nu.compact() + "; " + rect_name(m, n) + ") = " + c.get_str();
                        });
                    });
    }
    return run("cross", "Schur/Kostka fixtures and rectangular support for mn <= " + std::to_string(max_area),
               cases, opts);
}

SuiteReport stanley_sweep(int max_size, const Options& opts) {
    std::vector<Case> cases;
    for (int a = 0; a <= max_size; ++a)
        for (int b = a; a + b <= max_size; ++b)
            for (const auto& mu : partitions_of(a))
                for (const auto& nu : partitions_of(b))
                    cases.push_back([mu, nu]() -> Outcome {
                        for (const auto& e : jack_lr(mu, nu).entries)
                            if (!e.stanley.is_polynomial() || !e.stanley.num().has_nonnegative_integer_coeffs())
                                return "<J_" + mu.compact() + " J_" + nu.compact() + ", J_" + e.gamma.compact() +
                                       "> = " + to_string(e.stanley);
                        return std::nullopt;
                    });
    return run("stanley", "all <J_mu J_nu, J_lambda> with |lambda| <= " + std::to_string(max_size), cases, opts);
}

// ----------------------------------------------------------------- output

json::Json to_json(const SuiteReport& r) {
    json::Json out = json::Json::object();
    out["suite"] = r.name;
    out["scope"] = r.scope;
    out["status"] = r.ok() ? "pass" : "fail";
    out["cases"] = r.cases;
    out["failures"] = r.failures;
    out["witnesses"] = r.witnesses;
    return out;
}

std::string to_text(const SuiteReport& r) {
    std::ostringstream os;
    os << r.name << ": " << (r.ok() ? "pass" : "FAIL") << " (" << r.cases << " cases, " << r.failures
       << " failures) " << r.scope << '\n';
    for (const auto& w : r.witnesses) os << "  " << w << '\n';
    return os.str();
}

}  // namespace jack::suites
