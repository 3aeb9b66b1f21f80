// jack: command-line front end for Jack polynomial structure constants,
// hook assignments and the verification suites.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "jack/error.hpp"
#include "jack/hooks.hpp"
#include "jack/json_io.hpp"
#include "jack/lr.hpp"
#include "jack/suites.hpp"
#include "jack/symfunc.hpp"

namespace {

using jack::json::Json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Globals {
    std::string format = "text";
    bool unicode = false;
    int jobs = 1;

    bool json() const { return format == "json"; }
    jack::Notation notation() const { return unicode ? jack::Notation::unicode : jack::Notation::ascii; }
};

std::string show(const jack::Partition& p) { return p.empty() ? "0" : p.to_string(); }
std::string sub(const jack::Partition& p) { return p.empty() ? "0" : p.compact(); }

// Factored form of a polynomial when it splits into brackets.
std::string factored(const jack::AlphaPoly& p, jack::Notation nt) {
    if (p.is_zero()) return "0";
    if (auto f = jack::factor_linear(p)) return jack::to_string(*f, nt);
    return jack::to_string(p, nt);
}

std::string factored(const jack::AlphaRat& r, jack::Notation nt) {
    if (r.is_polynomial()) return factored(r.num(), nt);
    auto num = jack::factor_linear(r.num());
    auto den = jack::factor_linear(r.den());
    if (!num || !den) return jack::to_string(r, nt);
    // One constant, carried by the numerator.
    num->constant /= den->constant;
    den->constant = 1;
    const std::string d = jack::to_string(*den, nt);
    const bool wrap = d.find('*') != std::string::npos || d.find("·") != std::string::npos;
    return jack::to_string(*num, nt) + " / " + (wrap ? "(" + d + ")" : d);
}

Json factored_json(const jack::AlphaPoly& p) {
    if (p.is_zero()) return nullptr;
    if (auto f = jack::factor_linear(p)) return jack::json::to_json(*f);
    return nullptr;
}

Json rat_json(const jack::AlphaRat& r) {
    Json out = jack::json::to_json(r);
    Json fac = Json::object();
    fac["num"] = factored_json(r.num());
    fac["den"] = factored_json(r.den());
    out["factored"] = std::move(fac);
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ------------------------------------------------------------- commands

int cmd_expand(const Globals& g, const std::string& lambda_text, const std::string& basis) {
    const jack::Partition lambda = jack::Partition::parse(lambda_text);
    std::vector<jack::Basis> bases;
    if (basis == "all" || basis == "monomial") bases.push_back(jack::Basis::monomial);
    if (basis == "all" || basis == "powersum") bases.push_back(jack::Basis::powersum);
    Json out = Json::object();
    out["lambda"] = jack::json::to_json(lambda);
    Json exps = Json::array();
    for (auto b : bases) {
        const jack::SymFunc f = b == jack::Basis::monomial ? jack::jack_J(lambda) : jack::jack_J_powersum(lambda);
        if (g.json()) exps.push_back(jack::json::to_json(f));
        else std::cout << "J_" << sub(lambda) << " = " << jack::to_string(f, g.notation()) << '\n';
    }
    if (g.json()) {
        out["expansions"] = std::move(exps);
        emit(out);
    }
    return kOk;
}

int cmd_lr(const Globals& g, const std::string& mu_text, const std::string& nu_text) {
    const jack::Partition mu = jack::Partition::parse(mu_text), nu = jack::Partition::parse(nu_text);
    const jack::LrTable t = jack::jack_lr(mu, nu);
    if (g.json()) {
        Json out = jack::json::to_json(t);
        for (std::size_t i = 0; i < t.entries.size(); ++i) {
            out["entries"][i]["g"] = rat_json(t.entries[i].g);
            out["entries"][i]["stanley"] = rat_json(t.entries[i].stanley);
        }
        emit(out);
        return kOk;
    }
    std::cout << "J_" << sub(mu) << " * J_" << sub(nu) << '\n';
    for (const auto& e : t.entries) {
        std::cout << "  " << show(e.gamma) << '\n';
        std::cout << "    g       = " << factored(e.g, g.notation()) << '\n';
        std::cout << "    stanley = " << factored(e.stanley, g.notation()) << '\n';
    }
    return kOk;
}

int cmd_stanley(const Globals& g, const std::string& mu_text, const std::string& nu_text,
                const std::string& lambda_text) {
    const jack::Partition mu = jack::Partition::parse(mu_text), nu = jack::Partition::parse(nu_text),
                          lambda = jack::Partition::parse(lambda_text);
    const jack::AlphaRat st = jack::stanley_coeff(mu, nu, lambda);
    const jack::AlphaRat lr = jack::lr_coefficient(mu, nu, lambda);
    if (g.json()) {
        Json out = Json::object();
        out["mu"] = jack::json::to_json(mu);
        out["nu"] = jack::json::to_json(nu);
        out["lambda"] = jack::json::to_json(lambda);
        out["stanley"] = rat_json(st);
        out["g"] = rat_json(lr);
        out["text"] = factored(st, g.notation());
        emit(out);
        return kOk;
    }
    std::cout << "<J_" << sub(mu) << " J_" << sub(nu) << ", J_" << sub(lambda) << "> = " << factored(st, g.notation())
              << '\n';
    std::cout << "  expanded: " << jack::to_string(st, g.notation()) << '\n';
    std::cout << "  g = " << factored(lr, g.notation()) << '\n';
    return kOk;
}

void print_grid(const std::string& label, const jack::HookAssignment& a) {
    std::cout << label << " " << show(a.shape()) << '\n';
    if (!a.shape().empty()) std::cout << a.grid() << '\n';
    std::cout << '\n';
}

int print_product(const Globals& g, const jack::StanleyProduct& p, const std::string& form) {
    if (form == "lr") {
        const jack::LrFraction f = jack::to_lr_form(p);
        if (g.json()) {
            Json out = Json::object();
            out["mu"] = jack::json::to_json(f.mu_factor);
            out["nu"] = jack::json::to_json(f.nu_factor);
            out["denominator"] = jack::json::to_json(f.denominator);
            out["value"] = rat_json(f.value());
            emit(out);
            return kOk;
        }
        print_grid("numerator", f.mu_factor);
        print_grid("numerator", f.nu_factor);
        print_grid("denominator", f.denominator);
        std::cout << "g = " << factored(f.value(), g.notation()) << '\n';
        return kOk;
    }
    if (g.json()) {
        Json out = jack::json::to_json(p);
        out["factored"] = factored_json(p.value);
        out["balanced"] = p.balanced();
        emit(out);
        return kOk;
    }
    print_grid("mu", p.mu_factor);
    print_grid("nu", p.nu_factor);
    print_grid("lambda", p.lambda_factor);
    std::cout << "value = " << factored(p.value, g.notation()) << '\n';
    return kOk;
}

jack::Variant parse_variant(const std::string& v) { return v == "B" ? jack::Variant::B : jack::Variant::A; }

int cmd_search(const Globals& g, const std::string& mu_text, const std::string& nu_text,
               const std::string& lambda_text, int max_boxes) {
    const jack::Partition mu = jack::Partition::parse(mu_text), nu = jack::Partition::parse(nu_text),
                          lambda = jack::Partition::parse(lambda_text);
    const jack::AlphaRat st = jack::stanley_coeff(mu, nu, lambda);
    std::vector<jack::StanleyProduct> found;
    if (st.is_polynomial())
        found = jack::balanced_assignment_search(mu, nu, lambda, st.num(), {max_boxes, g.jobs});
    if (g.json()) {
        Json out = Json::object();
        out["target"] = rat_json(st);
        Json list = Json::array();
        for (const auto& p : found) list.push_back(jack::json::to_json(p));
        out["assignments"] = std::move(list);
        emit(out);
        return kOk;
    }
    std::cout << "target = " << factored(st, g.notation()) << '\n';
    std::cout << found.size() << " balanced assignment(s)\n";
    for (std::size_t i = 0; i < found.size(); ++i) {
        std::cout << "\n#" << i + 1 << '\n';
        print_grid("mu", found[i].mu_factor);
        print_grid("nu", found[i].nu_factor);
        print_grid("lambda", found[i].lambda_factor);
    }
    return kOk;
}

int report(const Globals& g, const jack::suites::SuiteReport& r) {
    if (g.json()) emit(jack::suites::to_json(r));
    else std::cout << jack::suites::to_text(r);
    return r.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jack polynomial structure constants and hook assignments"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--unicode", g.unicode, "Render alpha and signs with Unicode symbols");
    app.add_option("--jobs", g.jobs, "Worker threads for suites and searches")->check(CLI::PositiveNumber);

    std::function<int()> action;

    auto* expand = app.add_subcommand("expand", "Expand J_lambda in the monomial and power-sum bases");
    std::string lambda_text, mu_text, nu_text, basis = "all";
    expand->add_option("--lambda", lambda_text, "Partition, e.g. 2,1")->required();
    expand->add_option("--basis", basis, "monomial, powersum or all")
        ->check(CLI::IsMember({"monomial", "powersum", "all"}));
    expand->callback([&] { action = [&] { return cmd_expand(g, lambda_text, basis); }; });

    auto* lr = app.add_subcommand("lr", "Table of g and Stanley coefficients for J_mu J_nu");
    lr->add_option("--mu", mu_text)->required();
    lr->add_option("--nu", nu_text)->required();
    lr->callback([&] { action = [&] { return cmd_lr(g, mu_text, nu_text); }; });

    auto* stanley = app.add_subcommand("stanley", "<J_mu J_nu, J_lambda>");
    stanley->add_option("--mu", mu_text)->required();
    stanley->add_option("--nu", nu_text)->required();
    stanley->add_option("--lambda", lambda_text)->required();
    stanley->callback([&] { action = [&] { return cmd_stanley(g, mu_text, nu_text, lambda_text); }; });

    auto* hooks = app.add_subcommand("hooks", "Hook assignments as U/L grids");
    hooks->require_subcommand(1);
    int m = 0, n = 0, max_boxes = 24;
    std::string variant = "A", form = "stanley";
    auto* rect = hooks->add_subcommand("rect", "<J_mu J_mu_bar, J_{m^n}>");
    rect->add_option("--mu", mu_text)->required();
    rect->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    rect->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    rect->add_option("--variant", variant)->check(CLI::IsMember({"A", "B"}));
    rect->add_option("--form", form)->check(CLI::IsMember({"stanley", "lr"}));
    rect->callback([&] {
        action = [&] {
            return print_product(g, jack::rectangular_assignment(jack::Partition::parse(mu_text), m, n,
                                                                 parse_variant(variant)),
                                 form);
        };
    });
    auto* runion = hooks->add_subcommand("rect-union", "<J_mu J_sigma_bar, J_{mu ∪ m^n}>");
    runion->add_option("--mu", mu_text)->required();
    runion->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    runion->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    runion->add_option("--variant", variant)->check(CLI::IsMember({"A", "B"}));
    runion->add_option("--form", form)->check(CLI::IsMember({"stanley", "lr"}));
    runion->callback([&] {
        action = [&] {
            return print_product(g, jack::rect_union_assignment(jack::Partition::parse(mu_text), m, n,
                                                                parse_variant(variant)),
                                 form);
        };
    });
    auto* pieri = hooks->add_subcommand("pieri", "<J_mu J_r, J_lambda> for a horizontal strip");
    pieri->add_option("--mu", mu_text)->required();
    pieri->add_option("--lambda", lambda_text)->required();
    pieri->add_option("--form", form)->check(CLI::IsMember({"stanley", "lr"}));
    pieri->callback([&] {
        action = [&] {
            const auto mu = jack::Partition::parse(mu_text), lambda = jack::Partition::parse(lambda_text);
            return print_product(g, jack::pieri_assignment(mu, lambda, lambda.size() - mu.size()), form);
        };
    });
    auto* search = hooks->add_subcommand("search", "All balanced assignments giving <J_mu J_nu, J_lambda>");
    search->add_option("--mu", mu_text)->required();
    search->add_option("--nu", nu_text)->required();
    search->add_option("--lambda", lambda_text)->required();
    search->add_option("--max-boxes", max_boxes, "Bound on |mu| + |nu| + |lambda|");
    search->callback([&] { action = [&] { return cmd_search(g, mu_text, nu_text, lambda_text, max_boxes); }; });

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    int max_size = 6, max_area = 9, max_side = 4, samples = 200;
    auto suite = [&](const std::string& name, const std::string& help,
                     std::function<jack::suites::SuiteReport(const jack::suites::Options&)> fn) {
        auto* sub = verify->add_subcommand(name, help);
        sub->callback([&, fn] {
            action = [&, fn] {
                jack::suites::Options o;
                o.jobs = g.jobs;
                return report(g, fn(o));
            };
        });
        return sub;
    };
    suite("degree3", "Degree-3 expansion fixtures", [](const auto& o) { return jack::suites::degree3_fixtures(o); });
    suite("sum-product", "Sum-product identity", [&](const auto& o) { return jack::suites::sum_product(max_size, o); })
        ->add_option("--max-size", max_size, "Bound on |mu| + |nu|");
    suite("norms", "Norm formula", [&](const auto& o) { return jack::suites::norms(max_size, o); })
        ->add_option("--max-size", max_size, "Bound on |lambda|");
    {
        auto* f = suite("flip", "Flip and mirror rules", [&](const auto& o) {
            return m > 0 && n > 0 ? jack::suites::flip(m, n, o) : jack::suites::flip_all(max_area, o);
        });
        f->add_option("--m", m);
        f->add_option("--n", n);
        f->add_option("--max-area", max_area, "Used when --m/--n are absent");
    }
    {
        auto* r = suite("rect-union", "Rectangular-union assignments",
                        [&](const auto& o) { return jack::suites::rect_union(max_size, max_side, o); });
        r->add_option("--max-size", max_size, "Bound on |mu ∪ m^n|");
        r->add_option("--max-side", max_side, "Bound on m and n");
    }
    suite("rect", "Rectangular assignments", [&](const auto& o) { return jack::suites::rectangular(max_area, o); })
        ->add_option("--max-area", max_area, "Bound on mn");
    suite("pieri", "Pieri assignments", [&](const auto& o) { return jack::suites::pieri(max_size, o); })
        ->add_option("--max-size", max_size, "Bound on |lambda|");
    suite("expansion", "Expansion lemma", [&](const auto& o) { return jack::suites::expansion(max_size, o); })
        ->add_option("--max-size", max_size, "Bound on |sigma|");
    {
        auto* p = suite("pole-orders", "Pole-order formula and bounds",
                        [&](const auto& o) { return jack::suites::pole_orders(max_size, samples, o); });
        p->add_option("--max-size", max_size, "Bound on |mu| and |nu|");
        p->add_option("--samples", samples, "Random points per pair");
    }
    suite("quadrants", "Three-quadrant decomposition", [&](const auto& o) { return jack::suites::quadrants(max_area, o); })
        ->add_option("--max-area", max_area, "Bound on mn");
    suite("cross", "Schur/Kostka fixtures and rectangular support",
          [&](const auto& o) { return jack::suites::cross_fixtures(max_area, o); })
        ->add_option("--max-area", max_area, "Bound on mn");
    suite("stanley", "Non-negativity sweep", [&](const auto& o) { return jack::suites::stanley_sweep(max_size, o); })
        ->add_option("--max-size", max_size, "Bound on |lambda|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        return action();
    } catch (const jack::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const jack::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
