#include "jack/lr.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "jack/error.hpp"

namespace jack {

SymFunc multiply(const SymFunc& f, const SymFunc& g, Basis result) {
    const SymFunc fp = convert(f, Basis::powersum);
    const SymFunc gp = convert(g, Basis::powersum);
    SymFunc prod(Basis::powersum);
    for (const auto& [a, ca] : fp.terms())
        for (const auto& [b, cb] : gp.terms()) {
            std::vector<int> parts = a.parts();
            parts.insert(parts.end(), b.parts().begin(), b.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<>());
            prod.add(Partition(std::move(parts)), ca * cb);
        }
    return convert(prod, result);
}

namespace {

void require_sizes(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (mu.size() + nu.size() != lambda.size())
        throw SizeMismatch("|" + mu.to_string() + "| + |" + nu.to_string() + "| != |" +
                           lambda.to_string() + "|");
}

SymFunc jack_product_powersum(const Partition& mu, const Partition& nu) {
    return multiply(SymFunc::basis_element(Basis::jackJ, mu), SymFunc::basis_element(Basis::jackJ, nu),
                    Basis::powersum);
}

}  // namespace

AlphaRat stanley_coeff(const Partition& mu, const Partition& nu, const Partition& lambda) {
    require_sizes(mu, nu, lambda);
    if (!lambda.contains(mu) || !lambda.contains(nu)) return AlphaRat();
    return hall_inner(jack_product_powersum(mu, nu), jack_J_powersum(lambda));
}

AlphaRat lr_coefficient(const Partition& mu, const Partition& nu, const Partition& gamma) {
    return stanley_coeff(mu, nu, gamma) / AlphaRat(jack_norm(gamma));
}

AlphaRat lr_coefficient_by_solve(const Partition& mu, const Partition& nu, const Partition& gamma) {
    require_sizes(mu, nu, gamma);
    return convert(jack_product_powersum(mu, nu), Basis::jackJ).coeff(gamma);
}

LrTable jack_lr(const Partition& mu, const Partition& nu) {
    LrTable table{mu, nu, {}};
    const SymFunc prod = jack_product_powersum(mu, nu);
    for (const auto& gamma : partitions_of(mu.size() + nu.size())) {
        if (!gamma.contains(mu) || !gamma.contains(nu)) continue;
        AlphaRat st = hall_inner(prod, jack_J_powersum(gamma));
        if (st.is_zero()) continue;
        AlphaRat g = st / AlphaRat(jack_norm(gamma));
        table.entries.push_back({gamma, std::move(g), std::move(st)});
    }
    return table;
}

AlphaPoly varpi(const Partition& mu) {
    AlphaPoly acc(1);
    for (auto b : mu.boxes())
        if (b != BoxCoord{0, 0}) acc *= bracket(b);
    return acc;
}

AlphaRat hat_g(const Partition& mu, const Partition& nu, const Partition& gamma) {
    return lr_coefficient(mu, nu, gamma) * AlphaRat(varpi(gamma)) / AlphaRat(varpi(mu) * varpi(nu));
}

Integer hook_product(const Partition& lambda) {
    Integer h = 1;
    for (auto b : lambda.boxes()) h *= arm(lambda, b) + leg(lambda, b) + 1;
    return h;
}

Integer schur_lr(const Partition& mu, const Partition& nu, const Partition& lambda) {
    require_sizes(mu, nu, lambda);
    Rational v = evaluate_at(lr_coefficient(mu, nu, lambda), 1);
    v *= Rational(hook_product(lambda));
    v /= Rational(hook_product(mu) * hook_product(nu));
    if (v.get_den() != 1 || v < 0)
        throw InternalError("Schur coefficient for (" + mu.to_string() + "; " + nu.to_string() + "; " +
                            lambda.to_string() + ") is not a non-negative integer");
    return v.get_num();
}

Integer kostka(const Partition& lambda, const std::vector<int>& content) {
    int total = 0;
    for (int w : content) {
        if (w < 0) throw Error("content entries must be non-negative");
        total += w;
    }
    if (total != lambda.size())
        throw SizeMismatch("content sums to " + std::to_string(total) + " but |lambda| = " +
                           std::to_string(lambda.size()));
    // Each letter fills a horizontal strip; count chains of shapes ending at lambda.
    std::map<std::pair<std::size_t, Partition>, Integer> memo;
    std::function<Integer(std::size_t, const Partition&)> count = [&](std::size_t letter,
                                                                     const Partition& shape) -> Integer {
        if (letter == content.size()) return shape == lambda ? 1 : 0;
        auto key = std::make_pair(letter, shape);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer acc = 0;
        const int strip = content[letter];
        // Enumerate next shapes: row y grows by d_y with shape_y + d_y <= min(lambda_y, shape_{y-1}).
        std::vector<int> next = shape.parts();
        next.resize(static_cast<std::size_t>(lambda.length()), 0);
        std::function<void(int, int)> grow = [&](int y, int left) {
            if (y == lambda.length()) {
                if (left == 0) acc += count(letter + 1, Partition(next));
                return;
            }
            const int base = shape.row(y);
            const int cap = std::min(lambda.row(y), y == 0 ? lambda.row(0) : shape.row(y - 1));
            for (int d = 0; d <= std::min(left, cap - base); ++d) {
                next[static_cast<std::size_t>(y)] = base + d;
                grow(y + 1, left - d);
            }
            next[static_cast<std::size_t>(y)] = base;
        };
        grow(0, strip);
        memo.emplace(key, acc);
        return acc;
    };
    return count(0, Partition{});
}

}  // namespace jack
