#pragma once

// Independent reference computations for the tests: symmetric polynomials
// expanded explicitly in finitely many variables, and small helpers.

#include <map>
#include <random>
#include <vector>

#include "jack/alpha.hpp"
#include "jack/partition.hpp"

namespace oracle {

using jack::Integer;
using jack::Partition;

// Polynomial in N variables: exponent vector -> integer coefficient.
using Poly = std::map<std::vector<int>, Integer>;

inline Poly one(int nvars) { return {{std::vector<int>(static_cast<std::size_t>(nvars), 0), Integer(1)}}; }

inline Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// x_1^k + ... + x_N^k
inline Poly power_sum(int k, int nvars) {
    Poly p;
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = k;
        p[e] += 1;
    }
    return p;
}

// Sum over k-subsets of the variables.
inline Poly elementary(int k, int nvars) {
    Poly p;
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            p[e] += 1;
            return;
        }
        for (int i = start; i < nvars; ++i) {
            e[static_cast<std::size_t>(i)] = 1;
            self(self, i + 1, left - 1);
            e[static_cast<std::size_t>(i)] = 0;
        }
    };
    rec(rec, 0, k);
    return p;
}

// Coefficient of m_mu: the coefficient of x^mu (mu padded with zeros).
inline Integer monomial_coeff(const Poly& p, const Partition& mu, int nvars) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    for (int i = 0; i < mu.length(); ++i) e[static_cast<std::size_t>(i)] = mu.parts()[static_cast<std::size_t>(i)];
    auto it = p.find(e);
    return it == p.end() ? Integer(0) : it->second;
}

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Uniform random partition of size at most max_size, drawn from the full list.
inline Partition random_partition(std::mt19937& rng, int max_size) {
    std::uniform_int_distribution<int> size(0, max_size);
    const auto all = jack::partitions_of(size(rng));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

}  // namespace oracle
