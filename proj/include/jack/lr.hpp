#pragma once

// Structure constants of the Jack J basis and their classical shadows.

#include <map>
#include <vector>

#include "jack/alpha.hpp"
#include "jack/partition.hpp"
#include "jack/symfunc.hpp"

namespace jack {

// Product computed in the power-sum basis, returned in `result`.
SymFunc multiply(const SymFunc& f, const SymFunc& g, Basis result = Basis::monomial);

struct LrEntry {
    Partition gamma;
    AlphaRat g;        // J_mu J_nu = sum_gamma g J_gamma
    AlphaRat stanley;  // <J_mu J_nu, J_gamma> = g * ||J_gamma||^2
};

struct LrTable {
    Partition mu;
    Partition nu;
    std::vector<LrEntry> entries;  // nonzero entries, reverse-lex in gamma
};

LrTable jack_lr(const Partition& mu, const Partition& nu);

// g_{mu nu}^gamma through inner products. Throws SizeMismatch if sizes disagree.
AlphaRat lr_coefficient(const Partition& mu, const Partition& nu, const Partition& gamma);
// The same coefficient by expanding J_mu J_nu in the J basis (triangular solve).
AlphaRat lr_coefficient_by_solve(const Partition& mu, const Partition& nu, const Partition& gamma);

// <J_mu J_nu, J_lambda>. Throws SizeMismatch if |mu| + |nu| != |lambda|.
AlphaRat stanley_coeff(const Partition& mu, const Partition& nu, const Partition& lambda);

// prod of [b] over the boxes of mu other than the origin.
AlphaPoly varpi(const Partition& mu);
// g * varpi_gamma / (varpi_mu varpi_nu).
AlphaRat hat_g(const Partition& mu, const Partition& nu, const Partition& gamma);

// Classical hook product prod (arm + leg + 1).
Integer hook_product(const Partition& lambda);

// Schur Littlewood-Richardson coefficient via the alpha = 1 specialization.
Integer schur_lr(const Partition& mu, const Partition& nu, const Partition& lambda);

// Number of semistandard tableaux of shape lambda and content w (a
// composition; zero entries allowed).
Integer kostka(const Partition& lambda, const std::vector<int>& content);

}  // namespace jack
