#pragma once

// Rational functions of u of the form prod_b (u - [b])^{k_b}, stored as the
// map b -> k_b (positive = zero, negative = pole). Since alpha is an
// indeterminate, distinct lattice points give distinct linear factors and
// the map is a canonical form.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jack/alpha.hpp"
#include "jack/partition.hpp"

namespace jack {

class LatticeRational {
public:
    using Orders = std::map<BoxCoord, int>;

    LatticeRational() = default;
    explicit LatticeRational(const Orders& orders);
    // (u - [b])^order
    static LatticeRational factor(BoxCoord b, int order = 1);

    const Orders& orders() const { return orders_; }
    bool is_one() const { return orders_.empty(); }
    int order_at(BoxCoord b) const;
    int zero_count() const;  // with multiplicity
    int pole_count() const;

    LatticeRational inverse() const;
    // T(u - [b]): every point moves by +b.
    LatticeRational shifted(BoxCoord b) const;

    LatticeRational& operator*=(const LatticeRational& o);
    LatticeRational& operator/=(const LatticeRational& o);
    friend LatticeRational operator*(LatticeRational a, const LatticeRational& b) { return a *= b; }
    friend LatticeRational operator/(LatticeRational a, const LatticeRational& b) { return a /= b; }
    friend bool operator==(const LatticeRational&, const LatticeRational&) = default;

private:
    void bump(BoxCoord b, int k);
    Orders orders_;
};

std::string to_string(const LatticeRational& t);

LatticeRational t_box(BoxCoord b);
LatticeRational t_gamma(const BoxMultiset& gamma);
LatticeRational t_star(const Partition& mu, const Partition& nu);
// Closed form: u * prod_{I+}(u - [s]) / prod_{O}(u - [t]).
LatticeRational t_partition(const Partition& mu);

// Zero-positive order of T at u = [s].
int order_at(const LatticeRational& t, BoxCoord s);
// Pole-positive order count |{b in nu : s-b in O_mu}| - |{b in nu : s-b in I+_mu or (0,0)}|,
// equal to -order_at(t_star(mu, nu), s).
int order_formula(const Partition& mu, const Partition& nu, BoxCoord s);

// Residue at a simple pole u = [s]: prod_{b != s} ([s] - [b])^{k_b}.
// Throws NotASimplePole unless order_at(t, s) == -1.
AlphaRat residue_at(const LatticeRational& t, BoxCoord s);
// T([s]); throws PoleOrZeroAtPoint unless order_at(t, s) == 0.
AlphaRat value_at(const LatticeRational& t, BoxCoord s);

// ---------------------------------------------------------------- reports

struct Report {
    bool ok = true;
    std::string witness;  // empty when ok
};

struct ResidueDatum {
    BoxCoord point;
    AlphaRat lhs;                  // coefficient of 1/(u - [point]) on the sum side
    int rhs_order = 0;             // zero-positive order of T at the point
    std::optional<AlphaRat> rhs;   // residue of T when the pole is simple
};

struct SumProductReport {
    bool ok = true;
    std::string witness;
    std::vector<ResidueDatum> residues;  // filled on failure
};

// Checks sum_gamma hat_g^gamma sum_{s in gamma \ (mu ∪ nu)} 1/(u - [s]) = T_{mu*nu}(u) - 1
// by clearing denominators and comparing coefficients of u.
SumProductReport verify_sum_product(const Partition& mu, const Partition& nu);

// --------------------------------------------------- structural lemmas

// T_sigma expanded around an inner corner s.
struct CornerExpansion {
    LatticeRational origin;        // u
    LatticeRational corner;        // u - [s+(1,1)]
    LatticeRational row_ratio;     // over the row of s, upper hooks
    LatticeRational column_ratio;  // over the column of s, lower hooks

    LatticeRational product() const { return origin * corner * row_ratio * column_ratio; }
};

// Throws NotAnInnerCorner if s is not removable from sigma.
CornerExpansion expansion_relative_to(const Partition& sigma, BoxCoord s);
// Row factors lie up-left of s+(1,1) (x <= s.x, y > s.y), column factors
// down-right (x > s.x, y <= s.y).
bool expansion_quadrants_hold(const CornerExpansion& e, BoxCoord s);

// Both sides of the column and row flip identities for t in I_sigma, sigma ⊆ m^n.
struct FlipSides {
    LatticeRational column_lhs, column_rhs;
    LatticeRational row_lhs, row_rhs;
};
FlipSides flip_rule_sides(const Partition& sigma, BoxCoord t, int m, int n);
bool flip_rule_check(const Partition& sigma, BoxCoord t, int m, int n);
// Hook equalities between sigma and its complement at matched corner joins.
bool mirror_rule_check(const Partition& sigma, int m, int n);

// The three quadrant factors of T_{mu*mu_bar} around v- = (m-1, n-1).
struct QuadrantFactors {
    LatticeRational boxes;         // prod_{b in mu} (u-[b])/(u-[b_bar])
    LatticeRational lower_hooks;   // over mu_bar
    LatticeRational upper_hooks;   // over mu
    LatticeRational product() const { return boxes * lower_hooks * upper_hooks; }
};
QuadrantFactors mumu_quadrants(const Partition& mu, int m, int n);

// <J_mu J_mu_bar, J_{m^n}> from the residue of T_{mu*mu_bar} at v-. Needs
// mu and mu_bar nonempty; otherwise T is 1 and has no pole there.
AlphaRat rectangular_residue_formula(const Partition& mu, int m, int n);

// g_{mu, sigma_bar}^{mu ∪ m^n} = g_{sigma, sigma_bar}^{m^n} * prod_{b in mu/sigma} T_{sigma_bar}([b_bar]).
Report union_factorization_check(const Partition& mu, int m, int n);

struct TBoxFactor {
    AlphaRat formula;  // row/column hook-product ratio
    AlphaRat direct;   // T_{sigma_bar}([(m,n) - s - (1,1)])
};
// s must be an outer corner of mu outside m^n.
TBoxFactor t_box_factor(const Partition& mu, BoxCoord s, int m, int n);

}  // namespace jack
