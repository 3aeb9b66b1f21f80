#pragma once

// Choices of upper/lower hooks per box and the products they give.

#include <map>
#include <string>
#include <vector>

#include "jack/alpha.hpp"
#include "jack/partition.hpp"

namespace jack {

enum class Hook { U, L };

constexpr Hook flip(Hook h) { return h == Hook::U ? Hook::L : Hook::U; }
char to_char(Hook h);

// Upper hook alpha*(arm+1) + leg, lower hook alpha*arm + leg + 1.
AlphaPoly hook_value(const Partition& shape, BoxCoord b, Hook h);

class HookAssignment {
public:
    HookAssignment() = default;
    // Every box of `shape` gets `fill`.
    explicit HookAssignment(Partition shape, Hook fill = Hook::L);
    // Throws BoxNotInDiagram unless `choice` covers exactly the boxes of shape.
    HookAssignment(Partition shape, std::map<BoxCoord, Hook> choice);

    const Partition& shape() const { return shape_; }
    const std::map<BoxCoord, Hook>& choices() const { return choice_; }
    Hook at(BoxCoord b) const;
    void set(BoxCoord b, Hook h);

    int count(Hook h) const;
    AlphaPoly value() const;
    HookAssignment flipped() const;

    // Rows top to bottom, boxes separated by a space: "U\nU U\nU U L".
    std::string grid() const;

    friend bool operator==(const HookAssignment&, const HookAssignment&) = default;

private:
    Partition shape_;
    std::map<BoxCoord, Hook> choice_;
};

// prod h~_mu * prod h~_nu * prod h~_lambda.
struct StanleyProduct {
    HookAssignment mu_factor;
    HookAssignment nu_factor;
    HookAssignment lambda_factor;
    AlphaPoly value;

    int count(Hook h) const;
    // #U = #L = |lambda|.
    bool balanced() const;

    friend bool operator==(const StanleyProduct&, const StanleyProduct&) = default;
};

AlphaPoly evaluate_assignment(const HookAssignment& mu, const HookAssignment& nu,
                              const HookAssignment& lambda);
StanleyProduct make_product(HookAssignment mu, HookAssignment nu, HookAssignment lambda);

// g = numerator hooks over mu and nu divided by denominator hooks over lambda.
struct LrFraction {
    HookAssignment mu_factor;
    HookAssignment nu_factor;
    HookAssignment denominator;

    AlphaRat value() const;
};

// Moves the lambda factor to the denominator with every hook flipped, using
// ||J_lambda||^2 = prod U * prod L.
LrFraction to_lr_form(const StanleyProduct& p);

enum class Variant { A, B };

// lambda / mu a horizontal r-strip. Throws NotAHorizontalStrip otherwise.
StanleyProduct pieri_assignment(const Partition& mu, const Partition& lambda, int r);

// <J_mu J_mu_bar, J_{m^n}>. Variant A: mu all L, mu_bar all U, box b of m^n
// is U iff vflip(b) in mu. Variant B: mu all U, mu_bar all L, b is U iff
// vflip(b) in mu_bar. Throws NotContained if mu does not fit in m^n.
StanleyProduct rectangular_assignment(const Partition& mu, int m, int n, Variant v = Variant::A);
LrFraction rectangular_lr(const Partition& mu, int m, int n, Variant v = Variant::A);

// <J_mu J_sigma_bar, J_{mu ∪ m^n}>. Rows below r: U in mu, L in the union.
// Columns left of c above row r: U in the union. Elsewhere mu is L and the
// K = k x l block carries the rectangular solution for mu2. Throws
// GenericShapeViolation.
StanleyProduct rect_union_assignment(const Partition& mu, int m, int n, Variant v = Variant::A);

// g_{mu, sigma_bar}^{mu ∪ m^n} = F * g_{mu2, mu2_bar}^{k^l}.
struct UnionFactoredForm {
    // Boxes left of K (x < c, r <= y < n): lower hooks of mu over lower hooks of the union.
    std::vector<BoxCoord> left_boxes;
    std::vector<AlphaPoly> left_numerator;
    std::vector<AlphaPoly> left_denominator;
    // Boxes below K (c <= x < m, y < r): upper hooks of mu over upper hooks of the union.
    std::vector<BoxCoord> below_boxes;
    std::vector<AlphaPoly> below_numerator;
    std::vector<AlphaPoly> below_denominator;

    Partition mu2;
    int k = 0;
    int l = 0;
    AlphaRat inner;  // g_{mu2, mu2_bar}^{k^l} from the rectangular hook fraction

    AlphaRat f() const;
    AlphaRat value() const { return f() * inner; }
};

UnionFactoredForm union_factored_form(const Partition& mu, int m, int n);

struct SearchOptions {
    int max_boxes = 24;  // |mu| + |nu| + |lambda|
    int jobs = 1;
};

// Every balanced assignment whose product is `target`, ordered by the choice
// sequence over mu, nu, lambda boxes (row-major, U before L). Throws
// SizeMismatch if |mu| + |nu| != |lambda| and SearchBoundExceeded past
// max_boxes.
std::vector<StanleyProduct> balanced_assignment_search(const Partition& mu, const Partition& nu,
                                                       const Partition& lambda, const AlphaPoly& target,
                                                       const SearchOptions& opts = {});

}  // namespace jack
