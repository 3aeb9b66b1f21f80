#include "jack/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "jack/error.hpp"
#include "jack/lr.hpp"

namespace jack {

// --------------------------------------------------------- LatticeRational

LatticeRational::LatticeRational(const Orders& orders) {
    for (const auto& [b, k] : orders) bump(b, k);
}

LatticeRational LatticeRational::factor(BoxCoord b, int order) {
    LatticeRational t;
    t.bump(b, order);
    return t;
}

void LatticeRational::bump(BoxCoord b, int k) {
    if (k == 0) return;
    auto [it, inserted] = orders_.try_emplace(b, k);
    if (!inserted) {
        it->second += k;
        if (it->second == 0) orders_.erase(it);
    }
}

int LatticeRational::order_at(BoxCoord b) const {
    auto it = orders_.find(b);
    return it == orders_.end() ? 0 : it->second;
}

int LatticeRational::zero_count() const {
    int c = 0;
    for (const auto& [b, k] : orders_)
        if (k > 0) c += k;
    return c;
}

int LatticeRational::pole_count() const {
    int c = 0;
    for (const auto& [b, k] : orders_)
        if (k < 0) c -= k;
    return c;
}

LatticeRational LatticeRational::inverse() const {
    LatticeRational t;
    for (const auto& [b, k] : orders_) t.orders_.emplace(b, -k);
    return t;
}

LatticeRational LatticeRational::shifted(BoxCoord s) const {
    LatticeRational t;
    for (const auto& [b, k] : orders_) t.orders_.emplace(b + s, k);
    return t;
}

LatticeRational& LatticeRational::operator*=(const LatticeRational& o) {
    for (const auto& [b, k] : o.orders_) bump(b, k);
    return *this;
}

LatticeRational& LatticeRational::operator/=(const LatticeRational& o) {
    for (const auto& [b, k] : o.orders_) bump(b, -k);
    return *this;
}

std::string to_string(const LatticeRational& t) {
    if (t.is_one()) return "1";
    std::ostringstream num, den;
    for (const auto& [b, k] : t.orders()) {
        std::ostringstream f;
        f << "(u-[" << b.x << "," << b.y << "])";
        if (std::abs(k) > 1) f << "^" << std::abs(k);
        (k > 0 ? num : den) << f.str();
    }
    std::string n = num.str().empty() ? "1" : num.str();
    return den.str().empty() ? n : n + "/" + den.str();
}

LatticeRational t_box(BoxCoord b) {
    LatticeRational t;
    t *= LatticeRational::factor(b, 1);
    t *= LatticeRational::factor(b + BoxCoord{1, 1}, 1);
    t *= LatticeRational::factor(b + BoxCoord{1, 0}, -1);
    t *= LatticeRational::factor(b + BoxCoord{0, 1}, -1);
    return t;
}

LatticeRational t_gamma(const BoxMultiset& gamma) {
    LatticeRational t;
    for (const auto& [b, mult] : gamma) {
        const LatticeRational tb = t_box(b);
        for (int i = 0; i < mult; ++i) t *= tb;
    }
    return t;
}

LatticeRational t_star(const Partition& mu, const Partition& nu) {
    return t_gamma(star_product(mu, nu));
}

LatticeRational t_partition(const Partition& mu) {
    LatticeRational t = LatticeRational::factor({0, 0}, 1);
    for (auto s : inner_corners_shifted(mu)) t *= LatticeRational::factor(s, 1);
    for (auto s : outer_corners(mu)) t *= LatticeRational::factor(s, -1);
    return t;
}

int order_at(const LatticeRational& t, BoxCoord s) { return t.order_at(s); }

int order_formula(const Partition& mu, const Partition& nu, BoxCoord s) {
    const auto outer = outer_corners(mu);
    auto zeros = inner_corners_shifted(mu);
    zeros.push_back({0, 0});
    int poles = 0, zs = 0;
    for (auto b : nu.boxes()) {
        const BoxCoord d = s - b;
        if (std::find(outer.begin(), outer.end(), d) != outer.end()) ++poles;
        if (std::find(zeros.begin(), zeros.end(), d) != zeros.end()) ++zs;
    }
    return poles - zs;
}

namespace {

AlphaRat product_excluding(const LatticeRational& t, BoxCoord s) {
    AlphaPoly num(1), den(1);
    for (const auto& [b, k] : t.orders()) {
        if (b == s) continue;
        const AlphaPoly d = bracket(s - b);
        for (int i = 0; i < std::abs(k); ++i) (k > 0 ? num : den) *= d;
    }
    return AlphaRat(num, den);
}

}  // namespace

AlphaRat residue_at(const LatticeRational& t, BoxCoord s) {
    if (t.order_at(s) != -1)
        throw NotASimplePole("u = [" + to_string(s) + "] has order " + std::to_string(t.order_at(s)) +
                             ", not a simple pole");
    return product_excluding(t, s);
}

AlphaRat value_at(const LatticeRational& t, BoxCoord s) {
    if (t.order_at(s) != 0)
        throw PoleOrZeroAtPoint("u = [" + to_string(s) + "] is a zero or pole of order " +
                                std::to_string(t.order_at(s)));
    return product_excluding(t, s);
}

// ------------------------------------------------------ sum-product identity

namespace {

// Polynomials in u with coefficients in Q(alpha), ascending.
using UPoly = std::vector<AlphaRat>;

void mul_linear(UPoly& p, const AlphaPoly& root) {
    // p * (u - root)
    p.emplace_back();
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] = p[i - 1] - p[i] * AlphaRat(root);
    p[0] = -(p[0] * AlphaRat(root));
}

UPoly expand(const LatticeRational& t) {
    UPoly p{AlphaRat(1)};
    for (const auto& [b, k] : t.orders()) {
        if (k < 0) throw InternalError("expanding a lattice rational with poles");
        const AlphaPoly r = bracket(b);
        for (int i = 0; i < k; ++i) mul_linear(p, r);
    }
    return p;
}

// Exact quotient of p by (u - root).
UPoly div_linear(const UPoly& p, const AlphaPoly& root) {
    UPoly q(p.size() - 1);
    AlphaRat carry;
    for (std::size_t i = p.size() - 1; i > 0; --i) {
        carry = p[i] + carry * AlphaRat(root);
        q[i - 1] = carry;
    }
    if (!(p[0] + carry * AlphaRat(root)).is_zero()) throw InternalError("inexact division by a linear factor");
    return q;
}

}  // namespace

SumProductReport verify_sum_product(const Partition& mu, const Partition& nu) {
    SumProductReport report;
    const LatticeRational T = t_star(mu, nu);
    const Partition base = union_of(mu, nu);
    const AlphaRat scale = AlphaRat(AlphaPoly(1)) / AlphaRat(varpi(mu) * varpi(nu));

    std::map<BoxCoord, AlphaRat> coeff;
    for (const auto& e : jack_lr(mu, nu).entries) {
        const AlphaRat ghat = e.g * AlphaRat(varpi(e.gamma)) * scale;
        for (auto s : e.gamma.boxes())
            if (!base.contains(s)) coeff[s] += ghat;
    }
    for (auto it = coeff.begin(); it != coeff.end();)
        it = it->second.is_zero() ? coeff.erase(it) : std::next(it);

    LatticeRational::Orders d_orders;
    for (const auto& [b, k] : T.orders())
        if (k < 0) d_orders[b] = -k;
    for (const auto& [s, c] : coeff) d_orders[s] = std::max(d_orders[s], 1);
    const LatticeRational D(d_orders);

    const UPoly Dpoly = expand(D);
    UPoly rhs = expand(T * D);
    rhs.resize(std::max(rhs.size(), Dpoly.size()));
    for (std::size_t i = 0; i < Dpoly.size(); ++i) rhs[i] -= Dpoly[i];

    UPoly lhs(Dpoly.size());
    for (const auto& [s, c] : coeff) {
        const UPoly q = div_linear(Dpoly, bracket(s));
        for (std::size_t i = 0; i < q.size(); ++i) lhs[i] += c * q[i];
    }
    lhs.resize(std::max(lhs.size(), rhs.size()));
    rhs.resize(lhs.size());

    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] == rhs[i]) continue;
        report.ok = false;
        std::ostringstream w;
        w << "coefficient of u^" << i << " differs: sum side " << to_string(lhs[i]) << ", product side "
          << to_string(rhs[i]);
        report.witness = w.str();
        break;
    }
    if (!report.ok) {
        std::set<BoxCoord> points;
        for (const auto& [b, k] : D.orders()) points.insert(b);
        for (auto p : points) {
            ResidueDatum r;
            r.point = p;
            if (auto it = coeff.find(p); it != coeff.end()) r.lhs = it->second;
            r.rhs_order = T.order_at(p);
            if (r.rhs_order == -1) r.rhs = residue_at(T, p);
            report.residues.push_back(std::move(r));
        }
    }
    return report;
}

// -------------------------------------------------------- expansion lemma

namespace {

BoxCoord point_of(HookVector h) { return h.as_point(); }

}  // namespace

CornerExpansion expansion_relative_to(const Partition& sigma, BoxCoord s) {
    const Partition smaller = sigma.without_box(s);  // throws NotAnInnerCorner
    const BoxCoord sp = s + BoxCoord{1, 1};
    CornerExpansion e;
    e.origin = LatticeRational::factor({0, 0});
    e.corner = LatticeRational::factor(sp);
    for (auto b : row_set(smaller, s)) e.row_ratio *= LatticeRational::factor(sp - point_of(upper_hook(smaller, b)));
    for (auto b : row_set(sigma, s)) e.row_ratio /= LatticeRational::factor(sp - point_of(upper_hook(sigma, b)));
    for (auto b : column_set(smaller, s))
        e.column_ratio *= LatticeRational::factor(sp + point_of(lower_hook(smaller, b)));
    for (auto b : column_set(sigma, s))
        e.column_ratio /= LatticeRational::factor(sp + point_of(lower_hook(sigma, b)));
    return e;
}

bool expansion_quadrants_hold(const CornerExpansion& e, BoxCoord s) {
    for (const auto& [b, k] : e.row_ratio.orders())
        if (!(b.x <= s.x && b.y > s.y)) return false;
    for (const auto& [b, k] : e.column_ratio.orders())
        if (!(b.x > s.x && b.y <= s.y)) return false;
    return true;
}

// -------------------------------------------------------------- flip rules

namespace {

void require_in_rectangle(const Partition& sigma, int m, int n) {
    if (!Partition::rectangle(m, n).contains(sigma))
        throw NotContained("partition " + sigma.to_string() + " does not fit in " + std::to_string(m) + "^" +
                           std::to_string(n));
}

LatticeRational hook_ratio(const std::vector<BoxCoord>& num_boxes, const Partition& num_shape,
                           const std::vector<BoxCoord>& den_boxes, const Partition& den_shape, bool upper) {
    LatticeRational r;
    for (auto b : num_boxes)
        r *= LatticeRational::factor(point_of(upper ? upper_hook(num_shape, b) : lower_hook(num_shape, b)));
    for (auto b : den_boxes)
        r /= LatticeRational::factor(point_of(upper ? upper_hook(den_shape, b) : lower_hook(den_shape, b)));
    return r;
}

}  // namespace

FlipSides flip_rule_sides(const Partition& sigma, BoxCoord t, int m, int n) {
    require_in_rectangle(sigma, m, n);
    const Partition smaller = sigma.without_box(t);
    const Partition sbar = complement(sigma, m, n);
    const BoxCoord tbar = bar(t, m, n);
    const Partition sbar_plus = sbar.with_box(tbar);

    FlipSides f;
    f.column_lhs = hook_ratio(column_set(smaller, t), smaller, column_set(sigma, t), sigma, true);
    f.column_rhs = LatticeRational::factor(BoxCoord{m, 0} - t, -1) *
                   hook_ratio(row_set(sbar, tbar), sbar_plus, row_set(sbar, tbar), sbar, true);
    f.row_lhs = hook_ratio(row_set(smaller, t), smaller, row_set(sigma, t), sigma, false);
    f.row_rhs = LatticeRational::factor(t - BoxCoord{0, n}, -1) *
                hook_ratio(column_set(sbar, tbar), sbar_plus, column_set(sbar, tbar), sbar, false);
    return f;
}

bool flip_rule_check(const Partition& sigma, BoxCoord t, int m, int n) {
    const FlipSides f = flip_rule_sides(sigma, t, m, n);
    return f.column_lhs == f.column_rhs && f.row_lhs == f.row_rhs;
}

bool mirror_rule_check(const Partition& sigma, int m, int n) {
    require_in_rectangle(sigma, m, n);
    const Partition sbar = complement(sigma, m, n);
    const auto inner = inner_corners(sigma);
    for (auto t : inner) {
        const BoxCoord tbar = bar(t, m, n);
        for (auto s : outer_corners(sigma)) {
            if (s.x >= m || s.y >= n) continue;
            const BoxCoord a = join(s, t), b = join(bar(s, m, n), tbar);
            if (upper_hook(sigma, a) != upper_hook(sbar, b)) return false;
            if (lower_hook(sigma, a) != lower_hook(sbar, b)) return false;
        }
        const Partition smaller = sigma.without_box(t);
        const Partition sbar_plus = sbar.with_box(tbar);
        for (auto w : inner) {
            if (w == t) continue;
            const BoxCoord a = join(w, t), b = join(bar(w, m, n), tbar);
            if (upper_hook(smaller, a) != upper_hook(sbar_plus, b)) return false;
            if (lower_hook(smaller, a) != lower_hook(sbar_plus, b)) return false;
        }
    }
    return true;
}

// ----------------------------------------------------------- quadrants

QuadrantFactors mumu_quadrants(const Partition& mu, int m, int n) {
    require_in_rectangle(mu, m, n);
    const Partition mubar = complement(mu, m, n);
    const Partition rect = Partition::rectangle(m, n);
    const BoxCoord v{m - 1, n - 1};
    QuadrantFactors q;
    for (auto b : mu.boxes()) {
        q.boxes *= LatticeRational::factor(b);
        q.boxes /= LatticeRational::factor(bar(b, m, n));
        q.upper_hooks *= LatticeRational::factor(v + point_of(upper_hook(mu, b)));
        q.upper_hooks /= LatticeRational::factor(v + point_of(upper_hook(rect, hflip(b, m, n))));
    }
    for (auto b : mubar.boxes()) {
        q.lower_hooks *= LatticeRational::factor(v - point_of(lower_hook(mubar, b)));
        q.lower_hooks /= LatticeRational::factor(v - point_of(lower_hook(rect, vflip(b, m, n))));
    }
    return q;
}

AlphaRat rectangular_residue_formula(const Partition& mu, int m, int n) {
    require_in_rectangle(mu, m, n);
    const Partition mubar = complement(mu, m, n);
    if (mu.empty() || mubar.empty())
        throw Error("the residue formula needs mu and its complement both nonempty");
    const Partition rect = Partition::rectangle(m, n);
    const AlphaRat res = residue_at(t_star(mu, mubar), {m - 1, n - 1});
    return res * AlphaRat(jack_norm(rect)) * AlphaRat(varpi(mu) * varpi(mubar)) / AlphaRat(varpi(rect));
}

// ----------------------------------------------------- rectangular union

Report union_factorization_check(const Partition& mu, int m, int n) {
    const auto d = decompose_wrt_rectangle(mu, m, n);
    const Partition rect = Partition::rectangle(m, n);
    const BoxCoord v{m - 1, n - 1};
    const LatticeRational Tbar = t_partition(d.sigma_bar);
    AlphaRat rhs = lr_coefficient(d.sigma, d.sigma_bar, rect);
    for (auto b : mu.boxes())
        if (!d.sigma.contains(b)) rhs *= value_at(Tbar, v - b);
    const AlphaRat lhs = lr_coefficient(mu, d.sigma_bar, d.uni);
    Report r;
    if (!(lhs == rhs)) {
        r.ok = false;
        r.witness = "g = " + to_string(lhs) + " but factorized form gives " + to_string(rhs);
    }
    return r;
}

TBoxFactor t_box_factor(const Partition& mu, BoxCoord s, int m, int n) {
    const auto outer = outer_corners(mu);
    if (std::find(outer.begin(), outer.end(), s) == outer.end())
        throw Error("box " + to_string(s) + " is not an outer corner of " + mu.to_string());
    if (s.x < m && s.y < n) throw Error("box " + to_string(s) + " lies inside the rectangle");
    const auto d = decompose_wrt_rectangle(mu, m, n);
    const Partition rect = Partition::rectangle(m, n);
    const Partition plus = mu.with_box(s);
    const Partition big = union_of(mu, rect);
    const Partition big_plus = union_of(plus, rect);

    auto row_col = [&](const Partition& a, const Partition& b) {
        AlphaPoly num(1), den(1);
        for (auto x : row_set(a, s)) num *= bracket(point_of(upper_hook(a, x)));
        for (auto x : row_set(b, s)) den *= bracket(point_of(upper_hook(b, x)));
        for (auto x : column_set(a, s)) num *= bracket(point_of(lower_hook(a, x)));
        for (auto x : column_set(b, s)) den *= bracket(point_of(lower_hook(b, x)));
        return AlphaRat(num, den);
    };
    TBoxFactor f;
    f.formula = row_col(big, big_plus) / row_col(mu, plus);
    f.direct = value_at(t_partition(d.sigma_bar), BoxCoord{m - 1, n - 1} - s);
    return f;
}

}  // namespace jack
