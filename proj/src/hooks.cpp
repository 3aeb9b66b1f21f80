#include "jack/hooks.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "jack/error.hpp"

namespace jack {

char to_char(Hook h) { return h == Hook::U ? 'U' : 'L'; }

AlphaPoly hook_value(const Partition& shape, BoxCoord b, Hook h) {
    HookVector v = h == Hook::U ? upper_hook(shape, b) : lower_hook(shape, b);
    return bracket(v.as_point());
}

HookAssignment::HookAssignment(Partition shape, Hook fill) : shape_(std::move(shape)) {
    for (auto b : shape_.boxes()) choice_.emplace(b, fill);
}

HookAssignment::HookAssignment(Partition shape, std::map<BoxCoord, Hook> choice)
    : shape_(std::move(shape)), choice_(std::move(choice)) {
    if (static_cast<int>(choice_.size()) != shape_.size())
        throw BoxNotInDiagram("assignment covers " + std::to_string(choice_.size()) + " boxes, shape " +
                              shape_.to_string() + " has " + std::to_string(shape_.size()));
    for (const auto& [b, h] : choice_)
        if (!shape_.contains(b))
            throw BoxNotInDiagram(jack::to_string(b) + " is not in " + shape_.to_string());
}

Hook HookAssignment::at(BoxCoord b) const {
    auto it = choice_.find(b);
    if (it == choice_.end()) throw BoxNotInDiagram(jack::to_string(b) + " is not in " + shape_.to_string());
    return it->second;
}

void HookAssignment::set(BoxCoord b, Hook h) {
    auto it = choice_.find(b);
    if (it == choice_.end()) throw BoxNotInDiagram(jack::to_string(b) + " is not in " + shape_.to_string());
    it->second = h;
}

int HookAssignment::count(Hook h) const {
    return static_cast<int>(std::count_if(choice_.begin(), choice_.end(),
                                          [h](const auto& kv) { return kv.second == h; }));
}

AlphaPoly HookAssignment::value() const {
    AlphaPoly acc(1);
    for (const auto& [b, h] : choice_) acc *= hook_value(shape_, b, h);
    return acc;
}

HookAssignment HookAssignment::flipped() const {
    HookAssignment out = *this;
    for (auto& [b, h] : out.choice_) h = flip(h);
    return out;
}

std::string HookAssignment::grid() const {
    std::string out;
    for (int y = shape_.length() - 1; y >= 0; --y) {
        for (int x = 0; x < shape_.row(y); ++x) {
            if (x) out += ' ';
            out += to_char(at({x, y}));
        }
        if (y) out += '\n';
    }
    return out;
}

int StanleyProduct::count(Hook h) const {
    return mu_factor.count(h) + nu_factor.count(h) + lambda_factor.count(h);
}

bool StanleyProduct::balanced() const {
    const int n = lambda_factor.shape().size();
    return count(Hook::U) == n && count(Hook::L) == n;
}

AlphaPoly evaluate_assignment(const HookAssignment& mu, const HookAssignment& nu,
                              const HookAssignment& lambda) {
    return mu.value() * nu.value() * lambda.value();
}

StanleyProduct make_product(HookAssignment mu, HookAssignment nu, HookAssignment lambda) {
    AlphaPoly v = evaluate_assignment(mu, nu, lambda);
    return {std::move(mu), std::move(nu), std::move(lambda), std::move(v)};
}

AlphaRat LrFraction::value() const {
    return AlphaRat(mu_factor.value() * nu_factor.value(), denominator.value());
}

LrFraction to_lr_form(const StanleyProduct& p) {
    return {p.mu_factor, p.nu_factor, p.lambda_factor.flipped()};
}

// ------------------------------------------------------------------ Pieri

StanleyProduct pieri_assignment(const Partition& mu, const Partition& lambda, int r) {
    if (lambda.size() != mu.size() + r || !is_horizontal_strip(lambda, mu))
        throw NotAHorizontalStrip(lambda.to_string() + " / " + mu.to_string() + " is not a horizontal " +
                                  std::to_string(r) + "-strip");
    // A column is touched if the strip has a box in it.
    auto touched = [&](int x) { return lambda.column(x) != mu.column(x); };
    HookAssignment a(mu), lam(lambda);
    for (auto b : mu.boxes()) a.set(b, touched(b.x) ? Hook::U : Hook::L);
    for (auto b : lambda.boxes()) lam.set(b, touched(b.x) ? Hook::L : Hook::U);
    Partition row = r > 0 ? Partition{r} : Partition{};
    return make_product(std::move(a), HookAssignment(row, Hook::U), std::move(lam));
}

// ------------------------------------------------------------ rectangular

namespace {

// The m^n factor: U iff vflip(b) lies in `marked`.
HookAssignment rectangle_factor(const Partition& marked, int m, int n) {
    HookAssignment out(Partition::rectangle(m, n));
    for (auto b : out.shape().boxes())
        out.set(b, marked.contains(vflip(b, m, n)) ? Hook::U : Hook::L);
    return out;
}

}  // namespace

StanleyProduct rectangular_assignment(const Partition& mu, int m, int n, Variant v) {
    Partition mubar = complement(mu, m, n);
    if (v == Variant::A)
        return make_product(HookAssignment(mu, Hook::L), HookAssignment(mubar, Hook::U),
                            rectangle_factor(mu, m, n));
    return make_product(HookAssignment(mu, Hook::U), HookAssignment(mubar, Hook::L),
                        rectangle_factor(mubar, m, n));
}

LrFraction rectangular_lr(const Partition& mu, int m, int n, Variant v) {
    return to_lr_form(rectangular_assignment(mu, m, n, v));
}

// --------------------------------------------------------- rect union

StanleyProduct rect_union_assignment(const Partition& mu, int m, int n, Variant v) {
    const RectangleDecomposition d = decompose_wrt_rectangle(mu, m, n);
    const int c = d.c, r = d.r, l = d.l;
    const Partition mu2bar = complement(d.mu2, d.k, l);
    auto in_k = [&](BoxCoord b) { return b.x >= c && b.x < m && b.y >= r && b.y < n; };
    // K-local vflip.
    auto local = [&](BoxCoord b) { return BoxCoord{b.x - c, l - 1 - (b.y - r)}; };

    HookAssignment a(mu);
    for (auto b : mu.boxes()) {
        Hook h = b.y < r ? Hook::U : Hook::L;
        if (v == Variant::B && in_k(b)) h = Hook::U;
        a.set(b, h);
    }
    HookAssignment nu(d.sigma_bar, v == Variant::A ? Hook::U : Hook::L);
    HookAssignment lam(d.uni);
    const Partition& marked = v == Variant::A ? d.mu2 : mu2bar;
    for (auto b : d.uni.boxes()) {
        Hook h;
        if (b.y < r) h = Hook::L;
        else if (b.x < c) h = Hook::U;
        else h = marked.contains(local(b)) ? Hook::U : Hook::L;
        lam.set(b, h);
    }
    return make_product(std::move(a), std::move(nu), std::move(lam));
}

AlphaRat UnionFactoredForm::f() const {
    AlphaPoly num(1), den(1);
    for (const auto& p : left_numerator) num *= p;
    for (const auto& p : below_numerator) num *= p;
    for (const auto& p : left_denominator) den *= p;
    for (const auto& p : below_denominator) den *= p;
    return AlphaRat(num, den);
}

UnionFactoredForm union_factored_form(const Partition& mu, int m, int n) {
    const RectangleDecomposition d = decompose_wrt_rectangle(mu, m, n);
    UnionFactoredForm out;
    out.mu2 = d.mu2;
    out.k = d.k;
    out.l = d.l;
    for (int y = d.r; y < n; ++y)
        for (int x = 0; x < d.c; ++x) {
            out.left_boxes.push_back({x, y});
            out.left_numerator.push_back(hook_value(mu, {x, y}, Hook::L));
            out.left_denominator.push_back(hook_value(d.uni, {x, y}, Hook::L));
        }
    for (int y = 0; y < d.r; ++y)
        for (int x = d.c; x < m; ++x) {
            out.below_boxes.push_back({x, y});
            out.below_numerator.push_back(hook_value(mu, {x, y}, Hook::U));
            out.below_denominator.push_back(hook_value(d.uni, {x, y}, Hook::U));
        }
    out.inner = rectangular_lr(d.mu2, d.k, d.l).value();
    return out;
}

// ----------------------------------------------------------------- search

namespace {

struct Choice {
    Integer constant;  // positive content of the hook
    int factor = -1;   // index into the target's primitive factors, -1 if none
    bool usable = true;
};

struct Slot {
    int which;  // 0 mu, 1 nu, 2 lambda
    BoxCoord box;
    Choice u, l;
};

Choice normalize(BoxCoord p, const std::map<BoxCoord, int>& index) {
    Choice c;
    if (p.x == 0) {
        c.constant = -p.y;
        return c;
    }
    const int g = std::gcd(p.x, std::abs(p.y));
    c.constant = g;
    auto it = index.find({p.x / g, p.y / g});
    if (it == index.end()) c.usable = false;
    else c.factor = it->second;
    return c;
}

struct Searcher {
    std::vector<Slot> slots;
    std::vector<int> need;  // multiplicities of the target factors
    Rational target_constant;
    int half = 0;           // |lambda|

    struct State {
        std::vector<int> left;
        int remaining_factors = 0;
        Integer constant = 1;
        int us = 0, ls = 0;
        std::vector<Hook> picks;
    };

    bool apply(State& s, std::size_t i, Hook h) const {
        const Choice& c = h == Hook::U ? slots[i].u : slots[i].l;
        if (!c.usable) return false;
        if (h == Hook::U ? s.us >= half : s.ls >= half) return false;
        if (c.factor >= 0) {
            if (s.left[static_cast<std::size_t>(c.factor)] == 0) return false;
            --s.left[static_cast<std::size_t>(c.factor)];
            --s.remaining_factors;
        }
        s.constant *= c.constant;
        (h == Hook::U ? s.us : s.ls) += 1;
        s.picks.push_back(h);
        return true;
    }

    void undo(State& s, std::size_t i) const {
        const Hook h = s.picks.back();
        const Choice& c = h == Hook::U ? slots[i].u : slots[i].l;
        if (c.factor >= 0) {
            ++s.left[static_cast<std::size_t>(c.factor)];
            ++s.remaining_factors;
        }
        s.constant /= c.constant;
        (h == Hook::U ? s.us : s.ls) -= 1;
        s.picks.pop_back();
    }

    bool viable(const State& s, std::size_t next) const {
        if (s.remaining_factors > static_cast<int>(slots.size() - next)) return false;
        // The accumulated content must still divide the target constant.
        if (target_constant.get_den() != 1) return false;
        return mpz_divisible_p(target_constant.get_num().get_mpz_t(), s.constant.get_mpz_t()) != 0;
    }

    void dfs(State& s, std::size_t i, std::vector<std::vector<Hook>>& found) const {
        if (!viable(s, i)) return;
        if (i == slots.size()) {
            if (s.remaining_factors == 0 && Rational(s.constant) == target_constant) found.push_back(s.picks);
            return;
        }
        for (Hook h : {Hook::U, Hook::L}) {
            if (!apply(s, i, h)) continue;
            dfs(s, i + 1, found);
            undo(s, i);
        }
    }
};

}  // namespace

std::vector<StanleyProduct> balanced_assignment_search(const Partition& mu, const Partition& nu,
                                                       const Partition& lambda, const AlphaPoly& target,
                                                       const SearchOptions& opts) {
    if (mu.size() + nu.size() != lambda.size())
        throw SizeMismatch("|" + mu.to_string() + "| + |" + nu.to_string() + "| != |" + lambda.to_string() +
                           "|");
    const int total = mu.size() + nu.size() + lambda.size();
    if (total > opts.max_boxes)
        throw SearchBoundExceeded(std::to_string(total) + " boxes exceed the search bound " +
                                  std::to_string(opts.max_boxes));
    if (target.is_zero()) return {};
    auto fac = factor_linear(target, total + 1);
    if (!fac) return {};

    Searcher sr;
    sr.target_constant = fac->constant;
    sr.half = lambda.size();
    std::map<BoxCoord, int> index;
    for (const auto& [p, mult] : fac->factors) {
        index.emplace(p, static_cast<int>(sr.need.size()));
        sr.need.push_back(mult);
    }
    const Partition* shapes[] = {&mu, &nu, &lambda};
    for (int w = 0; w < 3; ++w)
        for (auto b : shapes[w]->boxes())
            sr.slots.push_back({w, b, normalize(upper_hook(*shapes[w], b).as_point(), index),
                                normalize(lower_hook(*shapes[w], b).as_point(), index)});

    // Fan out over fixed-length prefixes; concatenating per-prefix results in
    // prefix order keeps the output independent of the job count.
    const std::size_t depth = std::min<std::size_t>(sr.slots.size(), opts.jobs > 1 ? 8 : 0);
    std::vector<Searcher::State> starts;
    {
        Searcher::State root;
        root.left = sr.need;
        root.remaining_factors = std::accumulate(sr.need.begin(), sr.need.end(), 0);
        std::vector<Searcher::State> frontier{root};
        for (std::size_t i = 0; i < depth; ++i) {
            std::vector<Searcher::State> next;
            for (auto& s : frontier)
                for (Hook h : {Hook::U, Hook::L}) {
                    Searcher::State t = s;
                    if (sr.apply(t, i, h) && sr.viable(t, i + 1)) next.push_back(std::move(t));
                }
            frontier = std::move(next);
        }
        starts = std::move(frontier);
    }
    std::vector<std::vector<std::vector<Hook>>> found(starts.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i; (i = cursor.fetch_add(1)) < starts.size();) sr.dfs(starts[i], depth, found[i]);
    };
    const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(starts.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<StanleyProduct> out;
    for (const auto& bucket : found)
        for (const auto& picks : bucket) {
            HookAssignment f[3] = {HookAssignment(mu), HookAssignment(nu), HookAssignment(lambda)};
            for (std::size_t i = 0; i < picks.size(); ++i)
                f[sr.slots[i].which].set(sr.slots[i].box, picks[i]);
            out.push_back(make_product(std::move(f[0]), std::move(f[1]), std::move(f[2])));
        }
    return out;
}

}  // namespace jack
