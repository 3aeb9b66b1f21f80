#include "jack/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>

#include "jack/error.hpp"
#include "jack/json_io.hpp"

namespace jack {

std::string to_string(Basis b) {
    switch (b) {
        case Basis::monomial: return "monomial";
        case Basis::powersum: return "powersum";
        case Basis::jackJ: return "jackJ";
    }
    return "?";
}

std::string basis_letter(Basis b) {
    switch (b) {
        case Basis::monomial: return "m";
        case Basis::powersum: return "p";
        case Basis::jackJ: return "J";
    }
    return "?";
}

std::string to_string(const SymFunc& f, Notation notation) {
    if (f.is_zero()) return "0";
    const std::string minus = notation == Notation::unicode ? "−" : "-";
    std::string out;
    for (const auto& [lambda, c] : f.terms()) {
        std::string coeff = to_string(c, notation);
        bool neg = false;
        const auto& cs = c.num().coeffs();
        const bool monomial_coeff =
            c.is_polynomial() && std::count_if(cs.begin(), cs.end(), [](const Rational& q) { return q != 0; }) == 1;
        if (monomial_coeff) {
            neg = c.num().leading() < 0;
            coeff = to_string(neg ? -c : c, notation);
            if (coeff == "1") coeff.clear();
        } else {
            coeff = "(" + coeff + ")";
        }
        if (!out.empty()) out += neg ? " " + minus + " " : " + ";
        else if (neg) out += minus;
        if (!coeff.empty()) out += coeff + " ";
        out += basis_letter(f.basis()) + "_" + (lambda.empty() ? std::string("0") : lambda.compact());
    }
    return out;
}

Basis parse_basis(const std::string& name) {
    if (name == "monomial" || name == "m") return Basis::monomial;
    if (name == "powersum" || name == "p") return Basis::powersum;
    if (name == "jackJ" || name == "J") return Basis::jackJ;
    throw ParseError("unknown basis '" + name + "'");
}

// ------------------------------------------------------------------ SymFunc

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda) {
    SymFunc f(basis);
    f.add(lambda, AlphaRat(1));
    return f;
}

std::optional<int> SymFunc::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.size();
}

AlphaRat SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? AlphaRat() : it->second;
}

void SymFunc::add(const Partition& lambda, const AlphaRat& c) {
    if (c.is_zero()) return;
    if (!terms_.empty() && terms_.begin()->first.size() != lambda.size())
        throw SizeMismatch("symmetric function terms must be homogeneous: degree " +
                           std::to_string(terms_.begin()->first.size()) + " vs " +
                           std::to_string(lambda.size()));
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.is_zero()) return *this;
    if (o.basis_ != basis_) return *this += convert(o, basis_);
    for (const auto& [lambda, c] : o.terms_) add(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (o.is_zero()) return *this;
    if (o.basis_ != basis_) return *this -= convert(o, basis_);
    for (const auto& [lambda, c] : o.terms_) add(lambda, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const AlphaRat& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, c] : terms_) c *= k;
    return *this;
}

// ---------------------------------------------------------- degree tables

namespace {

// Per-degree data shared by every basis change and every Gram-Schmidt run.
struct DegreeTable {
    int n = 0;
    std::vector<Partition> parts;  // reverse-lexicographic
    std::map<Partition, int> index;
    std::vector<std::vector<std::pair<int, Integer>>> p_in_m;   // p_i = sum c m_j
    std::vector<std::vector<std::pair<int, Rational>>> m_in_p;  // m_i = sum c p_j
    std::vector<Integer> z;
    std::vector<int> len;
};

// <m_i, m_j> as a polynomial in alpha, dense by power.
struct GramTable {
    std::vector<std::vector<std::vector<Rational>>> g;  // g[i][j], j <= i
};

using MonomialExpansion = std::map<Partition, Integer>;

// m_nu * p_k: raise one part value w (or a new zero part) by k; the
// coefficient of the result is the multiplicity of w+k in it.
MonomialExpansion times_power(const MonomialExpansion& f, int k) {
    MonomialExpansion out;
    for (const auto& [nu, c] : f) {
        const auto& p = nu.parts();
        std::vector<int> values;
        for (int v : p)
            if (values.empty() || values.back() != v) values.push_back(v);
        values.push_back(0);
        for (int w : values) {
            std::vector<int> q = p;
            if (w == 0) q.push_back(k);
            else *std::find(q.begin(), q.end(), w) += k;
            std::sort(q.begin(), q.end(), std::greater<>());
            long mult = std::count(q.begin(), q.end(), w + k);
            out[Partition(std::move(q))] += c * mult;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

MonomialExpansion power_expansion(const Partition& lambda,
                                  std::map<Partition, MonomialExpansion>& memo) {
    if (lambda.empty()) return {{Partition{}, Integer(1)}};
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    std::vector<int> prefix = lambda.parts();
    int last = prefix.back();
    prefix.pop_back();
    auto out = times_power(power_expansion(Partition(std::move(prefix)), memo), last);
    memo.emplace(lambda, out);
    return out;
}

int length_of(const Partition& p) { return p.length(); }

std::shared_ptr<const DegreeTable> build_degree_table(int n) {
    auto t = std::make_shared<DegreeTable>();
    t->n = n;
    t->parts = partitions_of(n);
    const int P = static_cast<int>(t->parts.size());
    for (int i = 0; i < P; ++i) t->index.emplace(t->parts[static_cast<std::size_t>(i)], i);

    std::map<Partition, MonomialExpansion> memo;
    t->p_in_m.resize(static_cast<std::size_t>(P));
    for (int i = 0; i < P; ++i) {
        for (const auto& [mu, c] : power_expansion(t->parts[static_cast<std::size_t>(i)], memo))
            t->p_in_m[static_cast<std::size_t>(i)].emplace_back(t->index.at(mu), c);
        auto& row = t->p_in_m[static_cast<std::size_t>(i)];
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    // p_i involves m_j only for j dominating i, hence j <= i: forward substitution.
    std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(P),
                                             std::vector<Rational>(static_cast<std::size_t>(P)));
    for (int i = 0; i < P; ++i) {
        auto& row = dense[static_cast<std::size_t>(i)];
        row[static_cast<std::size_t>(i)] = 1;
        Integer diag;
        for (const auto& [j, c] : t->p_in_m[static_cast<std::size_t>(i)]) {
            if (j == i) {
                diag = c;
                continue;
            }
            if (j > i) throw InternalError("power-sum to monomial matrix is not triangular");
            const auto& prev = dense[static_cast<std::size_t>(j)];
            for (int k = 0; k <= j; ++k)
                if (prev[static_cast<std::size_t>(k)] != 0)
                    row[static_cast<std::size_t>(k)] -= c * prev[static_cast<std::size_t>(k)];
        }
        if (diag == 0) throw InternalError("singular power-sum to monomial matrix");
        for (auto& q : row) q /= diag;
    }
    t->m_in_p.resize(static_cast<std::size_t>(P));
    for (int i = 0; i < P; ++i)
        for (int k = 0; k < P; ++k)
            if (dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0)
                t->m_in_p[static_cast<std::size_t>(i)].emplace_back(
                    k, dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);

    for (const auto& p : t->parts) {
        t->z.push_back(z_factor(p));
        t->len.push_back(length_of(p));
    }
    return t;
}

std::shared_ptr<const GramTable> build_gram_table(const DegreeTable& t) {
    auto gt = std::make_shared<GramTable>();
    const std::size_t P = t.parts.size();
    // Dense weighted rows: w_i[k] = m_in_p[i][k] * z_k, bucketed by len(k).
    std::vector<std::vector<Rational>> dense(P, std::vector<Rational>(P));
    for (std::size_t i = 0; i < P; ++i)
        for (const auto& [k, c] : t.m_in_p[i]) dense[i][static_cast<std::size_t>(k)] = c;
    gt->g.resize(P);
    Rational tmp;
    for (std::size_t i = 0; i < P; ++i) {
        gt->g[i].resize(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            std::vector<Rational> poly(static_cast<std::size_t>(t.n) + 1);
            for (const auto& [k, c] : t.m_in_p[i]) {
                const Rational& d = dense[j][static_cast<std::size_t>(k)];
                if (d == 0) continue;
                tmp = c * d;
                tmp *= t.z[static_cast<std::size_t>(k)];
                poly[static_cast<std::size_t>(t.len[static_cast<std::size_t>(k)])] += tmp;
            }
            gt->g[i][j] = std::move(poly);
        }
    }
    return gt;
}

// ------------------------------------------------------------------ caches

constexpr int kFullTableDegree = 9;

struct Cache {
    std::mutex mu;
    bool enabled = true;
    std::map<int, std::shared_ptr<const DegreeTable>> tables;
    std::map<int, std::shared_ptr<const GramTable>> grams;
    std::map<Partition, std::shared_ptr<const SymFunc>> jacks;
    std::map<Partition, std::shared_ptr<const SymFunc>> jacks_p;
};

Cache& cache() {
    static Cache c;
    return c;
}

std::shared_ptr<const DegreeTable> degree_table(int n) {
    auto& c = cache();
    {
        std::lock_guard lock(c.mu);
        if (c.enabled)
            if (auto it = c.tables.find(n); it != c.tables.end()) return it->second;
    }
    auto t = build_degree_table(n);
    std::lock_guard lock(c.mu);
    if (!c.enabled) return t;
    return c.tables.emplace(n, t).first->second;
}

std::shared_ptr<const GramTable> gram_table(int n) {
    auto& c = cache();
    {
        std::lock_guard lock(c.mu);
        if (c.enabled)
            if (auto it = c.grams.find(n); it != c.grams.end()) return it->second;
    }
    auto g = build_gram_table(*degree_table(n));
    std::lock_guard lock(c.mu);
    if (!c.enabled) return g;
    return c.grams.emplace(n, g).first->second;
}

// ---------------------------------------------------------- Gram-Schmidt

std::vector<int> dominated_indices(const DegreeTable& t, const Partition& top, LinearExtension order) {
    std::vector<int> ideal;
    for (int i = 0; i < static_cast<int>(t.parts.size()); ++i)
        if (dominates(top, t.parts[static_cast<std::size_t>(i)])) ideal.push_back(i);
    if (order == LinearExtension::lexicographic) {
        // Reverse-lex index order, reversed: (1^n) first.
        std::reverse(ideal.begin(), ideal.end());
    } else {
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (int i : ideal) keyed.emplace_back(t.parts[static_cast<std::size_t>(i)].conjugate().parts(), i);
        // mu <= nu in dominance iff nu' <= mu'; descending conjugates ascend in dominance.
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        ideal.clear();
        for (auto& [key, i] : keyed) ideal.push_back(i);
    }
    return ideal;
}

const std::vector<Rational>& gram_entry(const GramTable& g, int i, int j) {
    return i >= j ? g.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                  : g.g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

// Orthogonal P vectors at alpha = a over the given visiting order, in
// monomial coordinates local to that order (entry t <-> order[t]). Each P is
// unitriangular, so only entries 0..k are stored for the k-th vector.
std::vector<std::vector<Rational>> gram_schmidt_at(const GramTable& gt, const std::vector<int>& order,
                                                   const Rational& a, int n) {
    const std::size_t d = order.size();
    std::vector<Rational> powers(static_cast<std::size_t>(n) + 1);
    powers[0] = 1;
    for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * a;
    // G(a) restricted to the visiting order.
    std::vector<std::vector<Rational>> G(d, std::vector<Rational>(d));
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t <= s; ++t) {
            const auto& poly = gram_entry(gt, order[s], order[t]);
            Rational v = 0;
            for (std::size_t k = 0; k < poly.size(); ++k)
                if (poly[k] != 0) v += poly[k] * powers[k];
            G[s][t] = v;
            G[t][s] = v;
        }

    std::vector<std::vector<Rational>> P(d);
    std::vector<Rational> norms(d);
    Rational ip, coef;
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<Rational> vec(k + 1);
        vec[k] = 1;
        for (std::size_t j = 0; j < k; ++j) {
            ip = 0;
            for (std::size_t t = 0; t <= j; ++t)
                if (P[j][t] != 0) ip += P[j][t] * G[k][t];
            if (ip == 0) continue;
            coef = ip / norms[j];
            for (std::size_t t = 0; t <= j; ++t)
                if (P[j][t] != 0) vec[t] -= coef * P[j][t];
        }
        Rational nrm = 0;
        for (std::size_t t = 0; t <= k; ++t)
            if (vec[t] != 0) nrm += vec[t] * G[k][t];
        if (nrm == 0) throw InternalError("degenerate Gram-Schmidt step");
        norms[k] = nrm;
        P[k] = std::move(vec);
    }
    return P;
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Lagrange basis over the nodes 1..N as polynomials in alpha.
std::vector<AlphaPoly> lagrange_basis(int N) {
    std::vector<AlphaPoly> out;
    for (int i = 1; i <= N; ++i) {
        AlphaPoly b(1);
        for (int j = 1; j <= N; ++j) {
            if (j == i) continue;
            b *= AlphaPoly::linear(Rational(-j), 1);
            b *= Rational(1) / Rational(i - j);
        }
        out.push_back(std::move(b));
    }
    return out;
}

// Runs Gram-Schmidt at alpha = 1..n+2, rescales each requested vector to the
// J normalization and interpolates. Returns the expansions for the requested
// positions of the visiting order.
std::vector<SymFunc> jack_by_interpolation(const DegreeTable& t, const GramTable& gt,
                                           const std::vector<int>& order,
                                           const std::vector<std::size_t>& wanted) {
    const int n = t.n;
    const int nodes = n + 2;
    const int max_degree = std::max(n - 1, 0);
    const Integer nfact = factorial(n);
    // Position of (1^n) within the order: always first, since every
    // partition dominates it.
    const int ones = t.index.at(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
    if (order.front() != ones) throw InternalError("visiting order does not start at (1^n)");

    // values[w][t][node]
    std::vector<std::vector<std::vector<Rational>>> values(wanted.size());
    for (std::size_t w = 0; w < wanted.size(); ++w)
        values[w].assign(wanted[w] + 1, std::vector<Rational>(static_cast<std::size_t>(nodes)));
    for (int node = 1; node <= nodes; ++node) {
        auto P = gram_schmidt_at(gt, order, Rational(node), n);
        for (std::size_t w = 0; w < wanted.size(); ++w) {
            const auto& vec = P[wanted[w]];
            if (vec[0] == 0) throw InternalError("Jack vector has no (1^n) component");
            Rational scale = Rational(nfact) / vec[0];
            for (std::size_t s = 0; s < vec.size(); ++s)
                values[w][s][static_cast<std::size_t>(node - 1)] = vec[s] * scale;
        }
    }

    const auto basis = lagrange_basis(nodes);
    std::vector<SymFunc> out;
    for (std::size_t w = 0; w < wanted.size(); ++w) {
        SymFunc f(Basis::monomial);
        for (std::size_t s = 0; s < values[w].size(); ++s) {
            AlphaPoly poly;
            for (int node = 0; node < nodes; ++node) {
                const Rational& v = values[w][s][static_cast<std::size_t>(node)];
                if (v != 0) poly += basis[static_cast<std::size_t>(node)] * v;
            }
            if (poly.degree() > max_degree || !poly.has_integer_coeffs())
                throw InternalError("interpolated Jack coefficient violates degree/integrality bound");
            f.add(t.parts[static_cast<std::size_t>(order[s])], AlphaRat(poly));
        }
        out.push_back(std::move(f));
    }
    return out;
}

SymFunc jack_single(const Partition& lambda, LinearExtension ext) {
    if (lambda.empty()) return SymFunc::basis_element(Basis::monomial, lambda);
    auto t = degree_table(lambda.size());
    auto gt = gram_table(lambda.size());
    auto order = dominated_indices(*t, lambda, ext);
    std::size_t pos =
        static_cast<std::size_t>(std::find(order.begin(), order.end(), t->index.at(lambda)) - order.begin());
    return jack_by_interpolation(*t, *gt, order, {pos}).front();
}

// ------------------------------------------------------- persistent cache

std::optional<std::filesystem::path> disk_cache_file(int n) {
    const char* dir = std::getenv("JACK_CACHE_DIR");
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir) / ("jack_J_degree_" + std::to_string(n) + ".json");
}

std::optional<std::vector<SymFunc>> load_degree_from_disk(const DegreeTable& t) {
    auto path = disk_cache_file(t.n);
    if (!path || !std::filesystem::exists(*path)) return std::nullopt;
    try {
        std::ifstream in(*path);
        auto j = json::Json::parse(in);
        if (j.at("degree").get<int>() != t.n) return std::nullopt;
        const auto& entries = j.at("entries");
        if (entries.size() != t.parts.size()) return std::nullopt;
        std::vector<SymFunc> out;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (json::partition_from_json(entries[i].at("lambda")) != t.parts[i]) return std::nullopt;
            out.push_back(json::symfunc_from_json(entries[i].at("J")));
        }
        return out;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache files are recomputed
    }
}

void store_degree_to_disk(const DegreeTable& t, const std::vector<SymFunc>& jacks) {
    auto path = disk_cache_file(t.n);
    if (!path) return;
    std::error_code ec;
    std::filesystem::create_directories(path->parent_path(), ec);
    json::Json j = json::Json::object();
    j["degree"] = t.n;
    json::Json entries = json::Json::array();
    for (std::size_t i = 0; i < jacks.size(); ++i) {
        json::Json e = json::Json::object();
        e["lambda"] = json::to_json(t.parts[i]);
        e["J"] = json::to_json(jacks[i]);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    auto tmp = *path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, *path, ec);
}

std::vector<SymFunc> jack_full_degree(int n) {
    auto t = degree_table(n);
    if (auto loaded = load_degree_from_disk(*t)) return *loaded;
    auto gt = gram_table(n);
    auto order = dominated_indices(*t, t->parts.front(), LinearExtension::lexicographic);
    std::vector<std::size_t> wanted(order.size());
    for (std::size_t i = 0; i < wanted.size(); ++i) wanted[i] = i;
    auto by_position = jack_by_interpolation(*t, *gt, order, wanted);
    std::vector<SymFunc> out(t->parts.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        out[static_cast<std::size_t>(order[i])] = std::move(by_position[i]);
    store_degree_to_disk(*t, out);
    return out;
}

std::shared_ptr<const SymFunc> jack_cached(const Partition& lambda) {
    auto& c = cache();
    bool enabled;
    {
        std::lock_guard lock(c.mu);
        enabled = c.enabled;
        if (enabled)
            if (auto it = c.jacks.find(lambda); it != c.jacks.end()) return it->second;
    }
    const int n = lambda.size();
    if (!enabled) return std::make_shared<const SymFunc>(jack_single(lambda, LinearExtension::lexicographic));
    if (n <= kFullTableDegree || disk_cache_file(n)) {
        auto all = jack_full_degree(n);
        auto parts = partitions_of(n);
        std::lock_guard lock(c.mu);
        for (std::size_t i = 0; i < parts.size(); ++i)
            c.jacks.try_emplace(parts[i], std::make_shared<const SymFunc>(std::move(all[i])));
        return c.jacks.at(lambda);
    }
    auto f = std::make_shared<const SymFunc>(jack_single(lambda, LinearExtension::lexicographic));
    std::lock_guard lock(c.mu);
    return c.jacks.try_emplace(lambda, f).first->second;
}

}  // namespace

// ------------------------------------------------------------ public API

SymFunc power_in_monomial(const Partition& lambda) {
    SymFunc f(Basis::monomial);
    if (lambda.empty()) {
        f.add(lambda, AlphaRat(1));
        return f;
    }
    auto t = degree_table(lambda.size());
    for (const auto& [j, c] : t->p_in_m[static_cast<std::size_t>(t->index.at(lambda))])
        f.add(t->parts[static_cast<std::size_t>(j)], AlphaRat(Rational(c)));
    return f;
}

SymFunc jack_J(const Partition& lambda) { return *jack_cached(lambda); }

SymFunc jack_J_powersum(const Partition& lambda) {
    auto& c = cache();
    {
        std::lock_guard lock(c.mu);
        if (c.enabled)
            if (auto it = c.jacks_p.find(lambda); it != c.jacks_p.end()) return *it->second;
    }
    auto f = std::make_shared<const SymFunc>(convert(*jack_cached(lambda), Basis::powersum));
    std::lock_guard lock(c.mu);
    if (c.enabled) c.jacks_p.try_emplace(lambda, f);
    return *f;
}

SymFunc jack_J_gram_schmidt(const Partition& lambda, LinearExtension order) {
    return jack_single(lambda, order);
}

namespace {

SymFunc monomial_to_powersum(const SymFunc& f) {
    SymFunc out(Basis::powersum);
    if (f.is_zero()) return out;
    auto t = degree_table(*f.degree());
    std::vector<AlphaRat> acc(t->parts.size());
    for (const auto& [lambda, c] : f.terms())
        for (const auto& [k, q] : t->m_in_p[static_cast<std::size_t>(t->index.at(lambda))])
            acc[static_cast<std::size_t>(k)] += c * AlphaRat(q);
    for (std::size_t k = 0; k < acc.size(); ++k) out.add(t->parts[k], acc[k]);
    return out;
}

SymFunc powersum_to_monomial(const SymFunc& f) {
    SymFunc out(Basis::monomial);
    if (f.is_zero()) return out;
    auto t = degree_table(*f.degree());
    std::vector<AlphaRat> acc(t->parts.size());
    for (const auto& [lambda, c] : f.terms())
        for (const auto& [k, q] : t->p_in_m[static_cast<std::size_t>(t->index.at(lambda))])
            acc[static_cast<std::size_t>(k)] += c * AlphaRat(Rational(q));
    for (std::size_t k = 0; k < acc.size(); ++k) out.add(t->parts[k], acc[k]);
    return out;
}

SymFunc jack_to_monomial(const SymFunc& f) {
    SymFunc out(Basis::monomial);
    for (const auto& [lambda, c] : f.terms()) {
        auto J = jack_cached(lambda);
        for (const auto& [mu, q] : J->terms()) out.add(mu, c * q);
    }
    return out;
}

// J_lambda has leading term m_lambda and is dominance-triangular, so peel off
// the most dominant remaining monomial each time.
SymFunc monomial_to_jack(const SymFunc& f) {
    SymFunc out(Basis::jackJ);
    SymFunc rest = f;
    while (!rest.is_zero()) {
        const auto& [lambda, c] = *rest.terms().begin();
        const Partition top = lambda;
        auto J = jack_cached(top);
        AlphaRat k = c / J->coeff(top);
        out.add(top, k);
        for (const auto& [mu, q] : J->terms()) rest.add(mu, -(k * q));
        if (!rest.coeff(top).is_zero()) throw InternalError("Jack triangular solve did not eliminate leading term");
    }
    return out;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    switch (f.basis()) {
        case Basis::monomial:
            return target == Basis::powersum ? monomial_to_powersum(f) : monomial_to_jack(f);
        case Basis::powersum:
            return target == Basis::monomial ? powersum_to_monomial(f)
                                             : monomial_to_jack(powersum_to_monomial(f));
        case Basis::jackJ:
            if (target == Basis::monomial) return jack_to_monomial(f);
            {
                SymFunc out(Basis::powersum);
                for (const auto& [lambda, c] : f.terms()) {
                    const SymFunc Jp = jack_J_powersum(lambda);
                    for (const auto& [rho, q] : Jp.terms()) out.add(rho, c * q);
                }
                return out;
            }
    }
    throw InternalError("unknown basis");
}

Integer z_factor(const Partition& lambda) {
    Integer z = 1;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const int mult = static_cast<int>(j - i);
        for (int k = 0; k < mult; ++k) z *= p[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

AlphaRat hall_inner(const SymFunc& f, const SymFunc& g) {
    if (f.is_zero() || g.is_zero() || *f.degree() != *g.degree()) return AlphaRat();
    const SymFunc fp = convert(f, Basis::powersum);
    const SymFunc gp = convert(g, Basis::powersum);
    AlphaRat acc;
    for (const auto& [lambda, c] : fp.terms()) {
        auto it = gp.terms().find(lambda);
        if (it == gp.terms().end()) continue;
        std::vector<Rational> w(static_cast<std::size_t>(lambda.length()) + 1);
        w.back() = Rational(z_factor(lambda));
        acc += c * it->second * AlphaRat(AlphaPoly(std::move(w)));
    }
    return acc;
}

AlphaPoly jack_norm(const Partition& lambda) {
    AlphaPoly acc(1);
    for (auto b : lambda.boxes()) {
        acc *= bracket(upper_hook(lambda, b).as_point());
        acc *= bracket(lower_hook(lambda, b).as_point());
    }
    return acc;
}

void set_jack_cache_enabled(bool enabled) {
    auto& c = cache();
    std::lock_guard lock(c.mu);
    c.enabled = enabled;
}

bool jack_cache_enabled() {
    auto& c = cache();
    std::lock_guard lock(c.mu);
    return c.enabled;
}

void clear_jack_cache() {
    auto& c = cache();
    std::lock_guard lock(c.mu);
    c.tables.clear();
    c.grams.clear();
    c.jacks.clear();
    c.jacks_p.clear();
}

}  // namespace jack
