#include "jack/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "jack/error.hpp"

namespace jack {

std::ostream& operator<<(std::ostream& os, BoxCoord b) {
    return os << '(' << b.x << ',' << b.y << ')';
}

std::string to_string(BoxCoord b) {
    return "(" + std::to_string(b.x) + "," + std::to_string(b.y) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw ParseError("partition parts must be positive: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ParseError("partition parts must be weakly decreasing: " + to_string());
        size_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return Partition{};
    const bool explicit_list = text.find(',') != std::string_view::npos;
    if (text.back() == ',') text.remove_suffix(1);
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = trim(text.substr(start, comma - start));
        if (tok.empty()) throw ParseError("empty part in partition '" + std::string(text) + "'");
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("bad part '" + std::string(tok) + "' in partition");
        if (value < 0) throw ParseError("negative part in partition");
        parts.push_back(value);
        start = comma + 1;
        if (comma == text.size()) break;
    }
    if (parts.size() == 1 && parts[0] >= 10 && !explicit_list) {
        // "42211" would otherwise silently become the single row of length 42211.
        throw ParseError("ambiguous partition '" + std::string(text) +
                         "': separate parts with commas (use '" + std::string(text) +
                         ",' for a single part)");
    }
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int m, int n) {
    if (m < 0 || n < 0) throw Error("rectangle dimensions must be non-negative");
    if (m == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(n), m));
}

int Partition::row(int y) const {
    if (y < 0 || y >= length()) return 0;
    return parts_[static_cast<std::size_t>(y)];
}

int Partition::column(int x) const {
    if (x < 0) return 0;
    int h = 0;
    while (h < length() && parts_[static_cast<std::size_t>(h)] > x) ++h;
    return h;
}

bool Partition::contains(BoxCoord b) const {
    return b.x >= 0 && b.y >= 0 && b.x < row(b.y);
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int y = 0; y < other.length(); ++y)
        if (other.row(y) > row(y)) return false;
    return true;
}

std::vector<BoxCoord> Partition::boxes() const {
    std::vector<BoxCoord> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int y = 0; y < length(); ++y)
        for (int x = 0; x < row(y); ++x) out.push_back({x, y});
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int x = 0; x < row(0); ++x) c.push_back(column(x));
    return Partition(std::move(c));
}

Partition Partition::with_box(BoxCoord b) const {
    if (b.y < 0 || b.y > length() || b.x != row(b.y) || (b.y > 0 && row(b.y - 1) <= b.x))
        throw Error("box " + jack::to_string(b) + " is not an outer corner of " +
                    to_string());
    auto p = parts_;
    if (b.y == length()) p.push_back(1);
    else ++p[static_cast<std::size_t>(b.y)];
    return Partition(std::move(p));
}

Partition Partition::without_box(BoxCoord b) const {
    if (!contains(b) || b.x != row(b.y) - 1 || row(b.y + 1) > b.x)
        throw NotAnInnerCorner("box " + jack::to_string(b) +
                               " is not an inner corner of " + to_string());
    auto p = parts_;
    --p[static_cast<std::size_t>(b.y)];
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string Partition::compact() const {
    if (parts_.empty()) return "0";
    bool small = std::all_of(parts_.begin(), parts_.end(), [](int p) { return p < 10; });
    if (small) {
        std::string s;
        for (int p : parts_) s += static_cast<char>('0' + p);
        return s;
    }
    return "{" + to_string() + "}";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.to_string() << ')'; }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_in_rectangle(int m, int n) {
    std::vector<Partition> out;
    for (int size = 0; size <= m * n; ++size)
        for (auto& p : partitions_of(size))
            if (p.length() <= n && p.row(0) <= m) out.push_back(std::move(p));
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a.row(i);
        sb += b.row(i);
        if (sa < sb) return false;
    }
    return true;
}

namespace {

void require_box(const Partition& lambda, BoxCoord s) {
    if (!lambda.contains(s)) {
        std::ostringstream os;
        os << "box " << s << " is not in the diagram of " << lambda;
        throw BoxNotInDiagram(os.str());
    }
}

}  // namespace

int arm(const Partition& lambda, BoxCoord s) {
    require_box(lambda, s);
    return lambda.row(s.y) - s.x - 1;
}

int leg(const Partition& lambda, BoxCoord s) {
    require_box(lambda, s);
    return lambda.column(s.x) - s.y - 1;
}

HookVector upper_hook(const Partition& lambda, BoxCoord s) {
    return {arm(lambda, s) + 1, -leg(lambda, s)};
}

HookVector lower_hook(const Partition& lambda, BoxCoord s) {
    return {arm(lambda, s), -leg(lambda, s) - 1};
}

std::vector<BoxCoord> outer_corners(const Partition& lambda) {
    std::vector<BoxCoord> out;
    for (int y = lambda.length(); y >= 0; --y) {
        int x = lambda.row(y);
        if (y == 0 || lambda.row(y - 1) > x) out.push_back({x, y});
    }
    return out;
}

std::vector<BoxCoord> inner_corners(const Partition& lambda) {
    std::vector<BoxCoord> out;
    for (int y = lambda.length() - 1; y >= 0; --y)
        if (lambda.row(y + 1) < lambda.row(y)) out.push_back({lambda.row(y) - 1, y});
    return out;
}

std::vector<BoxCoord> inner_corners_shifted(const Partition& lambda) {
    auto out = inner_corners(lambda);
    for (auto& b : out) b = b + BoxCoord{1, 1};
    return out;
}

std::vector<BoxCoord> row_set(const Partition& lambda, BoxCoord s) {
    std::vector<BoxCoord> out;
    for (int x = 0; x < lambda.row(s.y); ++x) out.push_back({x, s.y});
    return out;
}

std::vector<BoxCoord> column_set(const Partition& lambda, BoxCoord s) {
    std::vector<BoxCoord> out;
    for (int y = 0; y < lambda.column(s.x); ++y) out.push_back({s.x, y});
    return out;
}

Partition intersection(const Partition& a, const Partition& b) {
    std::vector<int> p;
    int len = std::min(a.length(), b.length());
    for (int y = 0; y < len; ++y) p.push_back(std::min(a.row(y), b.row(y)));
    return Partition(std::move(p));
}

Partition union_of(const Partition& a, const Partition& b) {
    std::vector<int> p;
    int len = std::max(a.length(), b.length());
    for (int y = 0; y < len; ++y) p.push_back(std::max(a.row(y), b.row(y)));
    return Partition(std::move(p));
}

Partition complement(const Partition& mu, int m, int n) {
    if (m < 0 || n < 0) throw Error("rectangle dimensions must be non-negative");
    if (mu.length() > n || mu.row(0) > m)
        throw NotContained("partition " + mu.to_string() + " does not fit in " + std::to_string(m) +
                           "^" + std::to_string(n));
    std::vector<int> p;
    for (int i = n - 1; i >= 0; --i) p.push_back(m - mu.row(i));
    return Partition(std::move(p));
}

BoxMultiset star_product(const Partition& lambda, const Partition& mu) {
    BoxMultiset out;
    const auto lb = lambda.boxes();
    const auto mb = mu.boxes();
    for (auto s : lb)
        for (auto t : mb) ++out[s + t];
    return out;
}

BoxMultiset as_multiset(const Partition& lambda) {
    BoxMultiset out;
    for (auto b : lambda.boxes()) out[b] = 1;
    return out;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return false;
    // Interlacing: lambda_{i+1} <= mu_i for all i.
    for (int y = 0; y + 1 < lambda.length(); ++y)
        if (lambda.row(y + 1) > mu.row(y)) return false;
    return true;
}

bool is_generic_for_rectangle(const Partition& mu, int m, int n) {
    return !(mu.length() > n && mu.row(n) > m);
}

RectangleDecomposition decompose_wrt_rectangle(const Partition& mu, int m, int n) {
    if (m < 0 || n < 0) throw Error("rectangle dimensions must be non-negative");
    if (!is_generic_for_rectangle(mu, m, n)) {
        std::ostringstream os;
        os << "partition " << mu << " has box " << BoxCoord{m, n}
           << " outside both the rows and the columns of " << m << "^" << n;
        throw GenericShapeViolation(os.str());
    }
    RectangleDecomposition d;
    const Partition rect = Partition::rectangle(m, n);
    d.sigma = intersection(mu, rect);
    d.sigma_bar = complement(d.sigma, m, n);
    d.uni = union_of(mu, rect);
    for (int y = 0; y < n; ++y)
        if (mu.row(y) > m) ++d.r;
    for (int x = 0; x < m; ++x)
        if (mu.column(x) > n) ++d.c;
    d.k = m - d.c;
    d.l = n - d.r;
    std::vector<int> local;
    for (int y = 0; y < d.l; ++y) local.push_back(std::max(0, d.sigma.row(d.r + y) - d.c));
    d.mu2 = Partition(std::move(local));
    for (auto b : mu.boxes()) {
        if (b.y >= n) d.mu1.push_back(b);
        else if (b.x >= m) d.mu3.push_back(b);
        else if (b.x < d.c || b.y < d.r) d.mu0.push_back(b);
    }
    return d;
}

}  // namespace jack
