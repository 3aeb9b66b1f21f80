#pragma once

// Young diagram combinatorics in French convention: box (x, y) has column x
// and row y, origin at the bottom-left, and row y has length parts[y].

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace jack {

struct BoxCoord {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
    friend constexpr BoxCoord operator+(BoxCoord a, BoxCoord b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr BoxCoord operator-(BoxCoord a, BoxCoord b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr BoxCoord operator-(BoxCoord a) { return {-a.x, -a.y}; }
};

std::ostream& operator<<(std::ostream& os, BoxCoord b);
std::string to_string(BoxCoord b);

// Displacement attached to a box by its arm and leg. The upper vector is
// (arm+1, -leg), the lower one (arm, -leg-1); lower = upper - (1,1).
struct HookVector {
    int dx = 0;
    int dy = 0;

    constexpr BoxCoord as_point() const { return {dx, dy}; }
    friend constexpr auto operator<=>(const HookVector&, const HookVector&) = default;
};

using BoxMultiset = std::map<BoxCoord, int>;

class Partition {
public:
    Partition() = default;
    // Trailing zeros are dropped; throws ParseError if parts increase or
    // contain a negative entry.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // "4,2,2,1,1" -> (4,2,2,1,1). Empty string or "0" -> empty partition.
    // Digit-run forms such as "42211" are rejected as ambiguous.
    static Partition parse(std::string_view text);

    static Partition rectangle(int m, int n);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    // Length of row y (0 outside the diagram).
    int row(int y) const;
    // Height of column x (0 outside the diagram).
    int column(int x) const;
    bool contains(BoxCoord b) const;
    bool contains(const Partition& other) const;

    // Boxes in row-major order: y ascending, then x ascending.
    std::vector<BoxCoord> boxes() const;

    Partition conjugate() const;
    Partition with_box(BoxCoord b) const;
    Partition without_box(BoxCoord b) const;

    std::string to_string() const;  // "4,2,2,1,1"
    std::string compact() const;    // "42211" when all parts < 10, else "{10,2}"

    friend bool operator==(const Partition&, const Partition&) = default;
    // Plain lexicographic order on the parts; used for sets and maps. For the
    // display order within a degree see PartitionOrder.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Smaller degree first; within a degree reverse-lexicographic, so (3) comes
// before (2,1) before (1,1,1).
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return b.parts() < a.parts();
    }
};

// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);
// All partitions fitting inside the m x n rectangle (at most n parts, each <= m).
std::vector<Partition> partitions_in_rectangle(int m, int n);

// Dominance order: a >= b iff every partial sum of a is >= that of b.
bool dominates(const Partition& a, const Partition& b);

int arm(const Partition& lambda, BoxCoord s);
int leg(const Partition& lambda, BoxCoord s);
HookVector upper_hook(const Partition& lambda, BoxCoord s);
HookVector lower_hook(const Partition& lambda, BoxCoord s);

std::vector<BoxCoord> outer_corners(const Partition& lambda);
std::vector<BoxCoord> inner_corners(const Partition& lambda);
std::vector<BoxCoord> inner_corners_shifted(const Partition& lambda);

// Boxes of lambda in the row (resp. column) of s; s need not be in lambda.
std::vector<BoxCoord> row_set(const Partition& lambda, BoxCoord s);
std::vector<BoxCoord> column_set(const Partition& lambda, BoxCoord s);

Partition intersection(const Partition& a, const Partition& b);
Partition union_of(const Partition& a, const Partition& b);

// (m - mu_n, ..., m - mu_1) with zeros dropped. Throws NotContained if mu
// does not fit in m^n.
Partition complement(const Partition& mu, int m, int n);

BoxMultiset star_product(const Partition& lambda, const Partition& mu);
BoxMultiset as_multiset(const Partition& lambda);

constexpr BoxCoord join(BoxCoord a, BoxCoord b) {
    return {a.x < b.x ? a.x : b.x, a.y < b.y ? a.y : b.y};
}
constexpr BoxCoord meet(BoxCoord a, BoxCoord b) {
    return {a.x > b.x ? a.x : b.x, a.y > b.y ? a.y : b.y};
}

constexpr BoxCoord hflip(BoxCoord b, int m, int /*n*/) { return {m - 1 - b.x, b.y}; }
constexpr BoxCoord vflip(BoxCoord b, int /*m*/, int n) { return {b.x, n - 1 - b.y}; }
constexpr BoxCoord bar(BoxCoord b, int m, int n) { return {m - 1 - b.x, n - 1 - b.y}; }

// lambda / mu is a horizontal strip: mu inside lambda and no two added
// boxes share a column.
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

// Decomposition of mu against the rectangle m^n.
//
//   sigma     = mu ∩ m^n,  sigma_bar = complement of sigma in m^n
//   r         = rows y < n with mu_{y+1} > m (the bottom rows)
//   c         = columns x < m of height > n (the left columns)
//   K         = [c, m) x [r, n), a k x l rectangle
//   mu2       = sigma ∩ K in K-local coordinates
//   mu0       = sigma minus the K part
//   mu1, mu3  = boxes of mu above the rectangle / right of it
//
// Throws GenericShapeViolation if mu has a box with x >= m and y >= n.
struct RectangleDecomposition {
    Partition sigma;
    Partition sigma_bar;
    std::vector<BoxCoord> mu0;
    std::vector<BoxCoord> mu1;
    Partition mu2;
    std::vector<BoxCoord> mu3;
    int c = 0;
    int r = 0;
    int k = 0;
    int l = 0;
    Partition uni;  // mu ∪ m^n
};

RectangleDecomposition decompose_wrt_rectangle(const Partition& mu, int m, int n);

// True iff decompose_wrt_rectangle(mu, m, n) would succeed.
bool is_generic_for_rectangle(const Partition& mu, int m, int n);

}  // namespace jack
