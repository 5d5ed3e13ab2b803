#pragma once

// Exact planar points, deduplicated point sets, and the three similarity
// maps that drive isosceles-right-triangle (IRT) counting:
//
//   rot90        z + i*(p - z)        quarter turn about z
//   rot45_plus   z + (1+i)*(p - z)    45-degree turn, dilation sqrt(2)
//   rot45_minus  z + (1+i)/2*(p - z)  45-degree turn, dilation 1/sqrt(2)
//
// All three keep rational coordinates rational, which is why the whole
// pipeline can stay decision-exact.

#include "irt/rational.hpp"

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

namespace irt {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

    // Lexicographic on (x, y); used for deterministic tie-breaking.
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    std::string to_string() const { return x.to_string() + " " + y.to_string(); }
};

struct PointHash {
    std::size_t operator()(const Point& p) const {
        std::size_t h = hash_value(p.x);
        h ^= hash_value(p.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational norm2(const Point& a) { return dot(a, a); }
inline Rational dist2(const Point& a, const Point& b) { return norm2(a - b); }

// Finite set of distinct points with hashed membership and stable
// (insertion) iteration order.
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(const std::vector<Point>& pts) {
        for (const Point& p : pts) insert(p);
    }

    // Returns false if the point was already present.
    bool insert(const Point& p) {
        if (!index_.insert(p).second) return false;
        points_.push_back(p);
        return true;
    }

    bool contains(const Point& p) const { return index_.count(p) != 0; }

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    const std::vector<Point>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        if (a.size() != b.size()) return false;
        for (const Point& p : a.points_)
            if (!b.contains(p)) return false;
        return true;
    }

private:
    std::vector<Point> points_;
    std::unordered_set<Point, PointHash> index_;
};

inline PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet u = a;
    for (const Point& p : b) u.insert(p);
    return u;
}

// z + i*(p - z)
inline Point rot90(const Point& center, const Point& p) {
    return {center.x - (p.y - center.y), center.y + (p.x - center.x)};
}

// z + (1+i)*(p - z)
inline Point rot45_plus(const Point& center, const Point& p) {
    Rational wx = p.x - center.x;
    Rational wy = p.y - center.y;
    return {center.x + wx - wy, center.y + wx + wy};
}

// z + (1+i)/2*(p - z); inverse of rot45_plus up to a quarter turn:
// rot45_minus(c, rot45_plus(c, p)) == rot90(c, p).
inline Point rot45_minus(const Point& center, const Point& p) {
    Rational wx = p.x - center.x;
    Rational wy = p.y - center.y;
    return {center.x + (wx - wy) / 2, center.y + (wx + wy) / 2};
}

// Apex (right-angle vertex) of the IRT formed by {p, q, r}, or nullopt if
// the triple is not an IRT. Degenerate triples (duplicates, collinear) are
// simply not IRTs. The test at vertex a: dot(b-a, c-a) = 0 and
// |b-a|^2 = |c-a|^2, all exact.
std::optional<Point> classify_irt(const Point& p, const Point& q, const Point& r);

}  // namespace irt
