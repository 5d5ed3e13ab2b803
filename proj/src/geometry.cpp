#include "irt/geometry.hpp"

namespace irt {

namespace {

bool right_isosceles_at(const Point& a, const Point& b, const Point& c) {
    Point u = b - a;
    Point v = c - a;
    return dot(u, v).is_zero() && norm2(u) == norm2(v);
}

}  // namespace

std::optional<Point> classify_irt(const Point& p, const Point& q, const Point& r) {
    if (p == q || q == r || p == r) return std::nullopt;
    // An IRT has exactly one right angle, so at most one test succeeds.
    if (right_isosceles_at(p, q, r)) return p;
    if (right_isosceles_at(q, p, r)) return q;
    if (right_isosceles_at(r, p, q)) return r;
    return std::nullopt;
}

}  // namespace irt
