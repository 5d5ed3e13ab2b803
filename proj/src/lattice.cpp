#include "irt/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace irt {

namespace {

// Lattice points with squared distance to center at most `threshold`.
// The scan box covers everything within distance sqrt(threshold) <= radius,
// so points outside the box are strictly farther than every candidate.
std::vector<std::pair<Rational, Point>> collect_within(const Point& center, LatticeKind kind,
                                                       double radius,
                                                       const Rational& threshold) {
    const Rational shift = kind == LatticeKind::HalfShifted ? Rational(1, 2) : Rational(0);
    const double cx = center.x.to_double() - shift.to_double();
    const double cy = center.y.to_double() - shift.to_double();

    const long long x_lo = static_cast<long long>(std::floor(cx - radius)) - 1;
    const long long x_hi = static_cast<long long>(std::ceil(cx + radius)) + 1;
    const long long y_lo = static_cast<long long>(std::floor(cy - radius)) - 1;
    const long long y_hi = static_cast<long long>(std::ceil(cy + radius)) + 1;

    std::vector<std::pair<Rational, Point>> candidates;
    for (long long ix = x_lo; ix <= x_hi; ++ix) {
        for (long long iy = y_lo; iy <= y_hi; ++iy) {
            Point p{Rational(ix) + shift, Rational(iy) + shift};
            Rational d2 = dist2(p, center);
            if (d2 <= threshold) candidates.emplace_back(std::move(d2), std::move(p));
        }
    }
    return candidates;
}

}  // namespace

PointSet square_grid(long long k) {
    if (k < 1) throw std::invalid_argument("square_grid: k must be >= 1");
    PointSet grid;
    for (long long x = 0; x < k; ++x)
        for (long long y = 0; y < k; ++y) grid.insert(Point{Rational(x), Rational(y)});
    return grid;
}

PointSet disk_lattice(long long n, LatticeKind kind, const Point& center) {
    if (n < 1) throw std::invalid_argument("disk_lattice: n must be >= 1");

    double radius = std::sqrt(static_cast<double>(n) / 3.141592653589793) + 2.0;
    for (;;) {
        // Exact cutoff: everything excluded has squared distance strictly
        // above it, so the n nearest candidates are the n nearest overall.
        Rational threshold(static_cast<long long>(std::floor(radius * radius)));
        auto candidates = collect_within(center, kind, radius, threshold);
        if (static_cast<long long>(candidates.size()) >= n) {
            std::sort(candidates.begin(), candidates.end(),
                      [](const auto& a, const auto& b) {
                          if (a.first != b.first) return a.first < b.first;
                          return a.second < b.second;
                      });
            PointSet section;
            for (long long i = 0; i < n; ++i) section.insert(candidates[i].second);
            return section;
        }
        radius *= 1.5;
    }
}

long long TwoDiskParams::m1() const {
    return static_cast<long long>(std::llround(static_cast<double>(n) / (1.0 + size_ratio)));
}

std::pair<PointSet, PointSet> two_disk(const TwoDiskParams& params) {
    if (!(params.size_ratio > 0.0 && params.size_ratio < 1.0))
        throw std::invalid_argument("two_disk: size ratio must lie in (0, 1)");
    const long long m1 = params.m1();
    const long long m2 = params.m2();
    if (m1 < 1) throw std::invalid_argument("two_disk: m1 must be >= 1");
    if (m2 < 1)
        throw std::invalid_argument("two_disk: m2 must be >= 1 (degenerate split; use disk_lattice)");

    const Point origin{0, 0};
    return {disk_lattice(m1, LatticeKind::Integer, origin),
            disk_lattice(m2, LatticeKind::HalfShifted, origin)};
}

LatticeRotationClass lattice_rotation_class(const Rational& j, const Rational& k) {
    const bool closed = (k - j).is_integer() && (k + j).is_integer();
    return closed ? LatticeRotationClass::Closed : LatticeRotationClass::Empty;
}

}  // namespace irt
