#include "irt/coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irt {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double v) { return std::min(1.0, std::max(-1.0, v)); }

bool inside(ShapeKind shape, double x, double y) {
    if (shape == ShapeKind::UnitSquare) return std::abs(x) <= 0.5 && std::abs(y) <= 0.5;
    return x * x + y * y <= 1.0 / kPi;
}

double case_sum_route(double x, std::array<double, 4>& cases) {
    const double self = disk_overlap_integral(1.0);  // 3/4 - 1/pi
    const double denom = (1.0 + x) * (1.0 + x);
    cases[0] = self / denom;
    cases[1] = self * x * x / denom;
    cases[2] = disk_overlap_integral(std::sqrt(x)) / denom;
    const double t4 = x <= 0.5 ? std::sqrt(2.0) : 1.0 / std::sqrt(x);
    cases[3] = disk_overlap_integral(t4) * x * x / denom;
    return cases[0] + cases[1] + cases[2] + cases[3];
}

}  // namespace

double overlap_area(ShapeKind shape, double zx, double zy) {
    if (shape == ShapeKind::UnitSquare) {
        const double u = std::abs(zx);
        const double v = std::abs(zy);
        const double a = 1.0 - u - v;
        if (a <= 0.0) return 0.0;
        return a * (1.0 - std::abs(u - v));
    }
    const double r = std::hypot(zx, zy);
    const double r_max = std::sqrt(2.0 / kPi);
    if (r >= r_max) return 0.0;
    return (2.0 / kPi) * std::acos(clamp_unit(std::sqrt(2.0 * kPi) / 2.0 * r)) -
           r * std::sqrt(2.0 / kPi - r * r);
}

double overlap_area_grid(ShapeKind shape, double zx, double zy, int resolution) {
    if (resolution < 64)
        throw std::invalid_argument("overlap_area_grid: resolution must be >= 64");

    // rot90(z, K) is K translated by z - i*z for both shapes (each is
    // invariant under a quarter turn about its own center).
    const double tx = zx + zy;
    const double ty = zy - zx;
    const double half = shape == ShapeKind::UnitSquare ? 0.5 : std::sqrt(1.0 / kPi);

    // Sample over the intersection of the two bounding boxes.
    const double lo_x = std::max(-half, tx - half);
    const double hi_x = std::min(half, tx + half);
    const double lo_y = std::max(-half, ty - half);
    const double hi_y = std::min(half, ty + half);
    if (lo_x >= hi_x || lo_y >= hi_y) return 0.0;

    const double step_x = (hi_x - lo_x) / resolution;
    const double step_y = (hi_y - lo_y) / resolution;
    long long hits = 0;
    for (int i = 0; i < resolution; ++i) {
        const double px = lo_x + (i + 0.5) * step_x;
        for (int j = 0; j < resolution; ++j) {
            const double py = lo_y + (j + 0.5) * step_y;
            if (inside(shape, px, py) && inside(shape, px - tx, py - ty)) ++hits;
        }
    }
    return static_cast<double>(hits) * step_x * step_y;
}

double disk_overlap_integral(double t) {
    const double sqrt2 = std::sqrt(2.0);
    if (t < -1e-12 || t > sqrt2 + 1e-12)
        throw std::domain_error("disk_overlap_integral: t outside [0, sqrt(2)]");
    t = std::min(sqrt2, std::max(0.0, t));
    const double s = clamp_unit(t / sqrt2);
    return (4.0 * t * t * std::acos(s) + 2.0 * std::asin(s) -
            t * (t * t + 1.0) * std::sqrt(std::max(0.0, 2.0 - t * t))) /
           (2.0 * kPi);
}

namespace detail {

double coefficient_low_branch(double x) {
    const double num = 8.0 * x * std::acos(std::sqrt(x / 2.0)) +
                       4.0 * std::asin(std::sqrt(x / 2.0)) + (5.0 * kPi - 4.0) * x * x +
                       (3.0 * kPi - 4.0) - 2.0 * (x + 1.0) * std::sqrt(2.0 * x - x * x);
    return num / (4.0 * kPi * (x + 1.0) * (x + 1.0));
}

double coefficient_high_branch(double x) {
    const double num =
        8.0 * x * (std::acos(std::sqrt(x / 2.0)) + std::acos(std::sqrt(1.0 / (2.0 * x)))) +
        4.0 * std::asin(std::sqrt(x / 2.0)) +
        4.0 * x * x * std::asin(clamp_unit(std::sqrt(1.0 / (2.0 * x)))) +
        (3.0 * kPi - 4.0) * (x * x + 1.0) -
        2.0 * (x + 1.0) *
            (std::sqrt(2.0 * x - x * x) + std::sqrt(std::max(0.0, 2.0 * x - 1.0)));
    return num / (4.0 * kPi * (x + 1.0) * (x + 1.0));
}

}  // namespace detail

CoefficientResult two_disk_coefficient(double x) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("two_disk_coefficient: x must lie in (0, 1)");

    CoefficientResult result;
    result.x = x;
    result.branch = x <= 0.5 ? CoeffBranch::Low : CoeffBranch::High;
    result.value = result.branch == CoeffBranch::Low ? detail::coefficient_low_branch(x)
                                                     : detail::coefficient_high_branch(x);

    const double via_cases = case_sum_route(x, result.cases);
    if (std::abs(via_cases - result.value) > 1e-12)
        throw std::logic_error("two_disk_coefficient: case breakdown disagrees with formula");
    return result;
}

CoefficientOptimum maximize_two_disk_coefficient() {
    // Coarse scan guards against branch-boundary artifacts.
    const double step = 1e-4;
    double best_x = step;
    double best_v = two_disk_coefficient(best_x).value;
    for (int i = 2; i < 10000; ++i) {
        const double x = i * step;
        const double v = two_disk_coefficient(x).value;
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }

    // Golden-section refinement on the winning branch.
    double lo = std::max(step / 2.0, best_x - step);
    double hi = std::min(1.0 - step / 2.0, best_x + step);
    if (best_x <= 0.5) hi = std::min(hi, 0.5);
    else lo = std::max(lo, 0.5);

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = two_disk_coefficient(c).value;
    double fd = two_disk_coefficient(d).value;
    while (hi - lo > 1e-10) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = two_disk_coefficient(c).value;
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = two_disk_coefficient(d).value;
        }
    }
    const double x_star = (lo + hi) / 2.0;
    return {x_star, two_disk_coefficient(x_star).value};
}

std::vector<CoefficientResult> coefficient_curve(double x_min, double x_max, int steps) {
    if (!(x_min > 0.0 && x_min < x_max && x_max < 1.0))
        throw std::domain_error("coefficient_curve: need 0 < x_min < x_max < 1");
    if (steps < 2) throw std::domain_error("coefficient_curve: steps must be >= 2");

    std::vector<CoefficientResult> samples;
    samples.reserve(steps);
    const double h = (x_max - x_min) / (steps - 1);
    for (int i = 0; i < steps; ++i) samples.push_back(two_disk_coefficient(x_min + i * h));
    return samples;
}

}  // namespace irt
