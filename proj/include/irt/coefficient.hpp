#pragma once

// Overlap-area analysis for unit-area shapes and the quadratic coefficient
// of the two-disk construction.
//
// overlap_area(K, z) is the area of K ∩ rot90(z, K). Integrating it over K
// gives the leading n^2 coefficient of the IRT count of lattice sections of
// K: 5/12 for the square, 3/4 - 1/pi for the disk. The two-disk coefficient
// c(x) is piecewise in the size ratio x with branch point 1/2, and is
// maximized near x ~ 0.0356.
//
// Everything here is floating point (double); tolerances are stated at the
// call sites that check them.

#include <array>
#include <utility>
#include <vector>

namespace irt {

// Unit-area shapes centered at the origin: the square [-1/2,1/2]^2 and the
// disk of radius 1/sqrt(pi).
enum class ShapeKind { UnitSquare, UnitDisk };

// Closed-form area of K ∩ rot90(z, K); 0 outside the support.
//   square: (1-|x|-|y|)(1-||x|-|y||)
//   disk:   (2/pi)*acos(sqrt(2*pi)/2*|z|) - |z|*sqrt(2/pi - |z|^2)
double overlap_area(ShapeKind shape, double zx, double zy);

// Midpoint-grid quadrature of the indicator of K ∩ rot90(z, K); independent
// of the closed form. resolution is samples per axis, >= 64.
double overlap_area_grid(ShapeKind shape, double zx, double zy, int resolution);

// Integral of the disk overlap function over the disk of radius t/sqrt(pi):
//   (1/2pi) * (4t^2*acos(t/sqrt2) + 2*asin(t/sqrt2) - t(t^2+1)*sqrt(2-t^2))
// Domain [0, sqrt2]; value 3/4 - 1/pi at t = 1 and 1/2 at t = sqrt2.
double disk_overlap_integral(double t);

enum class CoeffBranch { Low, High };  // Low: 0 < x <= 1/2, High: 1/2 < x < 1

// Value of the two-disk n^2 coefficient at size ratio x, with the four-way
// breakdown by vertex placement: (1) all three vertices in the big disk,
// (2) all in the small disk, (3) right angle in the small disk, (4) right
// angle in the big disk. cases is computed by an independent route through
// disk_overlap_integral and must sum to value within 1e-12.
struct CoefficientResult {
    double x = 0.0;
    double value = 0.0;
    CoeffBranch branch = CoeffBranch::Low;
    std::array<double, 4> cases{};
};

// Requires 0 < x < 1; throws std::domain_error otherwise.
CoefficientResult two_disk_coefficient(double x);

struct CoefficientOptimum {
    double x_star = 0.0;
    double c_star = 0.0;
};

// Coarse scan (step 1e-4) followed by golden-section refinement on the
// winning branch to interval width < 1e-10.
CoefficientOptimum maximize_two_disk_coefficient();

// Evenly spaced samples over [x_min, x_max] for plotting; steps >= 2 and
// 0 < x_min < x_max < 1.
std::vector<CoefficientResult> coefficient_curve(double x_min, double x_max, int steps);

namespace detail {
// The two displayed branch formulas, each valid at x = 1/2 (they agree
// there); exposed so continuity can be checked directly.
double coefficient_low_branch(double x);
double coefficient_high_branch(double x);
}  // namespace detail

}  // namespace irt
