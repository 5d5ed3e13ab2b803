#pragma once

// Generators for the lattice configurations used as lower-bound witnesses:
// square grids, disk-shaped sections of the unit lattice and its (1/2,1/2)
// translate, and the two-disk union that beats the single disk.

#include "irt/geometry.hpp"

#include <utility>

namespace irt {

// Unit integer lattice, or its translate by (1/2, 1/2).
enum class LatticeKind { Integer, HalfShifted };

// The k x k set {0,...,k-1}^2. Requires k >= 1.
PointSet square_grid(long long k);

// The n lattice points of the given kind nearest to center, by exact
// squared-distance comparison; ties broken lexicographically on (x, y).
// Nested in n: the result for n is a prefix of the result for n+1.
PointSet disk_lattice(long long n, LatticeKind kind = LatticeKind::Integer,
                      const Point& center = Point{0, 0});

// Two concentric disk sections, the large one on the integer lattice and
// the small one on the shifted lattice. size_ratio is m2/m1 in (0,1);
// m1 = round(n / (1 + ratio)), m2 = n - m1.
struct TwoDiskParams {
    long long n = 0;
    double size_ratio = 0.0;

    long long m1() const;
    long long m2() const { return n - m1(); }
};

// Requires m2 >= 1 (use disk_lattice directly for the degenerate case).
// The two sets are disjoint: the lattices never meet.
std::pair<PointSet, PointSet> two_disk(const TwoDiskParams& params);

// Behaviour of a quarter turn about (j, k) on each lattice: Closed means
// the rotation maps the integer lattice and its half-shifted translate each
// onto itself; Empty means the image is disjoint from the original.
// Decided exactly: Closed iff k - j and k + j are both integers.
enum class LatticeRotationClass { Closed, Empty };

LatticeRotationClass lattice_rotation_class(const Rational& j, const Rational& k);

}  // namespace irt
