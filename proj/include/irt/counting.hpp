#pragma once

// Degree functions and total IRT counts.
//
// deg90(P, z)   = |P ∩ rot90(z, P)| - 1 = number of IRTs with right angle
//                 at z, for z in P.
// deg45(P,z,±)  = |P ∩ rot45_±(z, P)| - 1 = counterclockwise-ordered IRTs
//                 zxy with zy (plus) resp. zx (minus) the hypotenuse.
//
// Summing any one of the three degrees over P gives the IRT count; the fast
// counter exploits this with hashed membership (expected O(n^2)) while
// count_irt_oracle enumerates all triples in O(n^3) as an independent check.

#include "irt/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace irt {

enum class Orientation { Plus, Minus };

struct PointDegrees {
    Point z;
    long long deg90 = 0;
    long long deg45_plus = 0;
    long long deg45_minus = 0;
};

// Per-point degree triples, in the point set's iteration order.
// Invariant (checked): the three column sums are equal; each equals the
// total IRT count.
struct DegreeProfile {
    std::vector<PointDegrees> entries;
    long long sum_deg90 = 0;
    long long sum_deg45_plus = 0;
    long long sum_deg45_minus = 0;
};

// Number of IRTs in P with right angle at z. Requires z in P.
long long deg90(const PointSet& P, const Point& z);

// Number of IRTs with right angle at z formed with two points of P, for a
// candidate z NOT in P (no -1 self correction). Requires z not in P.
long long deg90_candidate(const PointSet& P, const Point& z);

// Requires z in P.
long long deg45(const PointSet& P, const Point& z, Orientation orientation);

// Total number of 3-subsets of P forming an IRT. Expected O(n^2).
long long count_irt(const PointSet& P);

// Full O(n^3) triple enumeration. cap bounds |P| to keep runtime sane;
// throws BudgetExceededError beyond it.
long long count_irt_oracle(const PointSet& P, std::size_t cap = 60);

DegreeProfile degree_profile(const PointSet& P);

namespace detail {

// Integer-scaled mirror of a point set: every coordinate multiplied by the
// common denominator. Usable only when that keeps coordinates small; IRT
// counts are preserved because scaling is a similarity.
struct ScaledInts {
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
};

bool scale_to_int(const PointSet& P, ScaledInts& out);

// Reference implementations pinned to one evaluation strategy, for tests.
long long count_irt_generic(const PointSet& P);
long long count_irt_scaled(const ScaledInts& S);

}  // namespace detail

}  // namespace irt
