#pragma once

// Upper-bound formulas and an executable verifier for the structural facts
// behind the main upper bound: pick a diameter pair (x, y), then the degree
// sums at x and y are forced small because rotated images would otherwise
// exceed the diameter. Violations throw VerificationError: either an
// implementation bug or a counterexample.

#include "irt/errors.hpp"
#include "irt/geometry.hpp"

#include <utility>

namespace irt {

// n^2 - n: any pair of points spans at most 6 IRTs.
long long trivial_upper_bound(long long n);

// floor((2(n-1)^2 - 5) / 3), the sharpened quadratic bound. Requires n >= 3.
long long best_upper_bound(long long n);

// floor(n(n-1)(n-2) b / (k(k-1)(k-2))): if every k-subset has at most b
// IRTs, the whole n-set is bounded by averaging. Requires 3 <= k <= n, b >= 0.
long long averaging_upper_bound(long long n, long long k, long long b);

// Structural measurements at a diameter pair (x, y) of P.
//
//   nx_size, ny_size    |N_x|, |N_y| where N_z = P ∩ rot45_minus(z, P) \ {z}
//   nx_cap_ny           |N_x ∩ N_y|, at most 1
//   edge_count          edges of the graph G on P \ {x,y} with u~v when
//                       v = rot90(x,u) or v = rot90(y,u)
//   max_graph_degree    at most 2
//   max_path_length     longest simple path in G (edges), at most 2
//   deg90_sum_xy        deg90(x) + deg90(y); within [edge_count, edge_count+1]
//   min_total_degree_xy min over z in {x,y} of deg90+deg45_plus+deg45_minus;
//                       at most floor((4n-5)/3)
struct DiameterReport {
    Point diameter_a;
    Point diameter_b;
    long long nx_size = 0;
    long long ny_size = 0;
    long long nx_cap_ny = 0;
    long long edge_count = 0;
    long long max_graph_degree = 0;
    long long max_path_length = 0;
    long long deg90_sum_xy = 0;
    long long min_total_degree_xy = 0;
};

// Requires |P| >= 3. Diameter ties broken by lexicographically smallest
// pair. Throws VerificationError if any of the documented invariants fails.
DiameterReport diameter_report(const PointSet& P);

// deg45 sums over the diameter pair for both orientations; each must be
// at most n - 1 (VerificationError otherwise).
struct PairDegreeSums {
    long long plus_sum = 0;
    long long minus_sum = 0;
};

PairDegreeSums deg45_pair_bounds(const PointSet& P);

}  // namespace irt
