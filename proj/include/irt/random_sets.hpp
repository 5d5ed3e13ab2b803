#pragma once

// Seeded random point-set generation for the randomized verification suites
// and property tests. Mixes dense integer sets (lots of IRTs), lattice and
// half-lattice sets, and general small rationals, optionally pushed through
// a random similarity so canonical forms get exercised.

#include "irt/geometry.hpp"

#include <cstdint>
#include <random>

namespace irt {

struct RandomSetOptions {
    int min_points = 3;
    int max_points = 40;
    bool allow_transforms = true;
};

PointSet random_point_set(std::mt19937_64& rng, const RandomSetOptions& options = {});

// Deterministic per-index seeding: set i of a suite depends only on
// (master_seed, i), never on thread interleaving.
std::mt19937_64 rng_for_case(std::uint64_t master_seed, std::uint64_t index);

}  // namespace irt
