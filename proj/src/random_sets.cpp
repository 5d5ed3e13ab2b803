#include "irt/random_sets.hpp"

namespace irt {

namespace {

Point random_point(std::mt19937_64& rng, int mode) {
    switch (mode) {
        case 0: {  // dense small integers: many coincidences, many IRTs
            std::uniform_int_distribution<long long> coord(-6, 6);
            return {Rational(coord(rng)), Rational(coord(rng))};
        }
        case 1: {  // unit lattice together with its (1/2,1/2) translate
            std::uniform_int_distribution<long long> coord(-5, 5);
            std::uniform_int_distribution<int> shifted(0, 1);
            Rational s = shifted(rng) ? Rational(1, 2) : Rational(0);
            return {Rational(coord(rng)) + s, Rational(coord(rng)) + s};
        }
        default: {  // general small rationals
            std::uniform_int_distribution<long long> num(-24, 24);
            std::uniform_int_distribution<long long> den(1, 5);
            return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        }
    }
}

// A similarity keeps every IRT an IRT, so transformed sets exercise the
// canonical forms without changing any of the tested quantities.
Point transform(const Point& p, const Rational& scale, int quarter_turns, const Point& offset) {
    Point q = p;
    for (int i = 0; i < quarter_turns; ++i) q = rot90(Point{0, 0}, q);
    return Point{q.x * scale + offset.x, q.y * scale + offset.y};
}

}  // namespace

PointSet random_point_set(std::mt19937_64& rng, const RandomSetOptions& options) {
    std::uniform_int_distribution<int> size_dist(options.min_points, options.max_points);
    std::uniform_int_distribution<int> mode_dist(0, 2);
    const int n = size_dist(rng);
    const int mode = mode_dist(rng);

    Rational scale(1);
    int quarter_turns = 0;
    Point offset{0, 0};
    if (options.allow_transforms) {
        std::uniform_int_distribution<int> apply(0, 1);
        if (apply(rng)) {
            std::uniform_int_distribution<long long> sn(1, 4), sd(1, 3);
            std::uniform_int_distribution<int> turns(0, 3);
            std::uniform_int_distribution<long long> off(-8, 8);
            scale = Rational(sn(rng), sd(rng));
            quarter_turns = turns(rng);
            offset = Point{Rational(off(rng), 2), Rational(off(rng), 2)};
        }
    }

    PointSet set;
    int attempts = 0;
    while (static_cast<int>(set.size()) < n) {
        set.insert(transform(random_point(rng, mode), scale, quarter_turns, offset));
        // dense modes can exhaust their range for large n; widen by falling
        // back to the rational mode
        if (++attempts > 50 * n && static_cast<int>(set.size()) < n) {
            set.insert(transform(random_point(rng, 2), scale, quarter_turns, offset));
        }
    }
    return set;
}

std::mt19937_64 rng_for_case(std::uint64_t master_seed, std::uint64_t index) {
    std::seed_seq seq{master_seed, index, std::uint64_t(0x9e3779b97f4a7c15ULL)};
    return std::mt19937_64(seq);
}

}  // namespace irt
