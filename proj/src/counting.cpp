#include "irt/counting.hpp"

#include "irt/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace irt {

namespace {

using std::int64_t;
using std::uint64_t;

constexpr int64_t kMaxScaledCoord = int64_t(1) << 30;
const BigInt kMaxDenominatorLcm = BigInt(1) << 16;

inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Open-addressing set of integer coordinate pairs with |coord| < 2^30,
// packed into one 64-bit key. Linear probing, power-of-two capacity.
class FlatPairSet {
public:
    explicit FlatPairSet(const std::vector<std::pair<int64_t, int64_t>>& pts) {
        std::size_t cap = 16;
        while (cap < pts.size() * 2) cap <<= 1;
        mask_ = cap - 1;
        slots_.assign(cap, kEmpty);
        for (const auto& [x, y] : pts) insert(pack(x, y));
    }

    bool contains(int64_t x, int64_t y) const {
        uint64_t key = pack(x, y);
        std::size_t i = mix64(key) & mask_;
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) return true;
            i = (i + 1) & mask_;
        }
        return false;
    }

private:
    static constexpr uint64_t kEmpty = ~uint64_t(0);

    static uint64_t pack(int64_t x, int64_t y) {
        // coordinates bounded well below 2^31, so the shifted offsets fit
        return (uint64_t(x + kMaxScaledCoord) << 32) | uint64_t(y + kMaxScaledCoord);
    }

    void insert(uint64_t key) {
        std::size_t i = mix64(key) & mask_;
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) return;
            i = (i + 1) & mask_;
        }
        slots_[i] = key;
    }

    std::vector<uint64_t> slots_;
    std::size_t mask_ = 0;
};

struct ScaledDegrees {
    long long deg90 = 0;
    long long deg45_plus = 0;
    long long deg45_minus = 0;
};

// Degrees of pts[zi] inside the scaled set; `member` says whether the -1
// self-image correction applies.
ScaledDegrees scaled_degrees(const std::vector<std::pair<int64_t, int64_t>>& pts,
                             const FlatPairSet& set, int64_t zx, int64_t zy, bool member) {
    ScaledDegrees d;
    const int64_t s = zx + zy;   // rot90 image: (s - y, t + x)
    const int64_t t = zy - zx;
    for (const auto& [x, y] : pts) {
        if (set.contains(s - y, t + x)) ++d.deg90;
        const int64_t wx = x - zx;
        const int64_t wy = y - zy;
        if (set.contains(zx + wx - wy, zy + wx + wy)) ++d.deg45_plus;
        // (1+i)/2 image is on the lattice only when wx + wy is even
        if (((wx + wy) & 1) == 0 &&
            set.contains(zx + (wx - wy) / 2, zy + (wx + wy) / 2)) {
            ++d.deg45_minus;
        }
    }
    if (member) {
        --d.deg90;  // z is a fixed point of every map, so it always matches
        --d.deg45_plus;
        --d.deg45_minus;
    }
    return d;
}

long long generic_degree(const PointSet& P, const Point& z, Orientation orientation,
                         bool member) {
    long long hits = 0;
    for (const Point& p : P) {
        Point image = orientation == Orientation::Plus ? rot45_plus(z, p) : rot45_minus(z, p);
        if (P.contains(image)) ++hits;
    }
    return member ? hits - 1 : hits;
}

long long generic_deg90(const PointSet& P, const Point& z, bool member) {
    long long hits = 0;
    for (const Point& p : P)
        if (P.contains(rot90(z, p))) ++hits;
    return member ? hits - 1 : hits;
}

}  // namespace

namespace detail {

bool scale_to_int(const PointSet& P, ScaledInts& out) {
    BigInt lcm = 1;
    for (const Point& p : P) {
        lcm = boost::multiprecision::lcm(lcm, p.x.den());
        lcm = boost::multiprecision::lcm(lcm, p.y.den());
        if (lcm > kMaxDenominatorLcm) return false;
    }
    out.pts.clear();
    out.pts.reserve(P.size());
    for (const Point& p : P) {
        BigInt sx = p.x.num() * (lcm / p.x.den());
        BigInt sy = p.y.num() * (lcm / p.y.den());
        if (boost::multiprecision::abs(sx) >= kMaxScaledCoord ||
            boost::multiprecision::abs(sy) >= kMaxScaledCoord) {
            return false;
        }
        out.pts.emplace_back(sx.convert_to<int64_t>(), sy.convert_to<int64_t>());
    }
    return true;
}

long long count_irt_generic(const PointSet& P) {
    if (P.size() < 3) return 0;
    long long total = 0;
    for (const Point& z : P) total += generic_deg90(P, z, true);
    return total;
}

long long count_irt_scaled(const ScaledInts& S) {
    if (S.pts.size() < 3) return 0;
    FlatPairSet set(S.pts);
    long long total = 0;
    for (const auto& [zx, zy] : S.pts) {
        const int64_t s = zx + zy;
        const int64_t t = zy - zx;
        long long hits = 0;
        for (const auto& [x, y] : S.pts)
            if (set.contains(s - y, t + x)) ++hits;
        total += hits - 1;
    }
    return total;
}

}  // namespace detail

long long deg90(const PointSet& P, const Point& z) {
    if (!P.contains(z))
        throw std::invalid_argument("deg90: center must be a member of the point set");
    return generic_deg90(P, z, true);
}

long long deg90_candidate(const PointSet& P, const Point& z) {
    if (P.contains(z))
        throw std::invalid_argument("deg90_candidate: candidate already in the point set");
    return generic_deg90(P, z, false);
}

long long deg45(const PointSet& P, const Point& z, Orientation orientation) {
    if (!P.contains(z))
        throw std::invalid_argument("deg45: center must be a member of the point set");
    return generic_degree(P, z, orientation, true);
}

long long count_irt(const PointSet& P) {
    if (P.size() < 3) return 0;
    detail::ScaledInts scaled;
    if (detail::scale_to_int(P, scaled)) return detail::count_irt_scaled(scaled);
    return detail::count_irt_generic(P);
}

long long count_irt_oracle(const PointSet& P, std::size_t cap) {
    if (P.size() > cap) {
        throw BudgetExceededError("count_irt_oracle: set size " + std::to_string(P.size()) +
                                  " exceeds cap " + std::to_string(cap));
    }
    const auto& pts = P.points();
    long long total = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (classify_irt(pts[i], pts[j], pts[k])) ++total;
    return total;
}

DegreeProfile degree_profile(const PointSet& P) {
    DegreeProfile profile;
    profile.entries.reserve(P.size());

    detail::ScaledInts scaled;
    if (detail::scale_to_int(P, scaled)) {
        FlatPairSet set(scaled.pts);
        for (std::size_t i = 0; i < scaled.pts.size(); ++i) {
            auto [zx, zy] = scaled.pts[i];
            ScaledDegrees d = scaled_degrees(scaled.pts, set, zx, zy, true);
            profile.entries.push_back({P.points()[i], d.deg90, d.deg45_plus, d.deg45_minus});
        }
    } else {
        for (const Point& z : P) {
            profile.entries.push_back({z, generic_deg90(P, z, true),
                                       generic_degree(P, z, Orientation::Plus, true),
                                       generic_degree(P, z, Orientation::Minus, true)});
        }
    }

    for (const PointDegrees& e : profile.entries) {
        profile.sum_deg90 += e.deg90;
        profile.sum_deg45_plus += e.deg45_plus;
        profile.sum_deg45_minus += e.deg45_minus;
    }
    if (profile.sum_deg90 != profile.sum_deg45_plus ||
        profile.sum_deg90 != profile.sum_deg45_minus) {
        throw std::logic_error("degree_profile: orientation sums disagree");
    }
    return profile;
}

}  // namespace irt
