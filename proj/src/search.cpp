#include "irt/search.hpp"

#include "irt/bounds.hpp"
#include "irt/counting.hpp"
#include "irt/lattice.hpp"
#include "irt/parallel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace irt {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Point midpoint(const Point& p, const Point& q) {
    return {(p.x + q.x) / 2, (p.y + q.y) / 2};
}

// The six apex completions of a pair: i*w denotes the quarter turn of the
// offset w = q - p.
void pair_completions(const Point& p, const Point& q, std::vector<Point>& out) {
    const Rational wx = q.x - p.x;
    const Rational wy = q.y - p.y;
    // right angle at p: p ± i*(q-p)
    out.push_back({p.x - wy, p.y + wx});
    out.push_back({p.x + wy, p.y - wx});
    // right angle at q: q ± i*(p-q)
    out.push_back({q.x + wy, q.y - wx});
    out.push_back({q.x - wy, q.y + wx});
    // right angle at the new point: m ± i*(q-p)/2
    const Point m = midpoint(p, q);
    out.push_back({m.x - wy / 2, m.y + wx / 2});
    out.push_back({m.x + wy / 2, m.y - wx / 2});
}

// IRTs formed by candidate z (not in P) with two points of P: apex at z via
// the rotation identity, apex at some p in P via the two oriented images.
long long extension_gain(const PointSet& P, const Point& z) {
    long long gain = deg90_candidate(P, z);
    for (const Point& p : P) {
        if (P.contains(rot90(p, z))) ++gain;
        // clockwise image: rot90^-1(p, z)
        Point cw{p.x + (z.y - p.y), p.y - (z.x - p.x)};
        if (P.contains(cw)) ++gain;
    }
    return gain;
}

}  // namespace

PointSet candidate_points(const PointSet& P) {
    if (P.size() < 2) throw std::invalid_argument("candidate_points: need at least 2 points");
    const auto& pts = P.points();
    PointSet candidates;
    std::vector<Point> completions;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            completions.clear();
            pair_completions(pts[i], pts[j], completions);
            for (const Point& c : completions)
                if (!P.contains(c)) candidates.insert(c);
        }
    }
    return candidates;
}

std::vector<CandidateScore> best_extension(const PointSet& P) {
    const long long base = count_irt(P);
    PointSet candidates = candidate_points(P);

    std::vector<CandidateScore> scores;
    scores.reserve(candidates.size());
    for (const Point& z : candidates) {
        const long long gain = extension_gain(P, z);
        scores.push_back({z, gain, base + gain});
    }
    std::sort(scores.begin(), scores.end(), [](const CandidateScore& a, const CandidateScore& b) {
        if (a.new_irts != b.new_irts) return a.new_irts > b.new_irts;
        return a.candidate < b.candidate;
    });
    return scores;
}

std::vector<SearchRecord> greedy_build(const PointSet& seed, long long n_target,
                                       const std::string& label) {
    if (seed.size() < 2) throw std::invalid_argument("greedy_build: seed needs >= 2 points");
    if (n_target < static_cast<long long>(seed.size()))
        throw std::invalid_argument("greedy_build: n_target smaller than the seed");

    const std::string window =
        label.empty() ? "greedy(seed n0=" + std::to_string(seed.size()) + ")" : label;
    const auto start = Clock::now();

    std::vector<SearchRecord> records;
    PointSet current = seed;
    long long count = count_irt(current);
    records.push_back({static_cast<long long>(current.size()), count, current, "greedy", window,
                       seconds_since(start)});

    while (static_cast<long long>(current.size()) < n_target) {
        auto scores = best_extension(current);
        const CandidateScore& best = scores.front();  // never empty for >= 2 points
        current.insert(best.candidate);
        count += best.new_irts;
        records.push_back({static_cast<long long>(current.size()), count, current, "greedy",
                           window, seconds_since(start)});
    }
    return records;
}

namespace {

// Exhaustive subset search over a w x w grid. For every cell pair the
// completing cells are precomputed; during the DFS, completion_count[c]
// holds the number of chosen pairs that form an IRT with cell c, so the
// gain of adding c is a single lookup.
class WindowSearch {
public:
    WindowSearch(int n, int width, const ExhaustiveOptions& options)
        : n_(n), width_(width), cells_(width * width), options_(options) {
        completers_.resize(cells_ * cells_);
        for (int a = 0; a < cells_; ++a) {
            for (int b = a + 1; b < cells_; ++b) {
                auto& list = completers_[a * cells_ + b];
                for (int c = 0; c < cells_; ++c) {
                    if (c == a || c == b) continue;
                    if (is_irt(a, b, c)) list.push_back(c);
                }
            }
        }
        completion_count_.assign(cells_, 0);
    }

    void run() {
        chosen_.clear();
        dfs(0);
    }

    long long best_count() const { return best_count_; }
    const std::vector<int>& best_cells() const { return best_cells_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::pair<int, int> cell_xy(int c) const { return {c / width_, c % width_}; }

    bool is_irt(int a, int b, int c) const {
        auto [ax, ay] = cell_xy(a);
        auto [bx, by] = cell_xy(b);
        auto [cx, cy] = cell_xy(c);
        auto right_at = [](int px, int py, int qx, int qy, int rx, int ry) {
            const int ux = qx - px, uy = qy - py;
            const int vx = rx - px, vy = ry - py;
            return ux * vx + uy * vy == 0 && ux * ux + uy * uy == vx * vx + vy * vy;
        };
        return right_at(ax, ay, bx, by, cx, cy) || right_at(bx, by, ax, ay, cx, cy) ||
               right_at(cx, cy, ax, ay, bx, by);
    }

    // Upper bound on IRTs still obtainable with r more cells drawn from
    // indices >= from: current pairs contribute at most the r largest
    // completion counters; triangles with two or three new vertices are
    // bounded by 6 per new pair.
    long long remaining_bound(int from, int r) const {
        long long top[9] = {0};
        for (int c = from; c < cells_; ++c) {
            long long v = completion_count_[c];
            if (v > top[r - 1]) {
                int i = r - 1;
                while (i > 0 && top[i - 1] < v) {
                    top[i] = top[i - 1];
                    --i;
                }
                top[i] = v;
            }
        }
        long long sum = 0;
        for (int i = 0; i < r; ++i) sum += top[i];
        return sum + 6LL * r * (r - 1) / 2;
    }

    void dfs(int from) {
        if (++nodes_ > options_.node_budget)
            throw BudgetExceededError("exhaustive_max: node budget exceeded");

        const int depth = static_cast<int>(chosen_.size());
        if (depth == n_) {
            if (count_ > best_count_) {
                best_count_ = count_;
                best_cells_ = chosen_;
            }
            return;
        }
        const int remaining = n_ - depth;
        if (options_.prune && best_count_ >= 0 &&
            count_ + remaining_bound(from, remaining) <= best_count_) {
            return;
        }
        for (int c = from; c <= cells_ - remaining; ++c) {
            const long long gain = completion_count_[c];
            if (options_.prune && depth == n_ - 1 && count_ + gain <= best_count_) continue;
            count_ += gain;
            for (int s : chosen_) bump(s, c, +1);
            chosen_.push_back(c);
            dfs(c + 1);
            chosen_.pop_back();
            for (int s : chosen_) bump(s, c, -1);
            count_ -= gain;
        }
    }

    void bump(int a, int b, int delta) {
        if (a > b) std::swap(a, b);
        for (int c : completers_[a * cells_ + b]) completion_count_[c] += delta;
    }

    int n_;
    int width_;
    int cells_;
    ExhaustiveOptions options_;
    std::vector<std::vector<int>> completers_;
    std::vector<long long> completion_count_;
    std::vector<int> chosen_;
    long long count_ = 0;
    long long best_count_ = -1;
    std::vector<int> best_cells_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

SearchRecord exhaustive_max(int n, GridWindow window, const ExhaustiveOptions& options) {
    if (n < 3 || n > 9) throw std::invalid_argument("exhaustive_max: n must be in [3, 9]");
    if (window.width < 2 || window.width > 7)
        throw std::invalid_argument("exhaustive_max: window width must be in [2, 7]");
    if (static_cast<long long>(window.width) * window.width < n)
        throw std::invalid_argument("exhaustive_max: window too small for n points");

    const auto start = Clock::now();
    WindowSearch search(n, window.width, options);
    search.run();

    SearchRecord record;
    record.n = n;
    record.best_count = search.best_count();
    record.method = "exhaustive";
    record.window = std::to_string(window.width) + "x" + std::to_string(window.width);
    for (int c : search.best_cells())
        record.witness.insert(Point{Rational(c / window.width), Rational(c % window.width)});
    record.runtime_seconds = seconds_since(start);

    if (count_irt(record.witness) != record.best_count)
        throw std::logic_error("exhaustive_max: witness recount mismatch");
    return record;
}

const std::vector<long long>& known_lower_bounds_10_to_25() {
    static const std::vector<long long> values{35,  43,  52,  64,  74,  85,  97,  112,
                                               124, 139, 156, 176, 192, 210, 229, 252};
    return values;
}

std::vector<NamedSeed> default_table1_seeds() {
    std::vector<NamedSeed> seeds;
    seeds.push_back({"unit-irt", PointSet({{0, 0}, {1, 0}, {0, 1}})});
    seeds.push_back({"unit-square", PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}})});
    seeds.push_back({"grid3", square_grid(3)});
    // disk sections at every target size: greedy growth from small seeds
    // alone can lose to the plain disk at a few sizes (20, 21), so each
    // disk is also its own starting point
    for (long long n = 9; n <= 25; ++n)
        seeds.push_back({"disk" + std::to_string(n), disk_lattice(n)});
    return seeds;
}

Table1Result table1_run(const std::vector<NamedSeed>& seeds, int threads) {
    constexpr int kMaxN = 25;
    std::vector<std::vector<SearchRecord>> per_seed(seeds.size());
    parallel_for(0, seeds.size(), threads, [&](std::size_t i) {
        per_seed[i] = greedy_build(seeds[i].points, kMaxN, seeds[i].label);
    });

    Table1Result result;
    std::map<int, Table1Row> rows;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        for (const SearchRecord& rec : per_seed[i]) {
            result.records.push_back(rec);
            if (rec.n < 10 || rec.n > kMaxN) continue;
            Table1Row& row = rows[static_cast<int>(rec.n)];
            if (row.n == 0 || rec.best_count > row.achieved) {
                row.n = static_cast<int>(rec.n);
                row.achieved = rec.best_count;
                row.achieved_by = seeds[i].label;
            }
        }
    }
    for (auto& [n, row] : rows) {
        row.known_lower_bound = known_lower_bounds_10_to_25()[n - 10];
        row.upper_bound = best_upper_bound(n);
        result.table.push_back(row);
    }
    return result;
}

std::string table1_csv(const std::vector<Table1Row>& table) {
    std::string csv = "n,achieved,known_lower_bound,upper_bound\n";
    for (const Table1Row& row : table) {
        csv += std::to_string(row.n) + "," + std::to_string(row.achieved) + "," +
               std::to_string(row.known_lower_bound) + "," + std::to_string(row.upper_bound) +
               "\n";
    }
    return csv;
}

std::string to_json_line(const SearchRecord& rec) {
    nlohmann::json j;
    j["n"] = rec.n;
    j["best_count"] = rec.best_count;
    nlohmann::json witness = nlohmann::json::array();
    for (const Point& p : rec.witness)
        witness.push_back({p.x.to_string(), p.y.to_string()});
    j["witness"] = witness;
    j["method"] = rec.method;
    j["window"] = rec.window;
    j["runtime_seconds"] = rec.runtime_seconds;
    return j.dump();
}

}  // namespace irt
