#include "irt/bounds.hpp"

#include "irt/counting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace irt {

namespace {

// Lexicographically smallest pair among those at maximum squared distance.
std::pair<Point, Point> diameter_pair(const PointSet& P) {
    const auto& pts = P.points();
    bool have = false;
    Rational best_d2;
    std::pair<Point, Point> best;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Point a = pts[i];
            Point b = pts[j];
            if (b < a) std::swap(a, b);
            Rational d2 = dist2(a, b);
            if (!have || best_d2 < d2) {
                have = true;
                best_d2 = d2;
                best = {a, b};
            } else if (d2 == best_d2) {
                if (a < best.first || (a == best.first && b < best.second)) best = {a, b};
            }
        }
    }
    return best;
}

PointSet rot45_minus_neighbors(const PointSet& P, const Point& z) {
    PointSet n;
    for (const Point& p : P) {
        Point image = rot45_minus(z, p);
        if (image != z && P.contains(image)) n.insert(image);
    }
    return n;
}

// Longest simple path, measured in edges and capped (we only need to tell
// “at most 2” from “3 or more”).
long long longest_path_capped(const std::vector<Point>& vertices,
                              const std::map<Point, std::vector<Point>>& adjacency,
                              long long cap) {
    long long best = 0;
    std::set<Point> visited;
    std::function<void(const Point&, long long)> dfs = [&](const Point& u, long long len) {
        best = std::max(best, len);
        if (len >= cap) return;
        auto it = adjacency.find(u);
        if (it == adjacency.end()) return;
        for (const Point& v : it->second) {
            if (visited.count(v)) continue;
            visited.insert(v);
            dfs(v, len + 1);
            visited.erase(v);
        }
    };
    for (const Point& s : vertices) {
        visited.clear();
        visited.insert(s);
        dfs(s, 0);
        if (best >= cap) break;
    }
    return best;
}

void verify(bool condition, const std::string& what) {
    if (!condition) throw VerificationError("diameter invariant violated: " + what);
}

}  // namespace

long long trivial_upper_bound(long long n) {
    if (n < 0) throw std::invalid_argument("trivial_upper_bound: n must be >= 0");
    return n * n - n;
}

long long best_upper_bound(long long n) {
    if (n < 3) throw std::invalid_argument("best_upper_bound: n must be >= 3");
    return (2 * (n - 1) * (n - 1) - 5) / 3;
}

long long averaging_upper_bound(long long n, long long k, long long b) {
    if (k < 3 || k > n) throw std::invalid_argument("averaging_upper_bound: need 3 <= k <= n");
    if (b < 0) throw std::invalid_argument("averaging_upper_bound: b must be >= 0");
    BigInt numerator = BigInt(n) * (n - 1) * (n - 2) * b;
    BigInt denominator = BigInt(k) * (k - 1) * (k - 2);
    return (numerator / denominator).convert_to<long long>();
}

DiameterReport diameter_report(const PointSet& P) {
    if (P.size() < 3) throw std::invalid_argument("diameter_report: need at least 3 points");
    const long long n = static_cast<long long>(P.size());

    DiameterReport report;
    auto [x, y] = diameter_pair(P);
    report.diameter_a = x;
    report.diameter_b = y;

    PointSet nx = rot45_minus_neighbors(P, x);
    PointSet ny = rot45_minus_neighbors(P, y);
    report.nx_size = static_cast<long long>(nx.size());
    report.ny_size = static_cast<long long>(ny.size());
    for (const Point& p : nx)
        if (ny.contains(p)) ++report.nx_cap_ny;

    // Graph on P \ {x, y}: u ~ v when one is the quarter turn of the other
    // about a diameter endpoint.
    std::vector<Point> vertices;
    for (const Point& p : P)
        if (p != x && p != y) vertices.push_back(p);

    std::set<std::pair<Point, Point>> edges;
    std::map<Point, std::vector<Point>> adjacency;
    for (const Point& u : vertices) {
        for (const Point& center : {x, y}) {
            Point v = rot90(center, u);
            if (v == x || v == y || !P.contains(v)) continue;
            Point a = u, b = v;
            if (b < a) std::swap(a, b);
            if (edges.insert({a, b}).second) {
                adjacency[a].push_back(b);
                adjacency[b].push_back(a);
            }
        }
    }
    report.edge_count = static_cast<long long>(edges.size());
    for (const auto& [u, nbrs] : adjacency)
        report.max_graph_degree =
            std::max(report.max_graph_degree, static_cast<long long>(nbrs.size()));
    report.max_path_length = longest_path_capped(vertices, adjacency, 4);

    report.deg90_sum_xy = deg90(P, x) + deg90(P, y);

    const long long total_x = deg90(P, x) + deg45(P, x, Orientation::Plus) +
                              deg45(P, x, Orientation::Minus);
    const long long total_y = deg90(P, y) + deg45(P, y, Orientation::Plus) +
                              deg45(P, y, Orientation::Minus);
    report.min_total_degree_xy = std::min(total_x, total_y);

    verify(report.nx_cap_ny <= 1, "|N_x ∩ N_y| > 1");
    verify(report.max_graph_degree <= 2, "graph degree > 2");
    verify(report.max_path_length <= 2, "graph path longer than 2");
    verify(report.deg90_sum_xy >= report.edge_count &&
               report.deg90_sum_xy <= report.edge_count + 1,
           "deg90 sum outside [|E|, |E|+1]");
    verify(report.min_total_degree_xy <= (4 * n - 5) / 3,
           "both diameter endpoints exceed the (4n-5)/3 degree target");
    return report;
}

PairDegreeSums deg45_pair_bounds(const PointSet& P) {
    if (P.size() < 3) throw std::invalid_argument("deg45_pair_bounds: need at least 3 points");
    const long long n = static_cast<long long>(P.size());
    auto [x, y] = diameter_pair(P);

    PairDegreeSums sums;
    sums.plus_sum = deg45(P, x, Orientation::Plus) + deg45(P, y, Orientation::Plus);
    sums.minus_sum = deg45(P, x, Orientation::Minus) + deg45(P, y, Orientation::Minus);
    if (sums.plus_sum > n - 1 || sums.minus_sum > n - 1)
        throw VerificationError("diameter invariant violated: 45-degree pair sum exceeds n-1");
    return sums;
}

}  // namespace irt
