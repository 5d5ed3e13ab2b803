#pragma once

// Extremal search machinery: the finite candidate set for one-point
// extensions, greedy growth, and exact branch-and-bound maximization over
// small lattice windows.

#include "irt/errors.hpp"
#include "irt/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace irt {

struct CandidateScore {
    Point candidate;
    long long new_irts = 0;     // IRTs formed by the candidate with two points of P
    long long total_after = 0;  // count_irt(P) + new_irts
};

struct SearchRecord {
    long long n = 0;
    long long best_count = 0;
    PointSet witness;
    std::string method;  // "greedy" | "exhaustive"
    std::string window;  // candidate-grid / seed description
    double runtime_seconds = 0.0;
};

std::string to_json_line(const SearchRecord& rec);

// All points whose addition to P can create at least one new IRT: for each
// pair {p, q} of P, the two apexes at p, the two at q, and the two
// completions with the right angle at the new point. Points already in P
// are excluded. Requires |P| >= 2.
PointSet candidate_points(const PointSet& P);

// Every candidate scored by the exact number of IRTs its addition creates,
// sorted by descending new_irts with lexicographic tie-break.
// Requires |P| >= 2.
std::vector<CandidateScore> best_extension(const PointSet& P);

// Repeated best one-point extension from seed up to n_target points,
// recording every intermediate size (the seed included). Deterministic.
std::vector<SearchRecord> greedy_build(const PointSet& seed, long long n_target,
                                       const std::string& label = "");

struct GridWindow {
    int width = 5;  // the window is {0,...,width-1}^2
};

struct ExhaustiveOptions {
    std::uint64_t node_budget = 4'000'000'000ULL;
    bool prune = true;
};

// Exact maximum of count_irt over all n-subsets of the window, by
// depth-first enumeration with incremental counting; returns the
// lexicographically least maximizing witness. Requires 3 <= n <= 9 and
// width <= 7. Throws BudgetExceededError when the node budget is hit.
SearchRecord exhaustive_max(int n, GridWindow window, const ExhaustiveOptions& options = {});

struct Table1Row {
    int n = 0;
    long long achieved = 0;
    std::string achieved_by;
    long long known_lower_bound = 0;  // published best lower bound
    long long upper_bound = 0;        // best_upper_bound(n)
};

struct Table1Result {
    std::vector<SearchRecord> records;  // every greedy record, all seeds
    std::vector<Table1Row> table;       // n = 10..25
};

struct NamedSeed {
    std::string label;
    PointSet points;
};

// Greedy growth from each seed up to n = 25, keeping the best count per n.
// threads > 1 runs seeds in parallel (results are deterministic).
Table1Result table1_run(const std::vector<NamedSeed>& seeds, int threads = 1);

std::vector<NamedSeed> default_table1_seeds();

// Published best lower bounds for n = 10..25.
const std::vector<long long>& known_lower_bounds_10_to_25();

std::string table1_csv(const std::vector<Table1Row>& table);

}  // namespace irt
