#include "irt/search.hpp"

#include "irt/bounds.hpp"
#include "irt/counting.hpp"
#include "irt/lattice.hpp"
#include "irt/random_sets.hpp"

#include <doctest.h>

#include <random>

using namespace irt;

namespace {

PointSet unit_irt() { return PointSet({{0, 0}, {1, 0}, {0, 1}}); }

}  // namespace

TEST_CASE("candidate_points emits the six completions of a pair") {
    PointSet pair({{0, 0}, {1, 0}});
    PointSet candidates = candidate_points(pair);
    const Rational h(1, 2);
    for (const Point& expected : std::vector<Point>{
             {0, 1}, {0, -1}, {1, 1}, {1, -1}, {h, h}, {h, -h}}) {
        CHECK(candidates.contains(expected));
    }
    CHECK(candidates.size() == 6);

    CHECK_THROWS_AS(candidate_points(PointSet({{0, 0}})), std::invalid_argument);
}

TEST_CASE("candidate_points excludes existing points and respects the pair bound") {
    std::mt19937_64 rng(71);
    RandomSetOptions options;
    options.min_points = 3;
    options.max_points = 12;
    for (int i = 0; i < 30; ++i) {
        PointSet P = random_point_set(rng, options);
        PointSet candidates = candidate_points(P);
        const std::size_t n = P.size();
        CHECK(candidates.size() <= 6 * n * (n - 1) / 2);
        for (const Point& c : candidates) CHECK_FALSE(P.contains(c));
    }
}

TEST_CASE("every IRT-creating point is a candidate") {
    std::mt19937_64 rng(72);
    RandomSetOptions options;
    options.min_points = 3;
    options.max_points = 10;
    std::uniform_int_distribution<int> which(0, 5);
    int checked = 0;
    while (checked < 200) {
        PointSet P = random_point_set(rng, options);
        const auto& pts = P.points();
        std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;

        // construct z as an apex completion of a random pair, so that
        // adding it creates at least one IRT
        const Point& p = pts[i];
        const Point& q = pts[j];
        const Rational wx = q.x - p.x, wy = q.y - p.y;
        const Point m{(p.x + q.x) / 2, (p.y + q.y) / 2};
        const Point choices[6] = {{p.x - wy, p.y + wx},         {p.x + wy, p.y - wx},
                                  {q.x + wy, q.y - wx},         {q.x - wy, q.y + wx},
                                  {m.x - wy / 2, m.y + wx / 2}, {m.x + wy / 2, m.y - wx / 2}};
        const Point z = choices[which(rng)];
        if (P.contains(z)) continue;

        REQUIRE(count_irt_oracle(set_union(P, PointSet({z}))) > count_irt_oracle(P));
        CHECK(candidate_points(P).contains(z));
        ++checked;
    }
}

TEST_CASE("best_extension reference values") {
    auto scores = best_extension(unit_irt());
    REQUIRE(!scores.empty());
    CHECK(scores.front().candidate == Point{1, 1});  // completes the square
    CHECK(scores.front().new_irts == 3);
    CHECK(scores.front().total_after == 4);

    PointSet big_square({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    auto scores2 = best_extension(big_square);
    CHECK(scores2.front().candidate == Point{1, 1});
    CHECK(scores2.front().total_after == 8);

    PointSet pair({{0, 0}, {1, 0}});
    for (const auto& s : best_extension(pair)) {
        CHECK(s.new_irts == 1);
        CHECK(s.total_after == 1);
    }
}

TEST_CASE("best_extension scores match oracle differences") {
    std::mt19937_64 rng(73);
    RandomSetOptions options;
    options.min_points = 3;
    options.max_points = 10;
    for (int i = 0; i < 25; ++i) {
        PointSet P = random_point_set(rng, options);
        const long long base = count_irt_oracle(P);
        for (const auto& s : best_extension(P)) {
            PointSet extended = set_union(P, PointSet({s.candidate}));
            CHECK(s.new_irts == count_irt_oracle(extended) - base);
            CHECK(s.total_after == count_irt_oracle(extended));
        }
    }
}

TEST_CASE("best_extension ordering is deterministic") {
    auto scores = best_extension(unit_irt());
    for (std::size_t i = 1; i < scores.size(); ++i) {
        const bool strictly_less = scores[i].new_irts < scores[i - 1].new_irts;
        const bool tie_lex = scores[i].new_irts == scores[i - 1].new_irts &&
                             scores[i - 1].candidate < scores[i].candidate;
        CHECK((strictly_less || tie_lex));
    }
}

TEST_CASE("greedy_build grows through the known small optima") {
    auto records = greedy_build(unit_irt(), 5);
    REQUIRE(records.size() == 3);
    CHECK(records[0].n == 3);
    CHECK(records[0].best_count == 1);
    CHECK(records[1].n == 4);
    CHECK(records[1].best_count == 4);
    CHECK(records[2].n == 5);
    CHECK(records[2].best_count == 8);
    for (const auto& rec : records) {
        CHECK(count_irt(rec.witness) == rec.best_count);
        CHECK(static_cast<long long>(rec.witness.size()) == rec.n);
        CHECK(rec.best_count <= best_upper_bound(rec.n));
        CHECK(rec.method == "greedy");
    }

    auto grid_records = greedy_build(square_grid(3), 9);
    REQUIRE(grid_records.size() == 1);
    CHECK(grid_records[0].best_count == 28);

    CHECK_THROWS_AS(greedy_build(PointSet({{0, 0}}), 5), std::invalid_argument);
    CHECK_THROWS_AS(greedy_build(unit_irt(), 2), std::invalid_argument);
}

TEST_CASE("exhaustive_max recovers the small exact values") {
    CHECK(exhaustive_max(3, {5}).best_count == 1);
    CHECK(exhaustive_max(4, {5}).best_count == 4);
    CHECK(exhaustive_max(5, {5}).best_count == 8);

    SearchRecord rec = exhaustive_max(5, {5});
    CHECK(count_irt(rec.witness) == rec.best_count);
    CHECK(rec.witness.size() == 5);
    CHECK(rec.method == "exhaustive");
    CHECK(rec.window == "5x5");

    CHECK_THROWS_AS(exhaustive_max(2, {5}), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_max(10, {5}), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_max(5, {8}), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_max(9, {2}), std::invalid_argument);
}

TEST_CASE("pruned search equals unpruned search") {
    for (int n = 3; n <= 5; ++n) {
        ExhaustiveOptions pruned;
        ExhaustiveOptions plain;
        plain.prune = false;
        SearchRecord a = exhaustive_max(n, {4}, pruned);
        SearchRecord b = exhaustive_max(n, {4}, plain);
        CHECK(a.best_count == b.best_count);
        CHECK(a.witness == b.witness);  // same lexicographically-least witness
    }
}

TEST_CASE("wider windows never lose configurations") {
    for (int n = 4; n <= 6; ++n) {
        long long prev = -1;
        for (int w = 3; w <= 5; ++w) {
            if (w * w < n) continue;
            const long long value = exhaustive_max(n, {w}).best_count;
            CHECK(value >= prev);
            prev = value;
        }
    }
}

TEST_CASE("node budget is enforced") {
    ExhaustiveOptions tiny;
    tiny.node_budget = 10;
    CHECK_THROWS_AS(exhaustive_max(5, {5}, tiny), BudgetExceededError);
}

TEST_CASE("table1_run compares greedy growth to the published values") {
    Table1Result result = table1_run(default_table1_seeds(), 2);
    REQUIRE(result.table.size() == 16);
    for (const auto& row : result.table) {
        CHECK(row.n >= 10);
        CHECK(row.n <= 25);
        CHECK(row.achieved <= row.upper_bound);
        CHECK(row.known_lower_bound == known_lower_bounds_10_to_25()[row.n - 10]);
        CHECK(row.achieved > 0);
    }
    // records exist for every size from each seed up to 25
    CHECK(!result.records.empty());

    const std::string csv = table1_csv(result.table);
    CHECK(csv.rfind("n,achieved,known_lower_bound,upper_bound\n", 0) == 0);
}

TEST_CASE("search records serialize to JSON lines") {
    SearchRecord rec = exhaustive_max(4, {4});
    const std::string line = to_json_line(rec);
    CHECK(line.find("\"n\":4") != std::string::npos);
    CHECK(line.find("\"best_count\":4") != std::string::npos);
    CHECK(line.find("\"method\":\"exhaustive\"") != std::string::npos);
    CHECK(line.find('\n') == std::string::npos);
}
