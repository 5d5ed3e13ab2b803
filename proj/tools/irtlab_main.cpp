// irtlab: count isosceles right triangles in exact-coordinate point sets,
// generate lattice constructions, analyze the two-disk coefficient, search
// for extremal configurations, and verify the structural bounds.
//
// Exit codes: 0 success, 2 input error, 3 oracle mismatch, 4 budget
// exceeded, 5 verification failure.

#include "irt/bounds.hpp"
#include "irt/coefficient.hpp"
#include "irt/counting.hpp"
#include "irt/lattice.hpp"
#include "irt/parallel.hpp"
#include "irt/point_io.hpp"
#include "irt/random_sets.hpp"
#include "irt/search.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitOracleMismatch = 3;
constexpr int kExitBudget = 4;
constexpr int kExitVerification = 5;

struct CountOptions {
    std::string path;
    bool oracle = false;
    bool degrees = false;
    bool json = false;
    std::size_t oracle_cap = 60;
};

int run_count(const CountOptions& opt) {
    irt::PointSet points = irt::parse_point_file_at(opt.path);
    const long long count = irt::count_irt(points);

    if (opt.oracle) {
        const long long reference = irt::count_irt_oracle(points, opt.oracle_cap);
        if (reference != count) {
            std::cerr << "oracle mismatch: fast=" << count << " oracle=" << reference << "\n";
            return kExitOracleMismatch;
        }
    }

    if (opt.json) {
        nlohmann::json j;
        j["n"] = points.size();
        j["count"] = count;
        if (opt.degrees) {
            nlohmann::json degrees = nlohmann::json::array();
            for (const auto& e : irt::degree_profile(points).entries) {
                degrees.push_back({{"point", {e.z.x.to_string(), e.z.y.to_string()}},
                                   {"deg90", e.deg90},
                                   {"deg45_plus", e.deg45_plus},
                                   {"deg45_minus", e.deg45_minus}});
            }
            j["degrees"] = degrees;
        }
        std::cout << j.dump() << "\n";
        return kExitOk;
    }

    std::cout << count << "\n";
    if (opt.degrees) {
        std::cout << "# x y deg90 deg45_plus deg45_minus\n";
        for (const auto& e : irt::degree_profile(points).entries) {
            std::cout << e.z.to_string() << " " << e.deg90 << " " << e.deg45_plus << " "
                      << e.deg45_minus << "\n";
        }
    }
    return kExitOk;
}

void emit_points(const irt::PointSet& points, bool with_count) {
    irt::write_point_file(std::cout, points);
    if (with_count) std::cout << "# count_irt = " << irt::count_irt(points) << "\n";
}

irt::PointSet seed_by_name(const std::string& name) {
    for (auto& seed : irt::default_table1_seeds())
        if (seed.label == name) return seed.points;
    // otherwise treat as a point-file path
    return irt::parse_point_file_at(name);
}

struct VerifyStats {
    std::map<std::string, long long> failures;
    std::atomic<long long> failed_sets{0};
    std::mutex mutex;
};

const std::vector<std::string> kLemmaInvariants = {
    "nx_cap_ny<=1",          "graph-degree<=2",          "path-length<=2",
    "deg90-sum-vs-edges",    "deg45-pair-sums<=n-1",     "min-total-degree<=(4n-5)/3",
    "degree-sums-identical",
};

// One randomized set pushed through every structural check. Returns the
// name of the violated invariant, or empty.
std::string check_one_set(const irt::PointSet& P) {
    try {
        irt::DiameterReport report = irt::diameter_report(P);
        (void)report;
        irt::deg45_pair_bounds(P);
    } catch (const irt::VerificationError& e) {
        const std::string what = e.what();
        if (what.find("N_x") != std::string::npos) return kLemmaInvariants[0];
        if (what.find("degree > 2") != std::string::npos) return kLemmaInvariants[1];
        if (what.find("path") != std::string::npos) return kLemmaInvariants[2];
        if (what.find("deg90 sum") != std::string::npos) return kLemmaInvariants[3];
        if (what.find("45-degree") != std::string::npos) return kLemmaInvariants[4];
        return kLemmaInvariants[5];
    }
    const irt::DegreeProfile profile = irt::degree_profile(P);
    if (profile.sum_deg90 != irt::count_irt(P)) return kLemmaInvariants[6];
    return "";
}

int run_verify_lemmas(long long sets, std::uint64_t seed, int threads) {
    VerifyStats stats;
    irt::parallel_for(0, static_cast<std::size_t>(sets), threads, [&](std::size_t i) {
        auto rng = irt::rng_for_case(seed, i);
        irt::RandomSetOptions options;
        options.min_points = 5;
        options.max_points = 40;
        irt::PointSet P = irt::random_point_set(rng, options);
        std::string violated = check_one_set(P);
        if (!violated.empty()) {
            std::lock_guard<std::mutex> lock(stats.mutex);
            ++stats.failures[violated];
            ++stats.failed_sets;
            std::cerr << "violation in set " << i << " (" << violated << "):\n";
            irt::write_point_file(std::cerr, P);
        }
    });

    for (const auto& name : kLemmaInvariants) {
        long long failed = 0;
        {
            std::lock_guard<std::mutex> lock(stats.mutex);
            auto it = stats.failures.find(name);
            if (it != stats.failures.end()) failed = it->second;
        }
        std::cout << name << ": " << (failed == 0 ? "PASS" : "FAIL") << " (" << (sets - failed)
                  << "/" << sets << ")\n";
    }
    return stats.failed_sets == 0 ? kExitOk : kExitVerification;
}

int run_verify_bounds() {
    std::cout << "n,upper_bound\n";
    for (long long n = 3; n <= 25; ++n)
        std::cout << n << "," << irt::best_upper_bound(n) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"isosceles right triangle counting laboratory"};
    app.require_subcommand(1);

    int threads = irt::default_thread_count();
    app.add_option("--threads", threads, "worker thread cap (default IRT_LAB_THREADS)");

    // count
    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "count IRTs in a point file");
    count->add_option("file", count_opt.path, "point file")->required();
    count->add_flag("--oracle", count_opt.oracle, "cross-check with the O(n^3) oracle");
    count->add_option("--oracle-cap", count_opt.oracle_cap, "max size for the oracle");
    count->add_flag("--degrees", count_opt.degrees, "print the per-point degree profile");
    count->add_flag("--json", count_opt.json, "JSON output");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a lattice construction");
    construct->require_subcommand(1);
    bool with_count = false;
    construct->add_flag("--count", with_count, "append the IRT count as a comment");

    long long grid_k = 3;
    auto* grid = construct->add_subcommand("grid", "k x k integer grid");
    grid->add_option("--k", grid_k, "side length")->required();

    long long disk_n = 100;
    std::string disk_lattice_name = "integer";
    std::string disk_cx = "0", disk_cy = "0";
    auto* disk = construct->add_subcommand("disk", "n nearest lattice points to a center");
    disk->add_option("--n", disk_n, "point count")->required();
    disk->add_option("--lattice", disk_lattice_name, "integer | shifted");
    disk->add_option("--cx", disk_cx, "center x (rational)");
    disk->add_option("--cy", disk_cy, "center y (rational)");

    long long td_n = 100;
    double td_x = 0.0356067;
    auto* twodisk = construct->add_subcommand("two-disk", "concentric two-lattice disks");
    twodisk->add_option("--n", td_n, "total point count")->required();
    twodisk->add_option("--x", td_x, "size ratio m2/m1 in (0,1)")->required();

    // coefficient
    auto* coeff = app.add_subcommand("coefficient", "two-disk n^2 coefficient");
    double coeff_x = 0.0;
    std::vector<double> curve_args;
    bool optimize = false;
    auto* x_opt = coeff->add_option("--x", coeff_x, "evaluate c(x)");
    auto* curve_opt = coeff->add_option("--curve", curve_args, "x_min x_max steps: emit CSV")
                          ->expected(3);
    auto* optimize_opt = coeff->add_flag("--optimize", optimize, "find the maximizer");

    // search
    auto* search = app.add_subcommand("search", "extremal configuration search");
    search->require_subcommand(1);

    int ex_n = 5;
    int ex_window = 5;
    std::uint64_t ex_budget = 4'000'000'000ULL;
    bool ex_no_prune = false;
    auto* exhaustive = search->add_subcommand("exhaustive", "exact maximum over a grid window");
    exhaustive->add_option("--n", ex_n, "subset size (3..9)")->required();
    exhaustive->add_option("--window", ex_window, "window width (<= 7)");
    exhaustive->add_option("--budget", ex_budget, "node budget");
    exhaustive->add_flag("--no-prune", ex_no_prune, "disable pruning (reference mode)");

    std::string greedy_seed = "grid3";
    long long greedy_n = 12;
    auto* greedy = search->add_subcommand("greedy", "best one-point extensions from a seed");
    greedy->add_option("--seed", greedy_seed, "seed name or point file");
    greedy->add_option("--n", greedy_n, "target size")->required();

    std::vector<std::string> table1_seeds;
    auto* table1 = search->add_subcommand("table1", "greedy lower-bound table, n = 10..25");
    table1->add_option("--seed", table1_seeds, "seed names/files (default: built-ins)");

    // verify
    auto* verify = app.add_subcommand("verify", "randomized structural verification");
    verify->require_subcommand(1);
    long long verify_sets = 500;
    std::uint64_t verify_seed = 1;
    auto* lemmas = verify->add_subcommand("lemmas", "diameter-pair invariants on random sets");
    lemmas->add_option("--sets", verify_sets, "number of random sets");
    lemmas->add_option("--seed", verify_seed, "RNG seed");
    auto* bounds = verify->add_subcommand("bounds", "upper-bound table");
    auto* all = verify->add_subcommand("all", "lemmas + bounds");
    all->add_option("--sets", verify_sets, "number of random sets");
    all->add_option("--seed", verify_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*count) return run_count(count_opt);

        if (*grid) {
            emit_points(irt::square_grid(grid_k), with_count);
            return kExitOk;
        }
        if (*disk) {
            irt::LatticeKind kind;
            if (disk_lattice_name == "integer") kind = irt::LatticeKind::Integer;
            else if (disk_lattice_name == "shifted") kind = irt::LatticeKind::HalfShifted;
            else throw irt::ParseError("unknown lattice '" + disk_lattice_name + "'");
            irt::Point center{irt::parse_rational(disk_cx), irt::parse_rational(disk_cy)};
            emit_points(irt::disk_lattice(disk_n, kind, center), with_count);
            return kExitOk;
        }
        if (*twodisk) {
            auto [a, b] = irt::two_disk({td_n, td_x});
            std::cout << "# A: " << a.size() << " integer-lattice points\n";
            irt::write_point_file(std::cout, a);
            std::cout << "# B: " << b.size() << " shifted-lattice points\n";
            irt::write_point_file(std::cout, b);
            if (with_count)
                std::cout << "# count_irt = " << irt::count_irt(irt::set_union(a, b)) << "\n";
            return kExitOk;
        }

        if (*coeff) {
            const int chosen = (x_opt->count() > 0) + (curve_opt->count() > 0) +
                               (optimize_opt->count() > 0);
            if (chosen != 1)
                throw irt::ParseError("coefficient: use exactly one of --x, --curve, --optimize");
            std::cout << std::setprecision(12);
            if (x_opt->count() > 0) {
                irt::CoefficientResult r = irt::two_disk_coefficient(coeff_x);
                std::cout << "x = " << r.x << "\n"
                          << "branch = " << (r.branch == irt::CoeffBranch::Low ? "low" : "high")
                          << "\n"
                          << "c = " << r.value << "\n"
                          << "case_all_in_large = " << r.cases[0] << "\n"
                          << "case_all_in_small = " << r.cases[1] << "\n"
                          << "case_right_angle_in_small = " << r.cases[2] << "\n"
                          << "case_right_angle_in_large = " << r.cases[3] << "\n";
            } else if (curve_opt->count() > 0) {
                const int curve_steps = static_cast<int>(curve_args[2]);
                std::cout << "x,c,branch\n";
                for (const auto& s :
                     irt::coefficient_curve(curve_args[0], curve_args[1], curve_steps)) {
                    std::cout << s.x << "," << s.value << ","
                              << (s.branch == irt::CoeffBranch::Low ? "low" : "high") << "\n";
                }
            } else {
                irt::CoefficientOptimum best = irt::maximize_two_disk_coefficient();
                std::cout << "x_star = " << best.x_star << "\n"
                          << "c_star = " << best.c_star << "\n";
            }
            return kExitOk;
        }

        if (*exhaustive) {
            irt::ExhaustiveOptions options;
            options.node_budget = ex_budget;
            options.prune = !ex_no_prune;
            irt::SearchRecord rec = irt::exhaustive_max(ex_n, {ex_window}, options);
            std::cout << irt::to_json_line(rec) << "\n";
            return kExitOk;
        }
        if (*greedy) {
            for (const auto& rec : irt::greedy_build(seed_by_name(greedy_seed), greedy_n,
                                                     greedy_seed))
                std::cout << irt::to_json_line(rec) << "\n";
            return kExitOk;
        }
        if (*table1) {
            std::vector<irt::NamedSeed> seeds;
            if (table1_seeds.empty()) {
                seeds = irt::default_table1_seeds();
            } else {
                for (const std::string& name : table1_seeds)
                    seeds.push_back({name, seed_by_name(name)});
            }
            irt::Table1Result result = irt::table1_run(seeds, threads);
            for (const auto& rec : result.records) std::cout << irt::to_json_line(rec) << "\n";
            std::cout << irt::table1_csv(result.table);
            return kExitOk;
        }

        if (*lemmas) return run_verify_lemmas(verify_sets, verify_seed, threads);
        if (*bounds) return run_verify_bounds();
        if (*all) {
            const int bounds_rc = run_verify_bounds();
            const int lemmas_rc = run_verify_lemmas(verify_sets, verify_seed, threads);
            return lemmas_rc != kExitOk ? lemmas_rc : bounds_rc;
        }

        std::cerr << "no command selected\n";
        return kExitInput;
    } catch (const irt::VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const irt::BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const irt::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
