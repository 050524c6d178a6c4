#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "bks/rootsys.hpp"
#include "bks/weyl.hpp"

/// Randomized and exhaustive verification suites. Every randomized check draws
/// trial t of check c from its own generator seeded by (seed, c, t), so a failing
/// instance can be replayed alone.
namespace bks::verify {

struct CheckRecord {
    std::string suite;
    std::string name;
    bool pass = true;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::size_t instances = 0;
    /// One line per failing instance, enough to replay it.
    std::vector<std::string> failures;

    void record(double deviation, const std::string& replay);
    void record_exact(bool ok, const std::string& replay);
};

struct SuiteReport {
    std::vector<CheckRecord> checks;
    bool pass() const;
};

struct Options {
    std::uint64_t seed = 42;
    int trials = 200;
    std::filesystem::path cache_dir;  // empty: no Weyl cache
};

/// Generator for trial `trial` of the check named `check`.
std::mt19937_64 trial_rng(std::uint64_t seed, const std::string& check, std::uint64_t trial);

/// Random regular xi with coordinates p/q, |p| <= 9, 1 <= q <= 7.
Coords random_regular(const RootSystem& rs, std::mt19937_64& rng);

/// Types with |W| <= 1152 used by the exhaustive sign check.
std::vector<std::pair<char, int>> small_types();

// Density calculus, tolerance 1e-9.
CheckRecord check_seq_iso_independence(const Options& o);
CheckRecord check_scaling(const Options& o);
CheckRecord check_direct_sum(const Options& o);
CheckRecord check_phi_routes(const Options& o);
CheckRecord check_seq_iso_exact(const Options& o);

// Exact sign identity for `per_type` random regular xi in every small type.
CheckRecord check_signs(const Options& o, int per_type = 5);

// Oracles.
CheckRecord check_weyl_orders(const Options& o, const std::vector<std::pair<char, int>>& types);
CheckRecord check_pfaffians(const Options& o, int per_type = 20, double tolerance = 1e-12);
CheckRecord check_admissible_counts(const Options& o);
CheckRecord check_typeA(const Options& o, double tolerance = 1e-10);
CheckRecord check_a1_closed_form(const Options& o, double tolerance = 1e-12);
CheckRecord check_weyl_sum_invariance(const Options& o, char type, int rank, int k, double tolerance = 1e-9);
CheckRecord check_pairing_consistency(const Options& o, double tolerance = 1e-12);

/// "densities", "signs", "oracles" or "all". Throws ValidationError otherwise
/// or when trials < 1.
SuiteReport run_suite(const std::string& suite, const Options& o);

}  // namespace bks::verify
