#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hilbpieri/classes.hpp"

namespace hilb::cli {

enum class Command { Product, Matrix, Conjecture, Verify };
enum class Format { Json, Text, Latex };

enum ExitCode : int {
    Success = 0,
    EngineFailure = 1,
    Usage = 2,
    Counterexample = 3,
};

struct JobConfig {
    Command command = Command::Verify;
    std::optional<int> n;
    std::string a, b, c;  ///< comma-separated partitions, product only
    int max_weight = 8;   ///< conjecture only
    Format format = Format::Json;
    std::filesystem::path out_dir = ".";
    bool check_invariants = false;
    bool force = false;  ///< recompute even when a cache file exists
    int threads = 0;
};

/// HILB_PIERI_CACHE, if set, overrides cfg.out_dir.
std::filesystem::path cache_dir(const JobConfig& cfg);
std::filesystem::path matrix_cache_path(const JobConfig& cfg, int n);

int run_product(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int run_matrix(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int run_conjecture(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int run(const JobConfig& cfg, std::ostream& out, std::ostream& err);

/// One golden comparison. check() returns an empty string on success and a
/// diff description otherwise.
struct GoldenCase {
    std::string name;
    std::string rule;
    std::function<std::string(bool check_invariants)> check;
};

std::vector<GoldenCase> golden_cases();

/// Expected row for H . sigma_(0,0,(3,2,1)); exposed so callers can perturb it.
std::vector<TripleCoef> worked_example_row();
/// Golden case list built around a caller-supplied expected worked-example row.
std::vector<GoldenCase> golden_cases(std::vector<TripleCoef> worked_example);

/// Runs the cases plus (optionally) the conservation sweep; prints one line
/// per case and returns Success or EngineFailure.
int run_golden_suite(const std::vector<GoldenCase>& cases, bool check_invariants, int sweep_max_n,
                     std::ostream& out);

}  // namespace hilb::cli
