#pragma once

#include "interlacing/hermitian.hpp"
#include "interlacing/json_io.hpp"
#include "interlacing/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace interlacing {

enum class SuiteMode { Definition, Pencil, Identity, Cauchy, All };

std::string to_string(SuiteMode m);
/// Throws InvalidInput for unknown names.
SuiteMode parse_suite_mode(const std::string& name);

struct RunConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 20;
    std::size_t size_min = 2;
    std::size_t size_max = 6;
    std::int64_t entry_bound = 5;
    std::size_t alpha_count = 64;
    SuiteMode mode = SuiteMode::All;
    Rational width = default_eigen_width();
};

/// Throws InvalidInput describing the first violated constraint.
void validate(const RunConfig& config);
Json to_json(const RunConfig& config);

/// One instance fed to the checks: either a Hermitian matrix or a
/// polynomial pair (f, g), with deg f = deg g + 1 expected.
struct Instance {
    std::optional<HermitianMatrix> matrix;
    Polynomial f;
    Polynomial g;
    /// Exact roots, present only for generated pairs; lets the definition
    /// check compare against a direct chain inspection.
    std::optional<std::vector<Rational>> roots_f;
    std::optional<std::vector<Rational>> roots_g;
};

/// Parses a matrix file or a pair file (detected by its keys).
Instance instance_from_json(const Json& j);

/// Roots for a random weakly interlacing pair: 2n - 1 integers in
/// [-bound, bound] sorted and dealt alternately to f and g. When `swap` is
/// set, one adjacent strictly increasing pair in the merged chain trades
/// owners, which breaks interlacing.
struct RootPair {
    std::vector<Rational> f;
    std::vector<Rational> g;
    bool swapped = false;
};
RootPair random_root_pair(SplitMix64& rng, std::size_t n, std::int64_t bound, bool swap);

/// Direct weak-chain inspection on sorted exact roots.
bool chain_interlaces(std::vector<Rational> f, std::vector<Rational> g);

struct TrialResult {
    std::size_t index = 0;
    SuiteMode mode = SuiteMode::Definition;
    bool passed = false;
    Json details;
    double elapsed_ms = 0.0;
};

/// Runs one check of `mode` (not All) on a generated instance.
TrialResult run_generated_trial(const RunConfig& config, SuiteMode mode, std::size_t index);

/// Runs one check of `mode` (not All) on a supplied instance. Throws
/// InvalidInput if the instance kind does not fit the mode.
TrialResult run_instance_trial(const RunConfig& config, SuiteMode mode, std::size_t index, const Instance& instance);

/// Modes a check actually runs for `mode`, in report order.
std::vector<SuiteMode> expand_modes(SuiteMode mode, const Instance* instance = nullptr);

/// All trials of a run, OpenMP-parallel over trials. Results are ordered by
/// (trial index, mode) regardless of scheduling.
std::vector<TrialResult> run_trials(const RunConfig& config, const std::vector<Instance>& inputs = {});

/// Single-threaded reference for run_trials.
std::vector<TrialResult> run_trials_serial(const RunConfig& config, const std::vector<Instance>& inputs = {});

/// Full report: config, version, per-trial results, summary, timing.
Json make_report(const RunConfig& config, const std::vector<TrialResult>& results, double total_ms);

/// Copy of a report with every "timing" member removed, recursively.
Json strip_timing(Json report);

inline constexpr const char* kArtifactVersion = "1.0.0";

}  // namespace interlacing
