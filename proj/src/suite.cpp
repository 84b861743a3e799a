#include "interlacing/suite.hpp"

#include "interlacing/errors.hpp"
#include "interlacing/random.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

namespace interlacing {

namespace {

constexpr std::int64_t kAlphaBound = 100;

std::uint64_t mode_seed(const RunConfig& config, std::size_t index, SuiteMode mode) {
    return trial_seed(trial_seed(config.seed, index), static_cast<std::uint64_t>(mode));
}

std::size_t draw_size(SplitMix64& rng, const RunConfig& config) {
    return static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(config.size_min), static_cast<std::int64_t>(config.size_max)));
}

Json roots_json(const std::vector<Rational>& roots) {
    Json out = Json::array();
    for (const auto& r : roots) out.push_back(to_string(r));
    return out;
}

/// Definition check on a pair. With known roots the verdict must match the
/// direct chain inspection; otherwise any decided verdict passes.
void definition_check(const Instance& inst, TrialResult& result) {
    const InterlaceReport report = interlaces_exact(inst.f, inst.g);
    result.details["pair"] = pair_to_json(inst.f, inst.g);
    result.details["interlace"] = to_json(report);
    if (inst.roots_f && inst.roots_g) {
        const bool expected = chain_interlaces(*inst.roots_f, *inst.roots_g);
        result.details["roots_f"] = roots_json(*inst.roots_f);
        result.details["roots_g"] = roots_json(*inst.roots_g);
        result.details["expected"] = expected ? "Interlaces" : "DoesNotInterlace";
        const Verdict want = expected ? Verdict::Interlaces : Verdict::DoesNotInterlace;
        result.passed = report.verdict == want;
    } else if (inst.matrix) {
        result.passed = report.verdict == Verdict::Interlaces;
    } else {
        result.passed = true;
    }
}

void pencil_check(const Instance& inst, std::uint64_t alpha_seed, const RunConfig& config, TrialResult& result) {
    const CrosscheckReport report = hko_crosscheck(inst.f, inst.g, default_alphas(config.alpha_count, alpha_seed));
    result.details["pair"] = pair_to_json(inst.f, inst.g);
    result.details["crosscheck"] = to_json(report);
    result.passed = report.verdict != Consistency::Inconsistent;
}

void identity_check(const HermitianMatrix& a, const Rational& alpha, TrialResult& result) {
    const IdentityReport report = bordered_identity(a, alpha);
    result.details["matrix"] = to_json(a);
    result.details["identity"] = to_json(report);
    result.passed = report.exact_match;
}

void cauchy_checks(const HermitianMatrix& a, const RunConfig& config, TrialResult& result) {
    result.details["matrix"] = to_json(a);
    Json per_index = Json::array();
    for (std::size_t k = 0; k < a.size(); ++k) {
        per_index.push_back(to_json(cauchy_check(a, k, config.width)));
    }
    result.details["cauchy"] = std::move(per_index);
    result.passed = true;
}

Instance generated_pair(SplitMix64& rng, const RunConfig& config) {
    const std::size_t n = draw_size(rng, config);
    const bool swap = (rng.next() & 1U) != 0;
    RootPair roots = random_root_pair(rng, n, config.entry_bound, swap);
    Instance inst;
    inst.f = Polynomial::from_roots(roots.f);
    inst.g = Polynomial::from_roots(roots.g);
    inst.roots_f = std::move(roots.f);
    inst.roots_g = std::move(roots.g);
    return inst;
}

Instance matrix_instance(HermitianMatrix a) {
    Instance inst;
    if (a.size() >= 2) {
        inst.f = char_poly(a);
        inst.g = char_poly(principal_submatrix(a, a.size() - 1));
    }
    inst.matrix = std::move(a);
    return inst;
}

template <typename Body>
TrialResult timed(std::size_t index, SuiteMode mode, Body&& body) {
    TrialResult result;
    result.index = index;
    result.mode = mode;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(result);
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::exception& e) {
        result.passed = false;
        result.details["error"] = e.what();
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

struct Job {
    std::size_t index;
    SuiteMode mode;
};

std::vector<Job> plan(const RunConfig& config, const std::vector<Instance>& inputs) {
    std::vector<Job> jobs;
    if (inputs.empty()) {
        for (std::size_t i = 0; i < config.trials; ++i) {
            for (SuiteMode m : expand_modes(config.mode)) jobs.push_back({i, m});
        }
    } else {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            for (SuiteMode m : expand_modes(config.mode, &inputs[i])) jobs.push_back({i, m});
        }
    }
    return jobs;
}

TrialResult run_job(const RunConfig& config, const std::vector<Instance>& inputs, const Job& job) {
    return inputs.empty() ? run_generated_trial(config, job.mode, job.index)
                          : run_instance_trial(config, job.mode, job.index, inputs[job.index]);
}

}  // namespace

std::string to_string(SuiteMode m) {
    switch (m) {
        case SuiteMode::Definition: return "definition";
        case SuiteMode::Pencil: return "pencil";
        case SuiteMode::Identity: return "identity";
        case SuiteMode::Cauchy: return "cauchy";
        case SuiteMode::All: return "all";
    }
    return "?";
}

SuiteMode parse_suite_mode(const std::string& name) {
    for (SuiteMode m : {SuiteMode::Definition, SuiteMode::Pencil, SuiteMode::Identity, SuiteMode::Cauchy, SuiteMode::All}) {
        if (to_string(m) == name) return m;
    }
    throw InvalidInput("unknown mode '" + name + "'");
}

void validate(const RunConfig& config) {
    if (config.trials < 1) throw InvalidInput("trials must be >= 1");
    if (config.entry_bound < 1) throw InvalidInput("bound must be >= 1");
    if (config.alpha_count < 1) throw InvalidInput("alphas must be >= 1");
    if (config.size_min > config.size_max) throw InvalidInput("size-min must not exceed size-max");
    const bool needs_two = config.mode == SuiteMode::Identity || config.mode == SuiteMode::Cauchy ||
                           config.mode == SuiteMode::All;
    if (config.size_min < (needs_two ? 2U : 1U)) {
        throw InvalidInput(std::string("size-min must be >= ") + (needs_two ? "2" : "1") + " for mode " +
                           to_string(config.mode));
    }
    if (sgn(config.width) <= 0) throw InvalidInput("width must be positive");
}

Json to_json(const RunConfig& config) {
    return {{"seed", config.seed},
            {"trials", config.trials},
            {"size_min", config.size_min},
            {"size_max", config.size_max},
            {"entry_bound", config.entry_bound},
            {"alpha_count", config.alpha_count},
            {"mode", to_string(config.mode)},
            {"width", to_string(config.width)}};
}

Instance instance_from_json(const Json& j) {
    if (j.is_object() && j.contains("entries")) return matrix_instance(matrix_from_json(j));
    if (j.is_object() && (j.contains("f") || j.contains("g"))) {
        auto [f, g] = pair_from_json(j);
        if (f.is_zero() || g.is_zero()) throw InvalidInput("pair: f and g must be nonzero");
        Instance inst;
        inst.f = std::move(f);
        inst.g = std::move(g);
        return inst;
    }
    throw InvalidInput("input is neither a matrix {\"n\", \"entries\"} nor a pair {\"f\", \"g\"}");
}

RootPair random_root_pair(SplitMix64& rng, std::size_t n, std::int64_t bound, bool swap) {
    std::vector<Rational> chain;
    for (std::size_t i = 0; i + 1 < 2 * n; ++i) chain.emplace_back(static_cast<long>(rng.uniform_int(-bound, bound)));
    std::sort(chain.begin(), chain.end());
    std::vector<char> owner_f(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) owner_f[i] = (i % 2 == 0);

    RootPair out;
    if (swap) {
        std::vector<std::size_t> rising;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            if (chain[i] < chain[i + 1]) rising.push_back(i);
        }
        if (!rising.empty()) {
            const auto pick = rising[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(rising.size()) - 1))];
            std::swap(owner_f[pick], owner_f[pick + 1]);
            out.swapped = true;
        }
    }
    for (std::size_t i = 0; i < chain.size(); ++i) (owner_f[i] ? out.f : out.g).push_back(chain[i]);
    return out;
}

bool chain_interlaces(std::vector<Rational> f, std::vector<Rational> g) {
    if (f.size() != g.size() + 1) return false;
    std::sort(f.begin(), f.end());
    std::sort(g.begin(), g.end());
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (!(f[k] <= g[k] && g[k] <= f[k + 1])) return false;
    }
    return true;
}

std::vector<SuiteMode> expand_modes(SuiteMode mode, const Instance* instance) {
    if (mode != SuiteMode::All) return {mode};
    if (instance != nullptr && !instance->matrix) return {SuiteMode::Definition, SuiteMode::Pencil};
    return {SuiteMode::Definition, SuiteMode::Pencil, SuiteMode::Identity, SuiteMode::Cauchy};
}

TrialResult run_generated_trial(const RunConfig& config, SuiteMode mode, std::size_t index) {
    return timed(index, mode, [&](TrialResult& result) {
        SplitMix64 rng(mode_seed(config, index, mode));
        switch (mode) {
            case SuiteMode::Definition: definition_check(generated_pair(rng, config), result); break;
            case SuiteMode::Pencil: {
                const Instance inst = generated_pair(rng, config);
                pencil_check(inst, rng.next(), config, result);
                break;
            }
            case SuiteMode::Identity: {
                const HermitianMatrix a = random_hermitian(rng, draw_size(rng, config), config.entry_bound);
                identity_check(a, rng.rational(kAlphaBound), result);
                break;
            }
            case SuiteMode::Cauchy:
                cauchy_checks(random_hermitian(rng, draw_size(rng, config), config.entry_bound), config, result);
                break;
            case SuiteMode::All: throw InvalidInput("run_generated_trial needs a concrete mode");
        }
    });
}

TrialResult run_instance_trial(const RunConfig& config, SuiteMode mode, std::size_t index, const Instance& inst) {
    const bool is_matrix = inst.matrix.has_value();
    if ((mode == SuiteMode::Identity || mode == SuiteMode::Cauchy) && !is_matrix) {
        throw InvalidInput("input " + std::to_string(index) + ": mode " + to_string(mode) + " needs a matrix input");
    }
    if (is_matrix && inst.matrix->size() < 2) {
        throw InvalidInput("input " + std::to_string(index) + ": matrix must have n >= 2");
    }
    if (!is_matrix && inst.f.degree() != inst.g.degree() + 1) {
        throw InvalidInput("input " + std::to_string(index) + ": pair needs deg f = deg g + 1");
    }
    return timed(index, mode, [&](TrialResult& result) {
        SplitMix64 rng(mode_seed(config, index, mode));
        switch (mode) {
            case SuiteMode::Definition: definition_check(inst, result); break;
            case SuiteMode::Pencil: pencil_check(inst, rng.next(), config, result); break;
            case SuiteMode::Identity: identity_check(*inst.matrix, rng.rational(kAlphaBound), result); break;
            case SuiteMode::Cauchy: cauchy_checks(*inst.matrix, config, result); break;
            case SuiteMode::All: throw InvalidInput("run_instance_trial needs a concrete mode");
        }
    });
}

std::vector<TrialResult> run_trials(const RunConfig& config, const std::vector<Instance>& inputs) {
    const std::vector<Job> jobs = plan(config, inputs);
    std::vector<TrialResult> results(jobs.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        try {
            results[idx] = run_job(config, inputs, jobs[idx]);
        } catch (...) {
#pragma omp critical(interlacing_trial_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

std::vector<TrialResult> run_trials_serial(const RunConfig& config, const std::vector<Instance>& inputs) {
    std::vector<TrialResult> results;
    for (const Job& job : plan(config, inputs)) results.push_back(run_job(config, inputs, job));
    return results;
}

Json make_report(const RunConfig& config, const std::vector<TrialResult>& results, double total_ms) {
    Json trials = Json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.passed) ++passed;
        trials.push_back({{"index", r.index},
                          {"mode", to_string(r.mode)},
                          {"passed", r.passed},
                          {"details", r.details},
                          {"timing", {{"elapsed_ms", r.elapsed_ms}}}});
    }
    return {{"artifact", "interlacing"},
            {"version", kArtifactVersion},
            {"config", to_json(config)},
            {"results", std::move(trials)},
            {"summary", {{"total", results.size()}, {"passed", passed}, {"failed", results.size() - passed}}},
            {"timing", {{"total_ms", total_ms}}}};
}

Json strip_timing(Json report) {
    if (report.is_object()) {
        report.erase("timing");
    }
    if (report.is_structured()) {
        for (auto& value : report) value = strip_timing(std::move(value));
    }
    return report;
}

}  // namespace interlacing
