#include "interlacing/cli.hpp"

#include "interlacing/errors.hpp"
#include "interlacing/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>

namespace interlacing::cli {

namespace {

struct Options {
    RunConfig config;
    std::string mode = "all";
    std::string width = "1/1048576";
    std::string out;
    std::vector<std::string> inputs;
};

void add_common(CLI::App& cmd, Options& o) {
    cmd.add_option("--seed", o.config.seed, "Master seed")->capture_default_str();
    cmd.add_option("--trials", o.config.trials, "Number of generated instances")->capture_default_str();
    cmd.add_option("--size-min", o.config.size_min, "Smallest matrix size / degree")->capture_default_str();
    cmd.add_option("--size-max", o.config.size_max, "Largest matrix size / degree")->capture_default_str();
    cmd.add_option("--bound", o.config.entry_bound, "Integer entry/root bound")->capture_default_str();
    cmd.add_option("--alphas", o.config.alpha_count, "Random alphas added to the pencil grid")->capture_default_str();
    cmd.add_option("--mode", o.mode, "definition | pencil | identity | cauchy | all")->capture_default_str();
    cmd.add_option("--width", o.width, "Eigenvalue interval width (rational)")->capture_default_str();
}

void resolve(Options& o) {
    o.config.mode = parse_suite_mode(o.mode);
    o.config.width = parse_rational(o.width);
    validate(o.config);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
    file << text;
    if (!file) throw std::runtime_error("failed writing " + path.string());
}

std::filesystem::path numbered(const std::filesystem::path& base, std::size_t i, std::size_t count) {
    if (count == 1) return base;
    std::filesystem::path p = base;
    p.replace_filename(base.stem().string() + "_" + std::to_string(i) + base.extension().string());
    return p;
}

int cmd_gen(Options& o, std::ostream& out) {
    if (o.out.empty()) throw InvalidInput("gen requires --out");
    if (o.config.size_min < 1) throw InvalidInput("size-min must be >= 1");
    for (std::size_t i = 0; i < o.config.trials; ++i) {
        SplitMix64 rng(trial_seed(o.config.seed, i));
        const auto n = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(o.config.size_min),
                                                                static_cast<std::int64_t>(o.config.size_max)));
        const HermitianMatrix a = random_hermitian(rng, n, o.config.entry_bound);
        const auto path = numbered(o.out, i, o.config.trials);
        write_file(path, to_json(a).dump(2) + "\n");
        out << path.string() << "\n";
    }
    return kPass;
}

std::vector<Instance> load_inputs(const std::vector<std::string>& paths) {
    std::vector<Instance> inputs;
    for (const auto& path : paths) {
        std::ifstream file(path);
        if (!file) throw InvalidInput(path + ": cannot open");
        try {
            inputs.push_back(instance_from_json(Json::parse(file)));
        } catch (const Json::parse_error& e) {
            throw InvalidInput(path + ": " + e.what());
        } catch (const InvalidInput& e) {
            throw InvalidInput(path + ": " + e.what());
        }
    }
    return inputs;
}

int cmd_check(Options& o, std::ostream& out) {
    const std::vector<Instance> inputs = load_inputs(o.inputs);
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_trials(o.config, inputs);
    const double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    Json report = make_report(o.config, results, total_ms);
    if (!inputs.empty()) report["config"]["inputs"] = o.inputs;
    const std::string text = report.dump(2) + "\n";
    if (o.out.empty()) {
        out << text;
    } else {
        write_file(o.out, text);
    }
    return report["summary"]["failed"].get<std::size_t>() == 0 ? kPass : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact interlacing checks for polynomial pairs and Hermitian matrices", "interlacing"};
    app.require_subcommand(1);
    Options o;
    auto* gen = app.add_subcommand("gen", "Write random Hermitian matrix files");
    add_common(*gen, o);
    gen->add_option("--out", o.out, "Output path; several trials write <stem>_<i><ext>");
    auto* check = app.add_subcommand("check", "Run a property suite and write a JSON report");
    add_common(*check, o);
    check->add_option("--out", o.out, "Report path (stdout if omitted)");
    check->add_option("inputs", o.inputs, "Matrix or polynomial-pair JSON files");

    // CLI11 parses a reversed argv-style vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kPass : kInputError;
    }

    try {
        resolve(o);
        if (gen->parsed()) return cmd_gen(o, out);
        return cmd_check(o, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace interlacing::cli
