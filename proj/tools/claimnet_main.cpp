// claimnet: corpus-to-claims analysis pipeline.
//
// Subcommands run one pipeline stage each (from cached upstream outputs);
// `run` executes the whole pipeline. Exit codes: 0 ok, 1 validation
// failure, 2 stage failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "claimnet/pipeline.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir;
    long long seed = -1;
    long long restarts = -1;
    int workers = -1;
    bool raw = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "run configuration file");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--seed", opts.seed, "RNG seed for block inference");
    cmd->add_option("--restarts", opts.restarts, "block inference restarts");
    cmd->add_option("--workers", opts.workers, "worker threads (0 = all cores)");
    cmd->add_flag("--raw", opts.raw, "emit fig2 from raw counts, skipping correction");
}

claimnet::RunConfig make_config(const CommonOptions& opts) {
    claimnet::RunConfig cfg = opts.config_path.empty()
                                  ? claimnet::RunConfig::defaults()
                                  : claimnet::RunConfig::load(opts.config_path);
    if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
    if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);
    if (opts.restarts >= 0) cfg.restarts = opts.restarts;
    if (opts.workers >= 0) cfg.workers = opts.workers;
    if (opts.raw) cfg.raw = true;
    return cfg;
}

int run_with(const CommonOptions& opts, const std::vector<std::string>& stages) {
    try {
        claimnet::run_stages(make_config(opts), stages);
        return 0;
    } catch (const claimnet::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const claimnet::StageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"corpus-to-claims analysis pipeline"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string stage_filter;

    CLI::App* run = app.add_subcommand("run", "run the full pipeline");
    add_common(run, opts);
    run->add_option("--stage", stage_filter, "run a single stage");

    std::string check_path;
    CLI::App* check = app.add_subcommand("parse-check", "validate a hyperedge file");
    check->add_option("file", check_path, "hyperedge file")->required();

    for (const std::string& stage : claimnet::all_stage_names()) {
        CLI::App* cmd = app.add_subcommand(stage, "run the " + stage + " stage");
        add_common(cmd, opts);
    }

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) {
        try {
            const claimnet::ParseCheckResult result = claimnet::parse_check(check_path);
            for (const claimnet::LineError& e : result.errors) {
                std::cerr << check_path << ":" << e.line_number << ": " << e.message << "\n";
            }
            std::cout << result.records << " records, " << result.errors.size() << " errors\n";
            return result.errors.empty() ? 0 : 1;
        } catch (const std::exception& e) {
            std::cerr << "validation error: " << e.what() << "\n";
            return 1;
        }
    }

    if (run->parsed()) {
        std::vector<std::string> stages;
        if (!stage_filter.empty()) stages.push_back(stage_filter);
        return run_with(opts, stages);
    }
    for (const std::string& stage : claimnet::all_stage_names()) {
        if (app.get_subcommand(stage)->parsed()) return run_with(opts, {stage});
    }
    return 1;
}
