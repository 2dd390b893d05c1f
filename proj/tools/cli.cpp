#include "cli.hpp"

#include "evinf/evinf.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace evinf::cli {

namespace {

struct InputOptions {
    std::string edges;
    std::string mentions;
    std::string retweets;
    std::string activity;

    DatasetPaths paths() const { return {edges, mentions, retweets, activity}; }
};

struct ModelOptions {
    double lambda = 5.0;
    std::optional<double> alpha;
    bool global_alpha = false;
    std::string spread = "clamped";
    std::string neighborhood = "undirected";
    unsigned threads = 0;

    ReliabilityConfig reliability() const {
        ReliabilityConfig cfg = alpha ? ReliabilityConfig::fixed(*alpha) : ReliabilityConfig::estimated(lambda);
        cfg.lambda = lambda;
        cfg.global_average = global_alpha;
        cfg.validate();
        return cfg;
    }

    PipelineOptions pipeline() const {
        PipelineOptions p;
        p.model = spread == "literal" ? SpreadModel::literal : SpreadModel::clamped;
        p.neighborhood = neighborhood == "out" ? Neighborhood::out : Neighborhood::undirected;
        p.threads = threads;
        return p;
    }
};

void add_inputs(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--edges", in.edges, "Follow links: src,dst (src influences dst)")->required();
    cmd->add_option("--mentions", in.mentions, "Mentions: mentioner,mentioned,count");
    cmd->add_option("--retweets", in.retweets, "Retweets: retweeter,original_author,count");
    cmd->add_option("--activity", in.activity, "Per-user activity: user,tweets,followers");
}

void add_model(CLI::App* cmd, ModelOptions& m) {
    cmd->add_option("--lambda", m.lambda, "Reliability exponent (> 0)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", m.threads, "Worker threads (0 = all cores)")->capture_default_str();
    cmd->add_option("--spread", m.spread, "Set influence aggregation")
        ->capture_default_str()
        ->check(CLI::IsMember({"clamped", "literal"}));
    cmd->add_option("--neighborhood", m.neighborhood, "Neighborhood used for common neighbors")
        ->capture_default_str()
        ->check(CLI::IsMember({"undirected", "out"}));
    cmd->add_flag("--global-alpha", m.global_alpha, "Share per-indicator average reliabilities across edges");
}

void add_alpha(CLI::App* cmd, ModelOptions& m) {
    cmd->add_option("--alpha", m.alpha, "Fixed reliability in [0, 1]; omit to estimate it")
        ->check(CLI::Range(0.0, 1.0));
}

/// Buffers the whole output so that nothing is written on failure.
void emit(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot write output file '" + path + "'");
    }
    file << text;
    if (!file) {
        throw Error("write failure on output file '" + path + "'");
    }
}

std::vector<std::string> split_sweep(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = token.find_last_not_of(" \t");
        out.push_back(token.substr(first, last - first + 1));
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Evidential influence scoring and seed selection on social graphs", "evinf"};
    app.set_config("--config-file", "", "TOML/INI file with option defaults (flags take precedence)");
    app.require_subcommand(1);

    InputOptions inputs;
    ModelOptions model;
    std::string out_path;
    std::size_t k = 50;

    auto* generate = app.add_subcommand("generate", "Write a synthetic dataset (four CSV files)");
    SyntheticParams synth;
    generate->add_option("--out", out_path, "Output directory")->required();
    generate->add_option("--users", synth.users, "Number of users")->capture_default_str();
    generate->add_option("--follows", synth.follows, "Number of follow links")->capture_default_str();
    generate->add_option("--intensity", synth.activity_intensity, "Activity scale factor")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    generate->add_option("--seed", synth.seed, "Random seed")->capture_default_str();

    auto* select = app.add_subcommand("select", "Select the top-k seed set");
    add_inputs(select, inputs);
    add_model(select, model);
    add_alpha(select, model);
    select->add_option("--k", k, "Number of seeds")->capture_default_str()->check(CLI::PositiveNumber);
    select->add_option("--out", out_path, "Seeds CSV (default: stdout)");

    auto* evaluate = app.add_subcommand("evaluate", "Compare reliability configurations on quality curves");
    std::string sweep = "fixed:0,fixed:0.2,estimated";
    add_inputs(evaluate, inputs);
    add_model(evaluate, model);
    evaluate->add_option("--sweep", sweep, "Comma-separated configurations: estimated | fixed:<alpha>")
        ->capture_default_str();
    evaluate->add_option("--k", k, "Number of seeds")->capture_default_str()->check(CLI::PositiveNumber);
    evaluate->add_option("--out", out_path, "Report CSV (default: stdout)");

    auto* dump = app.add_subcommand("dump-edges", "Write per-edge indicators, reliabilities and influence");
    add_inputs(dump, inputs);
    add_model(dump, model);
    add_alpha(dump, model);
    dump->add_option("--out", out_path, "Dump CSV (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (generate->parsed()) {
            const auto ds = generate_synthetic(synth);
            std::filesystem::create_directories(out_path);
            save_dataset(ds, DatasetPaths::in_directory(out_path));
            err << "wrote " << ds.graph.user_count() << " users and " << ds.graph.edge_count() << " edges to "
                << out_path << '\n';
            return kOk;
        }

        const auto reliability_cfg = [&] { return model.reliability(); };
        const PipelineOptions pipeline = model.pipeline();

        if (select->parsed()) {
            const auto cfg = reliability_cfg();
            const auto ds = load_dataset(inputs.paths());
            const auto indicators = raw_indicators(ds.graph, pipeline.neighborhood);
            const auto selection = run_pipeline(ds, indicators, cfg, k, pipeline);
            std::ostringstream text;
            write_selection(text, ds.graph, selection);
            emit(out_path, text.str(), out);
            return kOk;
        }

        if (evaluate->parsed()) {
            std::vector<NamedConfig> configs;
            for (const auto& token : split_sweep(sweep)) {
                configs.push_back(parse_config(token, model.lambda));
                configs.back().config.global_average = model.global_alpha;
            }
            if (configs.empty()) {
                throw InvalidParameters("--sweep: no configurations given");
            }
            const auto ds = load_dataset(inputs.paths());
            const auto report = compare_configs(ds, configs, k, pipeline);
            std::ostringstream text;
            write_report(text, ds.graph, report);
            emit(out_path, text.str(), out);
            return kOk;
        }

        if (dump->parsed()) {
            const auto cfg = reliability_cfg();
            const auto ds = load_dataset(inputs.paths());
            const auto indicators = raw_indicators(ds.graph, pipeline.neighborhood);
            const auto table = fuse_all(ds.graph, indicators, cfg, pipeline.threads);
            std::ostringstream text;
            write_fusion_dump(text, ds.graph, indicators, table);
            emit(out_path, text.str(), out);
            return kOk;
        }
    } catch (const Error& e) {
        err << "evinf: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "evinf: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "evinf: internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsageError;
}

} // namespace evinf::cli
