#include "evinf/evaluate.hpp"

#include "evinf/errors.hpp"

#include <charconv>
#include <ostream>
#include <system_error>

namespace evinf {

QualityCurve quality_curve(const SeedSelection& selection, std::span<const UserActivity> activity) {
    QualityCurve curve;
    UserActivity total;
    for (const auto& seed : selection.seeds) {
        const UserActivity a = seed.user < activity.size() ? activity[seed.user] : UserActivity{};
        total.followers += a.followers;
        total.mentions_received += a.mentions_received;
        total.retweets_received += a.retweets_received;
        total.tweets += a.tweets;
        curve.follows.push_back(total.followers);
        curve.mentions.push_back(total.mentions_received);
        curve.retweets.push_back(total.retweets_received);
        curve.tweets.push_back(total.tweets);
    }
    return curve;
}

NamedConfig parse_config(std::string_view token, double lambda) {
    if (token == "estimated") {
        return {std::string(token), ReliabilityConfig::estimated(lambda)};
    }
    constexpr std::string_view prefix = "fixed:";
    if (token.substr(0, prefix.size()) == prefix) {
        const auto value = token.substr(prefix.size());
        double alpha = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), alpha);
        if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
            throw InvalidParameters("bad alpha in configuration '" + std::string(token) + "'");
        }
        auto cfg = ReliabilityConfig::fixed(alpha);
        cfg.lambda = lambda;
        cfg.validate();
        return {std::string(token), cfg};
    }
    throw InvalidParameters("unknown configuration '" + std::string(token) +
                            "', expected 'estimated' or 'fixed:<alpha>'");
}

std::vector<NamedConfig> default_sweep(double lambda) {
    return {parse_config("fixed:0", lambda), parse_config("fixed:0.2", lambda), parse_config("estimated", lambda)};
}

SeedSelection run_pipeline(const Dataset& ds, const IndicatorMatrix& indicators, const ReliabilityConfig& cfg,
                           std::size_t k, const PipelineOptions& options) {
    const FusionTable table = fuse_all(ds.graph, indicators, cfg, options.threads);
    const InfluenceField field(ds.graph, table.influences(), options.model);
    CelfOptions celf;
    celf.threads = options.threads;
    return select_celf(field, k, celf);
}

ComparisonReport compare_configs(const Dataset& ds, std::span<const NamedConfig> configs, std::size_t k,
                                 const PipelineOptions& options) {
    if (k == 0) {
        throw InvalidK("k must be at least 1");
    }
    if (configs.empty()) {
        throw InvalidParameters("no configurations to compare");
    }
    const IndicatorMatrix indicators = raw_indicators(ds.graph, options.neighborhood);
    ComparisonReport report;
    report.k = k;
    for (const auto& named : configs) {
        try {
            auto selection = run_pipeline(ds, indicators, named.config, k, options);
            auto curve = quality_curve(selection, ds.activity);
            report.runs.push_back({named, std::move(selection), std::move(curve)});
        } catch (const Error& e) {
            throw Error("configuration '" + named.name + "': " + e.what());
        }
    }
    return report;
}

void write_report(std::ostream& out, const SocialGraph& g, const ComparisonReport& report) {
    out << "config,rank,user,follows_acc,mentions_acc,retweets_acc,tweets_acc\n";
    for (const auto& run : report.runs) {
        for (std::size_t r = 0; r < run.selection.seeds.size(); ++r) {
            out << run.config.name << ',' << (r + 1) << ',' << g.name(run.selection.seeds[r].user) << ','
                << run.curve.follows[r] << ',' << run.curve.mentions[r] << ',' << run.curve.retweets[r] << ','
                << run.curve.tweets[r] << '\n';
        }
    }
}

} // namespace evinf
