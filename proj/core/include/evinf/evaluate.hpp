#pragma once

#include "evinf/fusion.hpp"
#include "evinf/graph.hpp"
#include "evinf/maximize.hpp"
#include "evinf/spread.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evinf {

/// Running totals of the four quality criteria along a seed ranking.
struct QualityCurve {
    std::vector<std::uint64_t> follows;
    std::vector<std::uint64_t> mentions;
    std::vector<std::uint64_t> retweets;
    std::vector<std::uint64_t> tweets;

    std::size_t size() const noexcept { return follows.size(); }
    bool operator==(const QualityCurve&) const = default;
};

/// Prefix sums of follower, mention, retweet and tweet counts of the seeds in
/// rank order. Users without an activity record count as zero.
QualityCurve quality_curve(const SeedSelection& selection, std::span<const UserActivity> activity);

struct NamedConfig {
    std::string name;
    ReliabilityConfig config;
};

/// Parses `estimated` or `fixed:<alpha>`. Throws InvalidParameters.
NamedConfig parse_config(std::string_view token, double lambda = 5.0);

/// fixed:0, fixed:0.2 and estimated.
std::vector<NamedConfig> default_sweep(double lambda = 5.0);

struct PipelineOptions {
    SpreadModel model = SpreadModel::clamped;
    Neighborhood neighborhood = Neighborhood::undirected;
    unsigned threads = 1;
};

/// Fusion, spread and CELF selection on one dataset.
SeedSelection run_pipeline(const Dataset& ds, const IndicatorMatrix& indicators,
                           const ReliabilityConfig& cfg, std::size_t k, const PipelineOptions& options = {});

struct ConfigRun {
    NamedConfig config;
    SeedSelection selection;
    QualityCurve curve;
};

struct ComparisonReport {
    std::size_t k = 0;
    std::vector<ConfigRun> runs;
};

/// Runs the pipeline once per configuration on the same dataset. Errors are
/// rethrown with the configuration name prepended. Throws InvalidK for k = 0
/// and InvalidParameters for an empty sweep.
ComparisonReport compare_configs(const Dataset& ds, std::span<const NamedConfig> configs, std::size_t k,
                                 const PipelineOptions& options = {});

/// `config,rank,user,follows_acc,mentions_acc,retweets_acc,tweets_acc`.
void write_report(std::ostream& out, const SocialGraph& g, const ComparisonReport& report);

} // namespace evinf
