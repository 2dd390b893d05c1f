#pragma once

#include "evinf/belief.hpp"
#include "evinf/graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace evinf {

/// Per-indicator minimum and maximum over all edges.
struct NormalizationStats {
    std::vector<double> min;
    std::vector<double> max;

    static NormalizationStats from(const IndicatorMatrix& indicators);
};

/// Min-max BBA of one indicator value: m(I) = (w - min) / (max - min),
/// m(P) = (max - w) / (max - min). A constant indicator (max == min) carries
/// no evidence and yields the vacuous BBA. Throws OutOfRange when w is
/// outside [min, max].
MassFunction indicator_bba(double w, double min, double max);

struct ReliabilityConfig {
    enum class Mode { estimated, fixed };

    Mode mode = Mode::estimated;
    /// Used in fixed mode only.
    double alpha = 1.0;
    /// Exponent of alpha = (1 - C^lambda)^(1/lambda).
    double lambda = 5.0;
    /// Replace each edge's alphas by their per-indicator average over all
    /// edges before discounting.
    bool global_average = false;

    static ReliabilityConfig estimated(double lambda = 5.0) { return {Mode::estimated, 1.0, lambda, false}; }
    static ReliabilityConfig fixed(double alpha) { return {Mode::fixed, alpha, 5.0, false}; }

    /// Throws InvalidParameters.
    void validate() const;
};

/// alpha = (1 - C^lambda)^(1/lambda), a decreasing map of [0, 1] onto [1, 0].
double reliability_from_distance(double mean_distance, double lambda);

/// Mean Jousselme distance of each BBA to the others:
/// C_j = sum_i d(m_j, m_i) / (n - 1). Throws TooFewIndicators for n < 2.
std::vector<double> mean_distances(std::span<const MassFunction> bbas);

/// One reliability per BBA. In estimated mode each BBA is scored by its mean
/// distance to its peers; in fixed mode every BBA gets the configured alpha.
std::vector<Reliability> estimate_reliabilities(std::span<const MassFunction> bbas,
                                                const ReliabilityConfig& cfg);

struct EdgeBbaSet {
    std::vector<MassFunction> bbas;
    std::vector<Reliability> reliabilities;
};

struct EdgeInfluence {
    MassFunction fused;
    double inf = 0.0;
};

/// Discounts each BBA by its own reliability and combines them left to right
/// with Dempster's rule. Inf is the fused mass on {I}.
EdgeInfluence fuse_edge(const EdgeBbaSet& set);

/// Fusion output for every edge, indexed by EdgeId.
struct FusionTable {
    std::size_t indicator_count = 0;
    NormalizationStats stats;
    /// EdgeId-major, indicator_count entries per edge.
    std::vector<double> alphas;
    std::vector<EdgeInfluence> edges;

    std::span<const double> alphas_of(EdgeId e) const {
        return {alphas.data() + static_cast<std::size_t>(e) * indicator_count, indicator_count};
    }
    /// Inf(u, v) per EdgeId.
    std::vector<double> influences() const;
};

/// Runs BBA estimation, reliability estimation, discounting and fusion on
/// every edge. Per-edge failures are collected and rethrown as one
/// FusionError naming the offending edges.
FusionTable fuse_all(const SocialGraph& g, const IndicatorMatrix& indicators,
                     const ReliabilityConfig& cfg, unsigned threads = 1);

FusionTable fuse_all(const SocialGraph& g, const ReliabilityConfig& cfg, unsigned threads = 1);

/// Audit table: `src,dst,w_1..w_n,alpha_1..alpha_n,inf`, six decimals.
void write_fusion_dump(std::ostream& out, const SocialGraph& g, const IndicatorMatrix& indicators,
                       const FusionTable& table);

} // namespace evinf
