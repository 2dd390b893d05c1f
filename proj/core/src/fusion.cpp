#include "evinf/fusion.hpp"

#include "evinf/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

namespace evinf {

NormalizationStats NormalizationStats::from(const IndicatorMatrix& indicators) {
    const std::size_t n = indicators.indicator_count();
    NormalizationStats stats;
    stats.min.assign(n, std::numeric_limits<double>::infinity());
    stats.max.assign(n, -std::numeric_limits<double>::infinity());
    for (EdgeId e = 0; e < indicators.edge_count(); ++e) {
        const auto row = indicators.row(e);
        for (std::size_t j = 0; j < n; ++j) {
            stats.min[j] = std::min(stats.min[j], row[j]);
            stats.max[j] = std::max(stats.max[j], row[j]);
        }
    }
    if (indicators.edge_count() == 0) {
        stats.min.assign(n, 0.0);
        stats.max.assign(n, 0.0);
    }
    return stats;
}

MassFunction indicator_bba(double w, double min, double max) {
    if (!(w >= min && w <= max)) {
        std::ostringstream msg;
        msg << "indicator value " << w << " outside [" << min << ", " << max << "]";
        throw OutOfRange(msg.str());
    }
    if (max == min) {
        return MassFunction::vacuous();
    }
    const double span = max - min;
    return MassFunction::from_masses((w - min) / span, (max - w) / span, 0.0);
}

void ReliabilityConfig::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidParameters("lambda must be a positive number, got " + std::to_string(lambda));
    }
    if (mode == Mode::fixed && !(alpha >= 0.0 && alpha <= 1.0)) {
        throw InvalidParameters("fixed alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
}

double reliability_from_distance(double mean_distance, double lambda) {
    const double c = std::clamp(mean_distance, 0.0, 1.0);
    return std::clamp(std::pow(1.0 - std::pow(c, lambda), 1.0 / lambda), 0.0, 1.0);
}

std::vector<double> mean_distances(std::span<const MassFunction> bbas) {
    const std::size_t n = bbas.size();
    if (n < 2) {
        throw TooFewIndicators("reliability estimation needs at least two indicators, got " +
                               std::to_string(n));
    }
    std::vector<double> sums(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j + 1; i < n; ++i) {
            const double d = jousselme_distance(bbas[j], bbas[i]);
            sums[j] += d;
            sums[i] += d;
        }
    }
    for (double& s : sums) {
        s /= static_cast<double>(n - 1);
    }
    return sums;
}

std::vector<Reliability> estimate_reliabilities(std::span<const MassFunction> bbas,
                                                const ReliabilityConfig& cfg) {
    cfg.validate();
    std::vector<Reliability> out;
    out.reserve(bbas.size());
    if (cfg.mode == ReliabilityConfig::Mode::fixed) {
        out.assign(bbas.size(), Reliability(cfg.alpha));
        return out;
    }
    for (double c : mean_distances(bbas)) {
        out.emplace_back(reliability_from_distance(c, cfg.lambda));
    }
    return out;
}

EdgeInfluence fuse_edge(const EdgeBbaSet& set) {
    if (set.bbas.size() != set.reliabilities.size()) {
        throw InvalidParameters("one reliability per BBA required");
    }
    MassFunction fused = MassFunction::vacuous();
    for (std::size_t j = 0; j < set.bbas.size(); ++j) {
        fused = combine_dempster(fused, discount(set.bbas[j], set.reliabilities[j]));
    }
    return {fused, fused.influence()};
}

std::vector<double> FusionTable::influences() const {
    std::vector<double> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        out.push_back(e.inf);
    }
    return out;
}

FusionTable fuse_all(const SocialGraph& g, const IndicatorMatrix& indicators,
                     const ReliabilityConfig& cfg, unsigned threads) {
    cfg.validate();
    if (indicators.edge_count() != g.edge_count()) {
        throw InvalidParameters("indicator table does not match the edge set");
    }
    const std::size_t n = indicators.indicator_count();
    const std::size_t m = g.edge_count();

    FusionTable table;
    table.indicator_count = n;
    table.stats = NormalizationStats::from(indicators);
    table.alphas.assign(m * n, 0.0);
    table.edges.resize(m);

    auto bbas_of = [&](EdgeId e) {
        std::vector<MassFunction> bbas;
        bbas.reserve(n);
        const auto row = indicators.row(e);
        for (std::size_t j = 0; j < n; ++j) {
            bbas.push_back(indicator_bba(row[j], table.stats.min[j], table.stats.max[j]));
        }
        return bbas;
    };

    detail::parallel_chunks(m, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t e = begin; e < end; ++e) {
            const auto rel = estimate_reliabilities(bbas_of(static_cast<EdgeId>(e)), cfg);
            for (std::size_t j = 0; j < n; ++j) {
                table.alphas[e * n + j] = rel[j].value();
            }
        }
    });

    if (cfg.global_average && m > 0) {
        std::vector<double> mean(n, 0.0);
        for (std::size_t e = 0; e < m; ++e) {
            for (std::size_t j = 0; j < n; ++j) {
                mean[j] += table.alphas[e * n + j];
            }
        }
        for (double& a : mean) {
            a = std::clamp(a / static_cast<double>(m), 0.0, 1.0);
        }
        for (std::size_t e = 0; e < m; ++e) {
            std::copy(mean.begin(), mean.end(), table.alphas.begin() + static_cast<std::ptrdiff_t>(e * n));
        }
    }

    std::mutex failures_mutex;
    std::vector<EdgeId> failures;
    detail::parallel_chunks(m, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<EdgeId> local;
        for (std::size_t e = begin; e < end; ++e) {
            EdgeBbaSet set{bbas_of(static_cast<EdgeId>(e)), {}};
            set.reliabilities.reserve(n);
            for (double a : table.alphas_of(static_cast<EdgeId>(e))) {
                set.reliabilities.emplace_back(a);
            }
            try {
                table.edges[e] = fuse_edge(set);
            } catch (const TotalConflict&) {
                local.push_back(static_cast<EdgeId>(e));
            }
        }
        std::lock_guard lock(failures_mutex);
        failures.insert(failures.end(), local.begin(), local.end());
    });

    if (!failures.empty()) {
        std::sort(failures.begin(), failures.end());
        std::ostringstream msg;
        msg << "total conflict on " << failures.size() << " edge(s):";
        const std::size_t shown = std::min<std::size_t>(failures.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) {
            const Edge& edge = g.edge(failures[i]);
            msg << ' ' << g.name(edge.src) << "->" << g.name(edge.dst);
        }
        if (shown < failures.size()) {
            msg << " ...";
        }
        throw FusionError(msg.str(), failures.size());
    }
    return table;
}

FusionTable fuse_all(const SocialGraph& g, const ReliabilityConfig& cfg, unsigned threads) {
    return fuse_all(g, raw_indicators(g), cfg, threads);
}

void write_fusion_dump(std::ostream& out, const SocialGraph& g, const IndicatorMatrix& indicators,
                       const FusionTable& table) {
    const std::size_t n = table.indicator_count;
    out << "src,dst";
    for (std::size_t j = 1; j <= n; ++j) {
        out << ",w_" << j;
    }
    for (std::size_t j = 1; j <= n; ++j) {
        out << ",alpha_" << j;
    }
    out << ",inf\n";
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::fixed << std::setprecision(6);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        out << g.name(edge.src) << ',' << g.name(edge.dst);
        for (double w : indicators.row(e)) {
            out << ',' << w;
        }
        for (double a : table.alphas_of(e)) {
            out << ',' << a;
        }
        out << ',' << table.edges[e].inf << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

} // namespace evinf
