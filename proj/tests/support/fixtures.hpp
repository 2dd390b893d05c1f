#pragma once

#include "evinf/graph.hpp"
#include "evinf/spread.hpp"
#include "oracles.hpp"

#include <cstdio>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace fixtures {

/// Zero-padded so that lexicographic order equals numeric order.
inline std::string node_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "n%03zu", i);
    return buf;
}

/// A graph with explicit edge influences plus the dense copy the oracles use.
struct WeightedInstance {
    std::unique_ptr<evinf::Dataset> ds;
    std::vector<double> edge_inf;
    oracle::Dense dense;
    std::vector<std::vector<bool>> adjacent;

    evinf::InfluenceField field(evinf::SpreadModel model = evinf::SpreadModel::clamped) const {
        return evinf::InfluenceField(ds->graph, edge_inf, model);
    }
};

/// Builds an instance from (src, dst, inf) triples over users 0..n-1.
inline WeightedInstance make_instance(std::size_t n,
                                      const std::vector<std::tuple<std::size_t, std::size_t, double>>& links) {
    evinf::GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i) {
        b.add_user(node_name(i));
    }
    for (const auto& [u, v, w] : links) {
        b.add_edge(node_name(u), node_name(v));
    }
    WeightedInstance inst;
    inst.ds = std::make_unique<evinf::Dataset>(b.build());
    const auto& g = inst.ds->graph;
    inst.edge_inf.assign(g.edge_count(), 0.0);
    inst.dense.assign(n, std::vector<double>(n, 0.0));
    inst.adjacent.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        inst.dense[i][i] = 1.0;
    }
    for (const auto& [u, v, w] : links) {
        const auto e = g.find_edge(g.id(node_name(u)), g.id(node_name(v)));
        inst.edge_inf[*e] = w;
        inst.dense[u][v] = w;
        inst.adjacent[u][v] = true;
    }
    return inst;
}

/// Random directed graph without self-loops; each ordered pair is a link
/// with probability `density`, weighted uniformly in [0, 1].
template <typename Rng>
WeightedInstance random_instance(Rng& rng, std::size_t n, double density) {
    std::bernoulli_distribution link(density);
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    std::vector<std::tuple<std::size_t, std::size_t, double>> links;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && link(rng)) {
                links.emplace_back(u, v, weight(rng));
            }
        }
    }
    return make_instance(n, links);
}

/// The a -> b (0.5), b -> c (0.4) chain.
inline WeightedInstance chain() { return make_instance(3, {{0, 1, 0.5}, {1, 2, 0.4}}); }

/// Small hand-checked dataset used to pin end-to-end fusion values.
inline const char* kFixtureEdges = "src,dst\na,b\na,c\nb,c\nc,d\nd,a\n";
inline const char* kFixtureMentions = "mentioner,mentioned,count\nb,a,3\nc,a,1\nd,c,2\n";
inline const char* kFixtureRetweets = "retweeter,original_author,count\nc,b,4\nb,a,1\n";
inline const char* kFixtureActivity = "user,tweets,followers\na,10,2\nb,4,1\nc,7,2\nd,1,1\n";

} // namespace fixtures
