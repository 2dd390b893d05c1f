#include "evinf/errors.hpp"
#include "evinf/fusion.hpp"
#include "evinf/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

using namespace evinf;

namespace {

Dataset fixture() {
    GraphBuilder b;
    std::istringstream e(fixtures::kFixtureEdges), m(fixtures::kFixtureMentions),
        r(fixtures::kFixtureRetweets), a(fixtures::kFixtureActivity);
    read_edges(e, "edges", b);
    read_mentions(m, "mentions", b);
    read_retweets(r, "retweets", b);
    read_activity(a, "activity", b);
    return b.build();
}

MassFunction categorical_bba(double influence) { return MassFunction::from_masses(influence, 1.0 - influence, 0.0); }

} // namespace

TEST(IndicatorBba, Endpoints) {
    const auto top = indicator_bba(10.0, 0.0, 10.0);
    EXPECT_EQ(top.influence(), 1.0);
    EXPECT_EQ(top.passive(), 0.0);
    const auto bottom = indicator_bba(0.0, 0.0, 10.0);
    EXPECT_EQ(bottom.influence(), 0.0);
    EXPECT_EQ(bottom.passive(), 1.0);
}

TEST(IndicatorBba, Interior) {
    const auto m = indicator_bba(3.0, 0.0, 10.0);
    EXPECT_NEAR(m.influence(), 0.3, 1e-12);
    EXPECT_NEAR(m.passive(), 0.7, 1e-12);
    EXPECT_EQ(m.omega(), 0.0);
}

TEST(IndicatorBba, DegenerateRangeIsVacuous) {
    EXPECT_EQ(indicator_bba(4.0, 4.0, 4.0), MassFunction::vacuous());
}

TEST(IndicatorBba, OutOfRange) {
    EXPECT_THROW(indicator_bba(11.0, 0.0, 10.0), OutOfRange);
    EXPECT_THROW(indicator_bba(-1.0, 0.0, 10.0), OutOfRange);
}

TEST(Reliability, IdenticalBbasAreFullyReliable) {
    const std::vector<MassFunction> same(4, MassFunction::from_masses(0.2, 0.5, 0.3));
    for (const auto& r : estimate_reliabilities(same, ReliabilityConfig::estimated())) {
        EXPECT_EQ(r.value(), 1.0);
    }
}

TEST(Reliability, MaximalDistanceIsUnreliable) {
    for (double lambda : {0.5, 1.0, 5.0, 20.0}) {
        EXPECT_EQ(reliability_from_distance(1.0, lambda), 0.0);
        EXPECT_EQ(reliability_from_distance(0.0, lambda), 1.0);
    }
}

TEST(Reliability, WorkedExample) {
    // Categorical BBAs on {I, P}: the Jousselme distance reduces to |m_a(I) - m_b(I)|.
    const std::vector<MassFunction> bbas = {categorical_bba(0.5), categorical_bba(0.7), categorical_bba(0.1)};
    EXPECT_NEAR(oracle::jousselme(bbas[0], bbas[1]), 0.2, 1e-12);
    EXPECT_NEAR(oracle::jousselme(bbas[0], bbas[2]), 0.4, 1e-12);
    const auto c = mean_distances(bbas);
    EXPECT_NEAR(c[0], 0.3, 1e-12);
    const auto alphas = estimate_reliabilities(bbas, ReliabilityConfig::estimated(5.0));
    EXPECT_NEAR(alphas[0].value(), std::pow(1.0 - std::pow(0.3, 5.0), 0.2), 1e-12);
    EXPECT_NEAR(alphas[0].value(), 0.999514, 1e-6);
}

TEST(Reliability, FixedModeAndErrors) {
    const std::vector<MassFunction> bbas = {categorical_bba(0.5)};
    const auto fixed = estimate_reliabilities(bbas, ReliabilityConfig::fixed(0.2));
    ASSERT_EQ(fixed.size(), 1u);
    EXPECT_EQ(fixed[0].value(), 0.2);
    EXPECT_THROW(estimate_reliabilities(bbas, ReliabilityConfig::estimated()), TooFewIndicators);
    EXPECT_THROW(ReliabilityConfig::fixed(1.5).validate(), InvalidParameters);
    EXPECT_THROW(ReliabilityConfig::estimated(0.0).validate(), InvalidParameters);
    EXPECT_THROW(ReliabilityConfig::estimated(-2.0).validate(), InvalidParameters);
}

TEST(Reliability, StrictlyDecreasingInDistance) {
    for (double lambda : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        double previous = reliability_from_distance(0.001, lambda);
        for (int i = 2; i < 1000; ++i) {
            const double a = reliability_from_distance(i / 1000.0, lambda);
            // Once C^lambda drops below double resolution the value saturates at 1.
            if (std::pow(i / 1000.0, lambda) > 1e-12) {
                EXPECT_LT(a, previous) << "lambda " << lambda << " C " << i / 1000.0;
            } else {
                EXPECT_LE(a, previous) << "lambda " << lambda << " C " << i / 1000.0;
            }
            previous = a;
        }
    }
}

TEST(Reliability, OrderFollowsDistanceOrder) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        std::vector<MassFunction> bbas;
        for (int j = 0; j < 4; ++j) {
            bbas.push_back(oracle::random_bba(rng));
        }
        const auto c = mean_distances(bbas);
        const auto a = estimate_reliabilities(bbas, ReliabilityConfig::estimated(5.0));
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (c[j] < c[k] && c[k] - c[j] > 1e-6) {
                    EXPECT_GT(a[j].value(), a[k].value());
                }
            }
        }
    }
}

TEST(FuseEdge, SingleSourceIsIdentity) {
    const auto out = fuse_edge({{categorical_bba(0.4)}, {Reliability(1.0)}});
    EXPECT_NEAR(out.inf, 0.4, 1e-12);
}

TEST(FuseEdge, FullyDiscountedIsVacuous) {
    const auto out = fuse_edge({{categorical_bba(0.9), categorical_bba(0.1), categorical_bba(0.5)},
                                {Reliability(0.0), Reliability(0.0), Reliability(0.0)}});
    EXPECT_EQ(out.fused, MassFunction::vacuous());
    EXPECT_EQ(out.inf, 0.0);
}

TEST(FuseEdge, TwoIndicatorWorkedExample) {
    const auto out = fuse_edge({{categorical_bba(0.6), categorical_bba(0.5)}, {Reliability(1.0), Reliability(1.0)}});
    EXPECT_NEAR(out.inf, 0.6, 1e-12);
    EXPECT_NEAR(out.fused.passive(), 0.4, 1e-12);
}

TEST(FuseEdge, TotalConflictPropagates) {
    EXPECT_THROW(fuse_edge({{categorical_bba(1.0), categorical_bba(0.0)}, {Reliability(1.0), Reliability(1.0)}}),
                 TotalConflict);
}

TEST(FuseEdge, PermutationInvariant) {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; ++t) {
        std::vector<MassFunction> bbas;
        for (int j = 0; j < 4; ++j) {
            bbas.push_back(oracle::random_bba(rng));
        }
        const auto rel = estimate_reliabilities(bbas, ReliabilityConfig::estimated(5.0));
        double reference = 0.0;
        try {
            reference = fuse_edge({bbas, rel}).inf;
        } catch (const TotalConflict&) {
            continue;
        }
        std::vector<std::size_t> order(4);
        std::iota(order.begin(), order.end(), 0);
        while (std::next_permutation(order.begin(), order.end())) {
            std::vector<MassFunction> pb;
            for (auto i : order) {
                pb.push_back(bbas[i]);
            }
            const auto pr = estimate_reliabilities(pb, ReliabilityConfig::estimated(5.0));
            EXPECT_NEAR(fuse_edge({pb, pr}).inf, reference, 1e-9);
        }
    }
}

TEST(FuseAll, FixtureValuesMatchReference) {
    // Reference values computed independently with exact subset enumeration.
    const auto ds = fixture();
    const auto& g = ds.graph;
    const auto table = fuse_all(g, ReliabilityConfig::estimated(5.0));
    ASSERT_EQ(table.edges.size(), g.edge_count());
    auto inf = [&](const char* u, const char* v) { return table.edges[*g.find_edge(g.id(u), g.id(v))].inf; };
    auto alphas = [&](const char* u, const char* v) { return table.alphas_of(*g.find_edge(g.id(u), g.id(v))); };
    EXPECT_NEAR(inf("a", "b"), 0.047650721348, 1e-9);
    EXPECT_NEAR(inf("a", "c"), 0.125577970056, 1e-9);
    EXPECT_NEAR(inf("b", "c"), 0.0, 1e-12);
    EXPECT_NEAR(inf("c", "d"), 0.000001251720, 1e-9);
    EXPECT_NEAR(inf("d", "a"), 0.0, 1e-12);
    EXPECT_NEAR(alphas("a", "b")[0], 0.980154287, 1e-9);
    EXPECT_NEAR(alphas("a", "b")[1], 0.866008256, 1e-9);
    EXPECT_NEAR(alphas("a", "b")[2], 0.993670377, 1e-9);
    EXPECT_NEAR(alphas("b", "c")[2], 0.0, 1e-12);
    EXPECT_EQ(table.stats.min, (std::vector<double>{1, 0, 0}));
    EXPECT_EQ(table.stats.max, (std::vector<double>{2, 3, 4}));
}

TEST(FuseAll, SingleEdgeIsDegenerate) {
    GraphBuilder b;
    b.add_edge("a", "b");
    b.add_mentions("b", "a", 4);
    const auto ds = b.build();
    const auto table = fuse_all(ds.graph, ReliabilityConfig::estimated());
    ASSERT_EQ(table.edges.size(), 1u);
    EXPECT_EQ(table.edges[0].inf, 0.0);
    EXPECT_EQ(table.edges[0].fused, MassFunction::vacuous());
}

TEST(FuseAll, FixedAlphaZeroSilencesEveryEdge) {
    const auto ds = generate_synthetic({8, 400, 1500, 2.0});
    const auto table = fuse_all(ds.graph, ReliabilityConfig::fixed(0.0));
    for (const auto& e : table.edges) {
        EXPECT_EQ(e.inf, 0.0);
    }
}

TEST(FuseAll, FixedAlphaOneIsUndiscountedFusion) {
    // a->b in the fixture is at the mention maximum and the common-neighbor
    // minimum, so undiscounted fusion hits total conflict there.
    const auto ds = fixture();
    EXPECT_THROW(fuse_all(ds.graph, ReliabilityConfig::fixed(1.0)), FusionError);

    GraphBuilder b;
    b.add_edge("a", "b");
    b.add_edge("a", "c");
    b.add_edge("a", "d");
    b.add_mentions("b", "a", 1);
    b.add_mentions("c", "a", 2);
    b.add_mentions("d", "a", 3);
    b.add_retweets("b", "a", 2);
    b.add_retweets("c", "a", 1);
    b.add_retweets("d", "a", 3);
    const auto clean = b.build();
    const auto ci = raw_indicators(clean.graph);
    const auto cs = NormalizationStats::from(ci);
    const auto table = fuse_all(clean.graph, ci, ReliabilityConfig::fixed(1.0));
    for (EdgeId e = 0; e < clean.graph.edge_count(); ++e) {
        MassFunction expected = MassFunction::vacuous();
        for (std::size_t j = 0; j < 3; ++j) {
            expected = combine_dempster(expected, indicator_bba(ci.row(e)[j], cs.min[j], cs.max[j]));
        }
        EXPECT_EQ(table.edges[e].fused, expected);
    }
    EXPECT_NEAR(table.edges[1].inf, 0.0, 1e-12);
}

TEST(FuseAll, ErrorNamesEdges) {
    GraphBuilder b;
    b.add_edge("x", "y");
    b.add_edge("y", "z");
    b.add_mentions("y", "x", 5);
    b.add_retweets("z", "y", 5);
    const auto ds = b.build();
    try {
        fuse_all(ds.graph, ReliabilityConfig::fixed(1.0));
        FAIL();
    } catch (const FusionError& e) {
        EXPECT_EQ(e.failed_edges(), 2u);
        EXPECT_NE(std::string(e.what()).find("x->y"), std::string::npos);
    }
}

TEST(FuseAll, BoundedDeterministicAndThreadIndependent) {
    const auto ds = generate_synthetic({99, 800, 3000, 3.0});
    const auto ind = raw_indicators(ds.graph);
    for (auto cfg : {ReliabilityConfig::estimated(5.0), ReliabilityConfig::estimated(1.0), ReliabilityConfig::fixed(0.2)}) {
        const auto one = fuse_all(ds.graph, ind, cfg, 1);
        const auto four = fuse_all(ds.graph, ind, cfg, 4);
        ASSERT_EQ(one.edges.size(), ds.graph.edge_count());
        for (std::size_t e = 0; e < one.edges.size(); ++e) {
            EXPECT_GE(one.edges[e].inf, 0.0);
            EXPECT_LE(one.edges[e].inf, 1.0);
            EXPECT_EQ(one.edges[e].inf, one.edges[e].fused.influence());
            EXPECT_EQ(one.edges[e].fused, four.edges[e].fused);
        }
        EXPECT_EQ(one.alphas, four.alphas);
    }
}

TEST(FuseAll, IndicatorOrderDoesNotMatter) {
    const auto ds = generate_synthetic({5, 300, 1200, 3.0});
    const auto& g = ds.graph;
    const auto ind = raw_indicators(g);
    IndicatorMatrix permuted(g.edge_count(), 3);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        permuted.row(e)[0] = ind.row(e)[2];
        permuted.row(e)[1] = ind.row(e)[0];
        permuted.row(e)[2] = ind.row(e)[1];
    }
    const auto a = fuse_all(g, ind, ReliabilityConfig::estimated());
    const auto b = fuse_all(g, permuted, ReliabilityConfig::estimated());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        EXPECT_NEAR(a.edges[e].inf, b.edges[e].inf, 1e-9);
    }
}

TEST(FuseAll, GlobalAverageUsesSharedAlphas) {
    const auto ds = fixture();
    auto cfg = ReliabilityConfig::estimated();
    const auto per_edge = fuse_all(ds.graph, cfg);
    cfg.global_average = true;
    const auto global = fuse_all(ds.graph, cfg);
    for (std::size_t j = 0; j < 3; ++j) {
        double mean = 0.0;
        for (EdgeId e = 0; e < ds.graph.edge_count(); ++e) {
            mean += per_edge.alphas_of(e)[j];
        }
        mean /= static_cast<double>(ds.graph.edge_count());
        for (EdgeId e = 0; e < ds.graph.edge_count(); ++e) {
            EXPECT_NEAR(global.alphas_of(e)[j], mean, 1e-12);
        }
    }
}

TEST(FusionDump, Format) {
    const auto ds = fixture();
    const auto ind = raw_indicators(ds.graph);
    const auto table = fuse_all(ds.graph, ind, ReliabilityConfig::estimated());
    std::ostringstream out;
    write_fusion_dump(out, ds.graph, ind, table);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "src,dst,w_1,w_2,w_3,alpha_1,alpha_2,alpha_3,inf");
    std::getline(in, line);
    EXPECT_EQ(line, "a,b,1.000000,3.000000,1.000000,0.980154,0.866008,0.993670,0.047651");
    std::size_t rows = 1;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, ds.graph.edge_count());
}
