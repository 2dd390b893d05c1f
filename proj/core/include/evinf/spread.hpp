#pragma once

#include "evinf/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace evinf {

/// How the influence of a seed set on a single non-seed user is aggregated.
enum class SpreadModel {
    /// Inf(S, v) = min(1, sum over seeds). Monotone and submodular.
    clamped,
    /// Inf(S, v) = sum over seeds, unbounded. Submodular but not monotone:
    /// adding v to S can replace a term above 1 by exactly 1.
    literal,
};

/// Pairwise influence on top of a graph: Inf(v, v) = 1, Inf(u, x) is the
/// fused edge value when (u, x) is an edge and 0 otherwise.
///
/// Holds a reference to the graph, which must outlive the field.
class InfluenceField {
  public:
    /// `edge_inf` is indexed by EdgeId; values must lie in [0, 1].
    InfluenceField(const SocialGraph& graph, std::vector<double> edge_inf,
                   SpreadModel model = SpreadModel::clamped);

    const SocialGraph& graph() const noexcept { return *graph_; }
    std::size_t user_count() const noexcept { return graph_->user_count(); }
    SpreadModel model() const noexcept { return model_; }

    double edge_inf(EdgeId e) const { return edge_inf_.at(e); }
    double inf(NodeId u, NodeId x) const;

  private:
    const SocialGraph* graph_;
    std::vector<double> edge_inf_;
    SpreadModel model_;
};

/// Influence of S on v: 1 when v is in S, otherwise
/// sum_{u in S} sum_{x in IN(v) + {v}} Inf(u, x) Inf(x, v), clamped to 1
/// under SpreadModel::clamped. Throws UnknownUser.
double influence_on(const InfluenceField& f, std::span<const NodeId> seeds, NodeId v);

/// sigma(S) = sum over all users v of influence_on(S, v), evaluated over the
/// two-hop out-frontier of S only. Duplicate seeds are ignored.
double sigma(const InfluenceField& f, std::span<const NodeId> seeds);

/// sigma(S + {w}) - sigma(S). Throws AlreadyInSet when w is in S.
double marginal_gain(const InfluenceField& f, std::span<const NodeId> seeds, NodeId w);

/// Sparse row of pairwise seed-to-user contributions
/// g(u, v) = sum_{x in IN(v) + {v}} Inf(u, x) Inf(x, v) for v != u.
/// Scratch space reused across calls; one per thread.
class InfluenceRow {
  public:
    explicit InfluenceRow(std::size_t users) : value_(users, 0.0) {}

    void compute(const InfluenceField& f, NodeId u);

    std::span<const NodeId> support() const noexcept { return touched_; }
    double operator[](NodeId v) const noexcept { return value_[v]; }

  private:
    void add(NodeId v, double x);

    std::vector<double> value_;
    std::vector<NodeId> touched_;
};

/// Incremental sigma evaluator: tracks a growing seed set and answers
/// marginal-gain queries against it. Gains are computed term by term in a
/// fixed order, so a gain recomputed after S grows never exceeds an earlier
/// value, even in floating point.
class SpreadState {
  public:
    explicit SpreadState(const InfluenceField& f);

    double sigma() const noexcept { return sigma_; }
    bool contains(NodeId u) const { return in_set_.at(u) != 0; }
    std::span<const NodeId> members() const noexcept { return members_; }

    /// Throws AlreadyInSet.
    double gain(NodeId w, InfluenceRow& scratch) const;
    double gain(NodeId w);

    /// Adds w and returns its marginal gain.
    double add(NodeId w);

  private:
    double gain_from_row(NodeId w, const InfluenceRow& row) const;

    const InfluenceField* field_;
    std::vector<std::uint8_t> in_set_;
    std::vector<double> received_;
    std::vector<NodeId> members_;
    double sigma_ = 0.0;
    InfluenceRow scratch_;
};

} // namespace evinf
