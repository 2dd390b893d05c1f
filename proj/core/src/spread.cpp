#include "evinf/spread.hpp"

#include "evinf/errors.hpp"

#include <algorithm>
#include <string>

namespace evinf {

namespace {

void check_user(const InfluenceField& f, NodeId u) {
    if (u >= f.user_count()) {
        throw UnknownUser("unknown node index " + std::to_string(u));
    }
}

std::vector<NodeId> normalized_seeds(const InfluenceField& f, std::span<const NodeId> seeds) {
    std::vector<NodeId> out(seeds.begin(), seeds.end());
    for (NodeId u : out) {
        check_user(f, u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double aggregate(SpreadModel model, double total) {
    return model == SpreadModel::clamped ? std::min(1.0, total) : total;
}

} // namespace

InfluenceField::InfluenceField(const SocialGraph& graph, std::vector<double> edge_inf, SpreadModel model)
    : graph_(&graph), edge_inf_(std::move(edge_inf)), model_(model) {
    if (edge_inf_.size() != graph.edge_count()) {
        throw InvalidParameters("expected " + std::to_string(graph.edge_count()) +
                                " edge influences, got " + std::to_string(edge_inf_.size()));
    }
    for (double w : edge_inf_) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw InvalidParameters("edge influence outside [0, 1]: " + std::to_string(w));
        }
    }
}

double InfluenceField::inf(NodeId u, NodeId x) const {
    if (u == x) {
        return 1.0;
    }
    const auto e = graph_->find_edge(u, x);
    return e ? edge_inf_[*e] : 0.0;
}

double influence_on(const InfluenceField& f, std::span<const NodeId> seeds, NodeId v) {
    check_user(f, v);
    const auto members = normalized_seeds(f, seeds);
    if (std::binary_search(members.begin(), members.end(), v)) {
        return 1.0;
    }
    const SocialGraph& g = f.graph();
    double total = 0.0;
    for (NodeId u : members) {
        for (EdgeId e : g.in_edges(v)) {
            const NodeId x = g.edge(e).src;
            total += f.inf(u, x) * f.edge_inf(e);
        }
        total += f.inf(u, v);
    }
    return aggregate(f.model(), total);
}

void InfluenceRow::add(NodeId v, double x) {
    if (value_[v] == 0.0) {
        touched_.push_back(v);
    }
    value_[v] += x;
}

void InfluenceRow::compute(const InfluenceField& f, NodeId u) {
    for (NodeId v : touched_) {
        value_[v] = 0.0;
    }
    touched_.clear();

    const SocialGraph& g = f.graph();
    const auto out = g.out_edges(u);
    // Direct link u -> v: both the x = u and the x = v terms equal Inf(u, v).
    for (EdgeId e : out) {
        const double w = f.edge_inf(e);
        if (w > 0.0) {
            add(g.edge(e).dst, 2.0 * w);
        }
    }
    // Two-hop paths u -> x -> v.
    for (EdgeId e : out) {
        const double w_ux = f.edge_inf(e);
        if (w_ux == 0.0) {
            continue;
        }
        for (EdgeId e2 : g.out_edges(g.edge(e).dst)) {
            const NodeId v = g.edge(e2).dst;
            const double p = w_ux * f.edge_inf(e2);
            if (v != u && p > 0.0) {
                add(v, p);
            }
        }
    }
}

double sigma(const InfluenceField& f, std::span<const NodeId> seeds) {
    const auto members = normalized_seeds(f, seeds);
    if (members.empty()) {
        return 0.0;
    }
    const std::size_t n = f.user_count();
    std::vector<double> received(n, 0.0);
    std::vector<std::uint8_t> in_set(n, 0);
    std::vector<NodeId> frontier;
    for (NodeId u : members) {
        in_set[u] = 1;
    }
    InfluenceRow row(n);
    for (NodeId u : members) {
        row.compute(f, u);
        for (NodeId v : row.support()) {
            if (received[v] == 0.0) {
                frontier.push_back(v);
            }
            received[v] += row[v];
        }
    }
    std::sort(frontier.begin(), frontier.end());
    double total = static_cast<double>(members.size());
    for (NodeId v : frontier) {
        if (!in_set[v]) {
            total += aggregate(f.model(), received[v]);
        }
    }
    return total;
}

double marginal_gain(const InfluenceField& f, std::span<const NodeId> seeds, NodeId w) {
    check_user(f, w);
    const auto members = normalized_seeds(f, seeds);
    if (std::binary_search(members.begin(), members.end(), w)) {
        throw AlreadyInSet("user " + f.graph().name(w) + " is already in the seed set");
    }
    auto extended = members;
    extended.push_back(w);
    return sigma(f, extended) - sigma(f, members);
}

SpreadState::SpreadState(const InfluenceField& f)
    : field_(&f),
      in_set_(f.user_count(), 0),
      received_(f.user_count(), 0.0),
      scratch_(f.user_count()) {}

double SpreadState::gain_from_row(NodeId w, const InfluenceRow& row) const {
    const bool clamped = field_->model() == SpreadModel::clamped;
    // w's own term rises from its current aggregated value to exactly 1.
    double gain = clamped ? (received_[w] >= 1.0 ? 0.0 : 1.0 - received_[w]) : 1.0 - received_[w];
    for (NodeId v : row.support()) {
        if (in_set_[v]) {
            continue;
        }
        if (clamped) {
            if (received_[v] < 1.0) {
                gain += std::min(1.0 - received_[v], row[v]);
            }
        } else {
            gain += row[v];
        }
    }
    return gain;
}

double SpreadState::gain(NodeId w, InfluenceRow& scratch) const {
    check_user(*field_, w);
    if (in_set_[w]) {
        throw AlreadyInSet("user " + field_->graph().name(w) + " is already in the seed set");
    }
    scratch.compute(*field_, w);
    return gain_from_row(w, scratch);
}

double SpreadState::gain(NodeId w) { return gain(w, scratch_); }

double SpreadState::add(NodeId w) {
    const double g = gain(w, scratch_);
    for (NodeId v : scratch_.support()) {
        received_[v] += scratch_[v];
    }
    in_set_[w] = 1;
    members_.push_back(w);
    sigma_ += g;
    return g;
}

} // namespace evinf
