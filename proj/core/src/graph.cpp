#include "evinf/graph.hpp"

#include "evinf/errors.hpp"

#include <algorithm>
#include <numeric>

namespace evinf {

std::optional<NodeId> SocialGraph::find(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

NodeId SocialGraph::id(std::string_view name) const {
    if (auto u = find(name)) {
        return *u;
    }
    throw UnknownUser("unknown user '" + std::string(name) + "'");
}

std::span<const EdgeId> SocialGraph::out_edges(NodeId u) const {
    if (u >= user_count()) {
        throw UnknownUser("unknown node index " + std::to_string(u));
    }
    return {out_ids_.data() + out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]};
}

std::span<const EdgeId> SocialGraph::in_edges(NodeId v) const {
    if (v >= user_count()) {
        throw UnknownUser("unknown node index " + std::to_string(v));
    }
    return {in_ids_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::optional<EdgeId> SocialGraph::find_edge(NodeId src, NodeId dst) const {
    const auto out = out_edges(src);
    const auto it = std::lower_bound(out.begin(), out.end(), dst,
                                     [this](EdgeId e, NodeId d) { return edges_[e].dst < d; });
    if (it != out.end() && edges_[*it].dst == dst) {
        return *it;
    }
    return std::nullopt;
}

void GraphBuilder::add_user(std::string_view user) {
    if (user.empty()) {
        throw InvalidParameters("user id must not be empty");
    }
    users_.try_emplace(std::string(user));
}

GraphBuilder::Counters* GraphBuilder::link(std::string_view src, std::string_view dst) {
    add_user(src);
    add_user(dst);
    if (src == dst) {
        ++dropped_self_loops_;
        return nullptr;
    }
    return &links_[{std::string(src), std::string(dst)}];
}

void GraphBuilder::add_edge(std::string_view src, std::string_view dst) { link(src, dst); }

void GraphBuilder::add_mentions(std::string_view mentioner, std::string_view mentioned,
                                std::uint64_t count) {
    if (auto* c = link(mentioned, mentioner)) {
        c->mentions += count;
    }
}

void GraphBuilder::add_retweets(std::string_view retweeter, std::string_view original_author,
                                std::uint64_t count) {
    if (auto* c = link(original_author, retweeter)) {
        c->retweets += count;
    }
}

void GraphBuilder::set_activity(std::string_view user, std::uint64_t tweets, std::uint64_t followers) {
    add_user(user);
    auto& p = users_.find(user)->second;
    p.tweets = tweets;
    p.followers = followers;
}

Dataset GraphBuilder::build() const {
    Dataset ds;
    SocialGraph& g = ds.graph;
    const std::size_t n = users_.size();
    g.names_.reserve(n);
    ds.activity.resize(n);
    for (const auto& [name, profile] : users_) {
        const auto id = static_cast<NodeId>(g.names_.size());
        g.index_.emplace(name, id);
        g.names_.push_back(name);
        ds.activity[id].tweets = profile.tweets;
        ds.activity[id].followers = profile.followers;
    }

    // std::map iteration order is already (src, dst) lexicographic, which
    // coincides with NodeId order.
    g.edges_.reserve(links_.size());
    for (const auto& [key, counters] : links_) {
        Edge e;
        e.src = g.index_.at(key.first);
        e.dst = g.index_.at(key.second);
        e.mentions = counters.mentions;
        e.retweets = counters.retweets;
        g.edges_.push_back(e);
        ds.activity[e.src].mentions_received += e.mentions;
        ds.activity[e.src].retweets_received += e.retweets;
    }

    const std::size_t m = g.edges_.size();
    g.out_offsets_.assign(n + 1, 0);
    g.in_offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.out_offsets_[e.src + 1];
        ++g.in_offsets_[e.dst + 1];
    }
    std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
    std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(), g.in_offsets_.begin());

    g.out_ids_.resize(m);
    std::iota(g.out_ids_.begin(), g.out_ids_.end(), EdgeId{0});

    // Edges are visited in (src, dst) order, so each in-list ends up sorted by src.
    g.in_ids_.resize(m);
    std::vector<std::size_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    for (EdgeId e = 0; e < m; ++e) {
        g.in_ids_[cursor[g.edges_[e].dst]++] = e;
    }
    return ds;
}

namespace {

std::vector<NodeId> neighbor_set(const SocialGraph& g, NodeId x, Neighborhood mode) {
    std::vector<NodeId> out;
    for (EdgeId e : g.out_edges(x)) {
        out.push_back(g.edge(e).dst);
    }
    if (mode == Neighborhood::undirected) {
        for (EdgeId e : g.in_edges(x)) {
            out.push_back(g.edge(e).src);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

} // namespace

std::size_t common_neighbors(const SocialGraph& g, NodeId u, NodeId v, Neighborhood mode) {
    const auto nu = neighbor_set(g, u, mode);
    const auto nv = neighbor_set(g, v, mode);
    std::size_t shared = 0;
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            ++shared;
            ++a;
            ++b;
        }
    }
    return shared;
}

IndicatorMatrix raw_indicators(const SocialGraph& g, Neighborhood mode) {
    const std::size_t n = g.user_count();
    IndicatorMatrix out(g.edge_count(), kTwitterIndicatorCount);

    std::vector<std::vector<NodeId>> neighbors(n);
    for (NodeId x = 0; x < n; ++x) {
        neighbors[x] = neighbor_set(g, x, mode);
    }

    // Mark N(u) once per source, then count hits in N(v) for each out-edge.
    std::vector<std::uint8_t> marked(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        const auto out_edges = g.out_edges(u);
        if (out_edges.empty()) {
            continue;
        }
        for (NodeId x : neighbors[u]) {
            marked[x] = 1;
        }
        for (EdgeId e : out_edges) {
            const Edge& edge = g.edge(e);
            std::size_t shared = 0;
            for (NodeId x : neighbors[edge.dst]) {
                shared += marked[x];
            }
            auto row = out.row(e);
            row[0] = static_cast<double>(shared);
            row[1] = static_cast<double>(edge.mentions);
            row[2] = static_cast<double>(edge.retweets);
        }
        for (NodeId x : neighbors[u]) {
            marked[x] = 0;
        }
    }
    return out;
}

} // namespace evinf
