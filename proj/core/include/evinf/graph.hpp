#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace evinf {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Directed influence link: `src` can influence `dst` (dst follows src).
/// The counters record how often dst mentioned src and retweeted src.
struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    std::uint64_t mentions = 0;
    std::uint64_t retweets = 0;

    bool operator==(const Edge&) const = default;
};

struct UserActivity {
    std::uint64_t tweets = 0;
    std::uint64_t followers = 0;
    std::uint64_t mentions_received = 0;
    std::uint64_t retweets_received = 0;

    bool operator==(const UserActivity&) const = default;
};

/// Immutable directed social graph.
///
/// Users are indexed in lexicographic order of their ids, so comparing two
/// NodeIds compares the underlying user ids. Edges are sorted by (src, dst);
/// the out-edges of a node form a contiguous EdgeId range.
class SocialGraph {
  public:
    SocialGraph() = default;

    std::size_t user_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& name(NodeId u) const { return names_.at(u); }
    std::optional<NodeId> find(std::string_view name) const;
    /// Throws UnknownUser.
    NodeId id(std::string_view name) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }

    /// EdgeIds of (u, *), ordered by destination.
    std::span<const EdgeId> out_edges(NodeId u) const;
    /// EdgeIds of (*, v), ordered by source.
    std::span<const EdgeId> in_edges(NodeId v) const;

    std::optional<EdgeId> find_edge(NodeId src, NodeId dst) const;

    bool operator==(const SocialGraph& other) const {
        return names_ == other.names_ && edges_ == other.edges_;
    }

  private:
    friend class GraphBuilder;

    std::vector<std::string> names_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<Edge> edges_;
    std::vector<EdgeId> out_ids_;
    std::vector<std::size_t> out_offsets_;
    std::vector<EdgeId> in_ids_;
    std::vector<std::size_t> in_offsets_;
};

/// A loaded graph together with per-user activity statistics (indexed by NodeId).
struct Dataset {
    SocialGraph graph;
    std::vector<UserActivity> activity;

    bool operator==(const Dataset&) const = default;
};

/// Accumulates users, follow links and interaction counts, then freezes
/// them into a Dataset. Duplicate links collapse; interaction counts on the
/// same pair add up; self-loops are dropped.
class GraphBuilder {
  public:
    void add_user(std::string_view user);
    void add_edge(std::string_view src, std::string_view dst);
    /// `mentioner` mentioned `mentioned` `count` times: counts toward edge
    /// (mentioned, mentioner).
    void add_mentions(std::string_view mentioner, std::string_view mentioned, std::uint64_t count);
    /// `retweeter` retweeted `original_author` `count` times: counts toward
    /// edge (original_author, retweeter).
    void add_retweets(std::string_view retweeter, std::string_view original_author,
                      std::uint64_t count);
    void set_activity(std::string_view user, std::uint64_t tweets, std::uint64_t followers);

    std::size_t dropped_self_loops() const noexcept { return dropped_self_loops_; }

    Dataset build() const;

  private:
    struct Counters {
        std::uint64_t mentions = 0;
        std::uint64_t retweets = 0;
    };
    struct Profile {
        std::uint64_t tweets = 0;
        std::uint64_t followers = 0;
    };

    Counters* link(std::string_view src, std::string_view dst);

    std::map<std::string, Profile, std::less<>> users_;
    std::map<std::pair<std::string, std::string>, Counters> links_;
    std::size_t dropped_self_loops_ = 0;
};

enum class Neighborhood {
    /// N(x) is the union of in- and out-neighbors.
    undirected,
    /// N(x) is the set of out-neighbors only.
    out,
};

/// |N(u) n N(v)|. Throws UnknownUser for ids outside the graph.
std::size_t common_neighbors(const SocialGraph& g, NodeId u, NodeId v,
                             Neighborhood mode = Neighborhood::undirected);

/// Row-major table of per-edge indicator values (EdgeId x indicator).
class IndicatorMatrix {
  public:
    IndicatorMatrix() = default;
    IndicatorMatrix(std::size_t edges, std::size_t indicators)
        : indicators_(indicators), values_(edges * indicators, 0.0) {}

    std::size_t edge_count() const noexcept { return indicators_ == 0 ? 0 : values_.size() / indicators_; }
    std::size_t indicator_count() const noexcept { return indicators_; }

    std::span<const double> row(EdgeId e) const {
        return {values_.data() + static_cast<std::size_t>(e) * indicators_, indicators_};
    }
    std::span<double> row(EdgeId e) {
        return {values_.data() + static_cast<std::size_t>(e) * indicators_, indicators_};
    }

    bool operator==(const IndicatorMatrix&) const = default;

  private:
    std::size_t indicators_ = 0;
    std::vector<double> values_;
};

inline constexpr std::size_t kTwitterIndicatorCount = 3;

/// Per edge (u, v): (common neighbors, times v mentioned u, times v retweeted u).
IndicatorMatrix raw_indicators(const SocialGraph& g, Neighborhood mode = Neighborhood::undirected);

} // namespace evinf
