#include "evinf/maximize.hpp"

#include "evinf/errors.hpp"
#include "parallel.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <queue>
#include <string>

namespace evinf {

namespace {

std::size_t effective_k(const InfluenceField& f, std::size_t k) {
    if (k == 0) {
        throw InvalidK("k must be at least 1");
    }
    return std::min(k, f.user_count());
}

void commit(SeedSelection& out, SpreadState& state, NodeId user) {
    const double gain = state.add(user);
    out.seeds.push_back({out.seeds.size() + 1, user, gain, state.sigma()});
}

struct LazyEntry {
    double cached_gain;
    NodeId user;
    /// Seed-set size at which cached_gain was computed.
    std::size_t round;
};

/// Max-heap order: larger gain first, then smaller user id.
struct LazyOrder {
    bool operator()(const LazyEntry& a, const LazyEntry& b) const {
        if (a.cached_gain != b.cached_gain) {
            return a.cached_gain < b.cached_gain;
        }
        return a.user > b.user;
    }
};

} // namespace

std::vector<NodeId> SeedSelection::users() const {
    std::vector<NodeId> out;
    out.reserve(seeds.size());
    for (const auto& s : seeds) {
        out.push_back(s.user);
    }
    return out;
}

SeedSelection select_celf(const InfluenceField& f, std::size_t k, const CelfOptions& options) {
    const std::size_t target = effective_k(f, k);
    const std::size_t n = f.user_count();
    SeedSelection out;
    SpreadState state(f);

    std::vector<double> initial(n, 0.0);
    detail::parallel_chunks(n, options.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
        InfluenceRow scratch(n);
        for (std::size_t u = begin; u < end; ++u) {
            initial[u] = state.gain(static_cast<NodeId>(u), scratch);
        }
    });
    out.gain_evaluations = n;

    std::vector<LazyEntry> entries;
    entries.reserve(n);
    for (NodeId u = 0; u < n; ++u) {
        entries.push_back({initial[u], u, 0});
    }
    std::priority_queue<LazyEntry, std::vector<LazyEntry>, LazyOrder> queue(LazyOrder{}, std::move(entries));

    while (out.seeds.size() < target) {
        LazyEntry top = queue.top();
        queue.pop();
        const std::size_t round = state.members().size();
        if (top.round == round) {
            if (options.verify_commits) {
                const double fresh = state.gain(top.user);
                if (std::abs(fresh - top.cached_gain) > 1e-9) {
                    throw InvariantViolation("lazy cache out of date for user " + f.graph().name(top.user));
                }
            }
            commit(out, state, top.user);
            continue;
        }
        top.cached_gain = state.gain(top.user);
        top.round = round;
        ++out.gain_evaluations;
        queue.push(top);
    }
    return out;
}

SeedSelection select_greedy_naive(const InfluenceField& f, std::size_t k) {
    const std::size_t target = effective_k(f, k);
    const std::size_t n = f.user_count();
    SeedSelection out;
    SpreadState state(f);
    while (out.seeds.size() < target) {
        bool found = false;
        NodeId best = 0;
        double best_gain = 0.0;
        for (NodeId u = 0; u < n; ++u) {
            if (state.contains(u)) {
                continue;
            }
            const double g = state.gain(u);
            ++out.gain_evaluations;
            if (!found || g > best_gain) {
                found = true;
                best = u;
                best_gain = g;
            }
        }
        commit(out, state, best);
    }
    return out;
}

std::vector<NodeId> select_exhaustive(const InfluenceField& f, std::size_t k, std::uint64_t max_subsets) {
    const std::size_t n = f.user_count();
    if (k == 0 || k > n) {
        throw InvalidK("k must lie in [1, " + std::to_string(n) + "], got " + std::to_string(k));
    }
    // C(n, k) with early exit once the budget is exceeded.
    std::uint64_t subsets = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        subsets = subsets * (n - k + i) / i;
        if (subsets > max_subsets) {
            throw TooLarge("more than " + std::to_string(max_subsets) + " subsets of size " +
                           std::to_string(k));
        }
    }

    std::vector<NodeId> current(k);
    for (std::size_t i = 0; i < k; ++i) {
        current[i] = static_cast<NodeId>(i);
    }
    std::vector<NodeId> best = current;
    double best_sigma = sigma(f, current);
    while (true) {
        // Next combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && current[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++current[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            current[j] = current[j - 1] + 1;
        }
        const double s = sigma(f, current);
        if (s > best_sigma) {
            best_sigma = s;
            best = current;
        }
    }
    return best;
}

void write_selection(std::ostream& out, const SocialGraph& g, const SeedSelection& selection) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << "rank,user,marginal_gain,cumulative_sigma\n" << std::fixed << std::setprecision(6);
    for (const auto& s : selection.seeds) {
        out << s.rank << ',' << g.name(s.user) << ',' << s.marginal_gain << ',' << s.cumulative_sigma << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

} // namespace evinf
