#pragma once

#include "evinf/spread.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace evinf {

struct SeedEntry {
    std::size_t rank = 0;
    NodeId user = 0;
    double marginal_gain = 0.0;
    double cumulative_sigma = 0.0;
};

struct SeedSelection {
    std::vector<SeedEntry> seeds;
    /// Number of marginal-gain evaluations spent by the algorithm.
    std::size_t gain_evaluations = 0;

    std::vector<NodeId> users() const;
    double sigma() const noexcept { return seeds.empty() ? 0.0 : seeds.back().cumulative_sigma; }
};

struct CelfOptions {
    /// Workers used to seed the lazy queue; 0 means all hardware threads.
    unsigned threads = 1;
    /// Recompute the gain of every committed seed and throw
    /// InvariantViolation if it differs from the cached one by more than 1e-9.
    bool verify_commits = false;
};

/// Lazy-greedy (CELF) maximization of sigma. Ties go to the larger gain, then
/// the smaller user id. Returns min(k, |V|) seeds. Throws InvalidK for k = 0.
SeedSelection select_celf(const InfluenceField& f, std::size_t k, const CelfOptions& options = {});

/// Plain greedy: k rounds of full marginal-gain scans, same tie-breaking as
/// select_celf. Throws InvalidK for k = 0.
SeedSelection select_greedy_naive(const InfluenceField& f, std::size_t k);

/// Best size-k seed set by enumeration, ties resolved in favor of the
/// lexicographically smallest id sequence. Throws TooLarge when C(|V|, k)
/// exceeds `max_subsets` and InvalidK unless 1 <= k <= |V|.
std::vector<NodeId> select_exhaustive(const InfluenceField& f, std::size_t k,
                                      std::uint64_t max_subsets = 1'000'000);

/// `rank,user,marginal_gain,cumulative_sigma` with six decimals.
void write_selection(std::ostream& out, const SocialGraph& g, const SeedSelection& selection);

} // namespace evinf
