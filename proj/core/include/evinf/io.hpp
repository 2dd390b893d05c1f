#pragma once

#include "evinf/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace evinf {

/// Paths of the four dataset files. Empty paths are skipped on load.
struct DatasetPaths {
    std::filesystem::path edges;
    std::filesystem::path mentions;
    std::filesystem::path retweets;
    std::filesystem::path activity;

    /// edges.csv, mentions.csv, retweets.csv and activity.csv under `dir`.
    static DatasetPaths in_directory(const std::filesystem::path& dir);
};

// Each reader parses one comma-separated table with a fixed header and feeds
// it into the builder. `source` names the stream in ParseError messages.
void read_edges(std::istream& in, const std::string& source, GraphBuilder& builder);
void read_mentions(std::istream& in, const std::string& source, GraphBuilder& builder);
void read_retweets(std::istream& in, const std::string& source, GraphBuilder& builder);
void read_activity(std::istream& in, const std::string& source, GraphBuilder& builder);

/// Throws Error when a named file cannot be opened, ParseError on malformed rows.
Dataset load_dataset(const DatasetPaths& paths);

void write_edges(std::ostream& out, const Dataset& ds);
void write_mentions(std::ostream& out, const Dataset& ds);
void write_retweets(std::ostream& out, const Dataset& ds);
void write_activity(std::ostream& out, const Dataset& ds);

void save_dataset(const Dataset& ds, const DatasetPaths& paths);

struct SyntheticParams {
    std::uint64_t seed = 1;
    std::size_t users = 36274;
    std::size_t follows = 71027;
    /// Scales the number of mention, retweet and tweet events.
    double activity_intensity = 1.0;
};

/// Seed-reproducible preferential-attachment follow graph with mention,
/// retweet and tweet counts whose totals follow the ratios of a mid-size
/// Twitter crawl (71027 follows : 9789 retweets : 20300 mentions, about 6.9
/// tweets per user). User ids are assigned in random order so that id order
/// carries no information about popularity.
Dataset generate_synthetic(const SyntheticParams& params);

} // namespace evinf
