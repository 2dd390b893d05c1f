#include "evinf/io.hpp"

#include "evinf/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace evinf {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

std::uint64_t parse_count(std::string_view field, const std::string& source, std::size_t line) {
    std::uint64_t value = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError(source, line,
                         "expected a nonnegative integer, got '" + std::string(field) + "'");
    }
    return value;
}

/// Walks a headed CSV table, calling `row` with the trimmed fields of every
/// non-blank data line.
template <std::size_t Columns, typename RowFn>
void read_table(std::istream& in, const std::string& source,
                const std::array<std::string_view, Columns>& header, RowFn&& row) {
    std::string line;
    std::size_t line_no = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split(line);
        if (fields.size() != Columns) {
            throw ParseError(source, line_no,
                             "expected " + std::to_string(Columns) + " columns, got " +
                                 std::to_string(fields.size()));
        }
        if (!seen_header) {
            for (std::size_t i = 0; i < Columns; ++i) {
                if (fields[i] != header[i]) {
                    throw ParseError(source, line_no,
                                     "unexpected column '" + std::string(fields[i]) + "', expected '" +
                                         std::string(header[i]) + "'");
                }
            }
            seen_header = true;
            continue;
        }
        for (std::size_t i = 0; i < Columns; ++i) {
            if (fields[i].empty()) {
                throw ParseError(source, line_no, "empty field '" + std::string(header[i]) + "'");
            }
        }
        row(fields, line_no);
    }
    if (in.bad()) {
        throw Error("read failure on " + source);
    }
}

template <typename Reader>
void read_file(const std::filesystem::path& path, const char* what, Reader&& reader) {
    if (path.empty()) {
        return;
    }
    std::ifstream in(path);
    if (!in) {
        throw Error(std::string("cannot open ") + what + " file '" + path.string() + "'");
    }
    reader(in, path.string());
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    writer(out);
    if (!out) {
        throw Error("write failure on '" + path.string() + "'");
    }
}

} // namespace

DatasetPaths DatasetPaths::in_directory(const std::filesystem::path& dir) {
    return {dir / "edges.csv", dir / "mentions.csv", dir / "retweets.csv", dir / "activity.csv"};
}

void read_edges(std::istream& in, const std::string& source, GraphBuilder& builder) {
    read_table<2>(in, source, {"src", "dst"},
                  [&](const auto& f, std::size_t) { builder.add_edge(f[0], f[1]); });
}

void read_mentions(std::istream& in, const std::string& source, GraphBuilder& builder) {
    read_table<3>(in, source, {"mentioner", "mentioned", "count"}, [&](const auto& f, std::size_t line) {
        builder.add_mentions(f[0], f[1], parse_count(f[2], source, line));
    });
}

void read_retweets(std::istream& in, const std::string& source, GraphBuilder& builder) {
    read_table<3>(in, source, {"retweeter", "original_author", "count"},
                  [&](const auto& f, std::size_t line) {
                      builder.add_retweets(f[0], f[1], parse_count(f[2], source, line));
                  });
}

void read_activity(std::istream& in, const std::string& source, GraphBuilder& builder) {
    read_table<3>(in, source, {"user", "tweets", "followers"}, [&](const auto& f, std::size_t line) {
        builder.set_activity(f[0], parse_count(f[1], source, line), parse_count(f[2], source, line));
    });
}

Dataset load_dataset(const DatasetPaths& paths) {
    GraphBuilder builder;
    read_file(paths.edges, "edges",
              [&](std::istream& in, const std::string& src) { read_edges(in, src, builder); });
    read_file(paths.mentions, "mentions",
              [&](std::istream& in, const std::string& src) { read_mentions(in, src, builder); });
    read_file(paths.retweets, "retweets",
              [&](std::istream& in, const std::string& src) { read_retweets(in, src, builder); });
    read_file(paths.activity, "activity",
              [&](std::istream& in, const std::string& src) { read_activity(in, src, builder); });
    return builder.build();
}

void write_edges(std::ostream& out, const Dataset& ds) {
    const SocialGraph& g = ds.graph;
    out << "src,dst\n";
    for (const Edge& e : g.edges()) {
        out << g.name(e.src) << ',' << g.name(e.dst) << '\n';
    }
}

void write_mentions(std::ostream& out, const Dataset& ds) {
    const SocialGraph& g = ds.graph;
    out << "mentioner,mentioned,count\n";
    for (const Edge& e : g.edges()) {
        if (e.mentions > 0) {
            out << g.name(e.dst) << ',' << g.name(e.src) << ',' << e.mentions << '\n';
        }
    }
}

void write_retweets(std::ostream& out, const Dataset& ds) {
    const SocialGraph& g = ds.graph;
    out << "retweeter,original_author,count\n";
    for (const Edge& e : g.edges()) {
        if (e.retweets > 0) {
            out << g.name(e.dst) << ',' << g.name(e.src) << ',' << e.retweets << '\n';
        }
    }
}

void write_activity(std::ostream& out, const Dataset& ds) {
    const SocialGraph& g = ds.graph;
    out << "user,tweets,followers\n";
    for (NodeId u = 0; u < g.user_count(); ++u) {
        out << g.name(u) << ',' << ds.activity[u].tweets << ',' << ds.activity[u].followers << '\n';
    }
}

void save_dataset(const Dataset& ds, const DatasetPaths& paths) {
    write_file(paths.edges, [&](std::ostream& out) { write_edges(out, ds); });
    write_file(paths.mentions, [&](std::ostream& out) { write_mentions(out, ds); });
    write_file(paths.retweets, [&](std::ostream& out) { write_retweets(out, ds); });
    write_file(paths.activity, [&](std::ostream& out) { write_activity(out, ds); });
}

namespace {

// Reference crawl totals the generator scales against.
constexpr double kRefFollows = 71027.0;
constexpr double kRefRetweets = 9789.0;
constexpr double kRefMentions = 20300.0;
constexpr double kRefTweetsPerUser = 251329.0 / 36274.0;

constexpr double kUniformFolloweeProb = 0.2;
constexpr double kOnFollowInteractionProb = 0.85;
constexpr double kRepeatInteractionProb = 0.4;

using Link = std::pair<std::uint32_t, std::uint32_t>;

std::vector<Link> sample_follows(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    std::vector<Link> links;
    links.reserve(m);
    if (m == 0) {
        return links;
    }
    const std::uint64_t max_links = static_cast<std::uint64_t>(n) * (n - 1);
    std::uniform_int_distribution<std::uint32_t> any_user(0, static_cast<std::uint32_t>(n - 1));

    if (2 * static_cast<std::uint64_t>(m) > max_links) {
        // Dense request: rejection sampling would stall, so draw from the full pair list.
        std::vector<Link> all;
        all.reserve(max_links);
        for (std::uint32_t u = 0; u < n; ++u) {
            for (std::uint32_t v = 0; v < n; ++v) {
                if (u != v) {
                    all.emplace_back(u, v);
                }
            }
        }
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(m);
        return all;
    }

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    std::bernoulli_distribution uniform_followee(kUniformFolloweeProb);
    while (links.size() < m) {
        const std::uint32_t follower = any_user(rng);
        std::uint32_t followee;
        if (links.empty() || uniform_followee(rng)) {
            followee = any_user(rng);
        } else {
            // Copying the followee of a random existing link picks users in
            // proportion to their current follower count.
            std::uniform_int_distribution<std::size_t> pick(0, links.size() - 1);
            followee = links[pick(rng)].first;
        }
        if (followee == follower) {
            continue;
        }
        const std::uint64_t key = static_cast<std::uint64_t>(followee) * n + follower;
        if (seen.insert(key).second) {
            links.emplace_back(followee, follower);
        }
    }
    return links;
}

/// Interaction events (src influences dst): mostly along follow links, with
/// repeats so that a few pairs accumulate many events.
std::vector<Link> sample_interactions(std::size_t n, const std::vector<Link>& follows,
                                      std::uint64_t events, std::mt19937_64& rng) {
    std::vector<Link> out;
    if (follows.empty() || n < 2) {
        return out;
    }
    out.reserve(events);
    std::uniform_int_distribution<std::size_t> pick_follow(0, follows.size() - 1);
    std::uniform_int_distribution<std::uint32_t> any_user(0, static_cast<std::uint32_t>(n - 1));
    std::bernoulli_distribution on_follow(kOnFollowInteractionProb);
    std::bernoulli_distribution repeat(kRepeatInteractionProb);
    while (out.size() < events) {
        if (!out.empty() && repeat(rng)) {
            std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
            out.push_back(out[pick(rng)]);
            continue;
        }
        if (on_follow(rng)) {
            out.push_back(follows[pick_follow(rng)]);
            continue;
        }
        const std::uint32_t src = follows[pick_follow(rng)].first;
        const std::uint32_t dst = any_user(rng);
        if (src != dst) {
            out.emplace_back(src, dst);
        }
    }
    return out;
}

std::uint64_t poisson_total(double mean, std::mt19937_64& rng) {
    if (mean <= 0.0) {
        return 0;
    }
    std::poisson_distribution<std::uint64_t> dist(mean);
    return dist(rng);
}

} // namespace

Dataset generate_synthetic(const SyntheticParams& params) {
    const std::size_t n = params.users;
    const std::size_t m = params.follows;
    if (n == 0) {
        throw InvalidParameters("synthetic graph needs at least one user");
    }
    if (static_cast<std::uint64_t>(m) > static_cast<std::uint64_t>(n) * (n - 1)) {
        throw InvalidParameters("too many follows (" + std::to_string(m) + ") for " +
                                std::to_string(n) + " users");
    }
    if (!(params.activity_intensity >= 0.0) || !std::isfinite(params.activity_intensity)) {
        throw InvalidParameters("activity intensity must be a finite nonnegative number");
    }

    std::mt19937_64 rng(params.seed);

    const auto width = std::max<std::size_t>(6, std::to_string(n - 1).size());
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), std::size_t{0});
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string digits = std::to_string(label[i]);
        names[i] = "u" + std::string(width - digits.size(), '0') + digits;
    }

    const auto follows = sample_follows(n, m, rng);
    const double scale = static_cast<double>(m) / kRefFollows * params.activity_intensity;
    const auto mentions =
        sample_interactions(n, follows, poisson_total(kRefMentions * scale, rng), rng);
    const auto retweets =
        sample_interactions(n, follows, poisson_total(kRefRetweets * scale, rng), rng);

    std::vector<std::uint64_t> followers(n, 0);
    for (const auto& [followee, follower] : follows) {
        ++followers[followee];
    }

    GraphBuilder builder;
    for (const auto& [src, dst] : follows) {
        builder.add_edge(names[src], names[dst]);
    }
    for (const auto& [src, dst] : mentions) {
        builder.add_mentions(names[dst], names[src], 1);
    }
    for (const auto& [src, dst] : retweets) {
        builder.add_retweets(names[dst], names[src], 1);
    }

    // Tweet volume grows with popularity; the mean per user matches the reference crawl.
    std::vector<double> weight(n);
    for (std::size_t i = 0; i < n; ++i) {
        weight[i] = 1.0 + std::sqrt(static_cast<double>(followers[i]));
    }
    const double mean_weight = std::accumulate(weight.begin(), weight.end(), 0.0) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double mean = kRefTweetsPerUser * params.activity_intensity * weight[i] / mean_weight;
        builder.set_activity(names[i], poisson_total(mean, rng), followers[i]);
    }
    return builder.build();
}

} // namespace evinf
