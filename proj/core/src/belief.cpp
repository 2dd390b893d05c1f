#include "evinf/belief.hpp"

#include "evinf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace evinf {

namespace {

constexpr std::array<Subset, kSubsetCount> kAllSubsets = {Subset::empty, Subset::influence,
                                                          Subset::passive, Subset::omega};

} // namespace

MassFunction MassFunction::from_masses(double influence, double passive, double omega) {
    const double lowest = -1e-12;
    if (!(influence >= lowest && passive >= lowest && omega >= lowest)) {
        throw InvalidMass("masses must be nonnegative");
    }
    const double total = influence + passive + omega;
    if (!(std::abs(total - 1.0) <= kMassTolerance)) {
        throw InvalidMass("masses sum to " + std::to_string(total) + ", expected 1");
    }
    return MassFunction({0.0, std::max(influence, 0.0), std::max(passive, 0.0), std::max(omega, 0.0)});
}

MassFunction MassFunction::categorical(Subset s) {
    if (s == Subset::empty) {
        throw InvalidMass("a categorical assignment cannot target the empty set");
    }
    std::array<double, kSubsetCount> m{};
    m[index(s)] = 1.0;
    return MassFunction(m);
}

Reliability::Reliability(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw InvalidParameters("reliability must lie in [0, 1], got " + std::to_string(alpha));
    }
}

double conflict(const MassFunction& a, const MassFunction& b) noexcept {
    double k = 0.0;
    for (Subset x : kAllSubsets) {
        for (Subset y : kAllSubsets) {
            if (intersect(x, y) == Subset::empty) {
                k += a[x] * b[y];
            }
        }
    }
    return k;
}

MassFunction combine_dempster(const MassFunction& a, const MassFunction& b) {
    std::array<double, kSubsetCount> joint{};
    for (Subset x : kAllSubsets) {
        for (Subset y : kAllSubsets) {
            joint[index(intersect(x, y))] += a[x] * b[y];
        }
    }
    const double k = joint[index(Subset::empty)];
    if (k >= kConflictThreshold) {
        throw TotalConflict(k);
    }
    const double scale = 1.0 - k;
    joint[index(Subset::empty)] = 0.0;
    for (std::size_t i = 1; i < kSubsetCount; ++i) {
        joint[i] /= scale;
    }
    return MassFunction(joint);
}

MassFunction discount(const MassFunction& m, Reliability r) {
    const double alpha = r.value();
    std::array<double, kSubsetCount> out{};
    out[index(Subset::influence)] = alpha * m.influence();
    out[index(Subset::passive)] = alpha * m.passive();
    // Written so that alpha = 0 and alpha = 1 are exact in floating point.
    out[index(Subset::omega)] = (1.0 - alpha) + alpha * m.omega();
    return MassFunction(out);
}

double jaccard_similarity(Subset a, Subset b) noexcept {
    const int uni = cardinality(unite(a, b));
    if (uni == 0) {
        return 1.0;
    }
    return static_cast<double>(cardinality(intersect(a, b))) / uni;
}

double jousselme_distance(const MassFunction& a, const MassFunction& b) noexcept {
    std::array<double, kSubsetCount> diff{};
    for (std::size_t i = 0; i < kSubsetCount; ++i) {
        diff[i] = a.masses()[i] - b.masses()[i];
    }
    double q = 0.0;
    for (Subset x : kAllSubsets) {
        for (Subset y : kAllSubsets) {
            q += diff[index(x)] * jaccard_similarity(x, y) * diff[index(y)];
        }
    }
    return std::clamp(std::sqrt(std::max(0.5 * q, 0.0)), 0.0, 1.0);
}

} // namespace evinf
