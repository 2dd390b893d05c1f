#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace evinf {

/// Subsets of the frame {I, P}, encoded as bitmasks: bit 0 is I (influence),
/// bit 1 is P (passivity).
enum class Subset : std::uint8_t { empty = 0b00, influence = 0b01, passive = 0b10, omega = 0b11 };

inline constexpr std::size_t kSubsetCount = 4;

constexpr std::size_t index(Subset s) noexcept { return static_cast<std::size_t>(s); }

constexpr Subset intersect(Subset a, Subset b) noexcept {
    return static_cast<Subset>(static_cast<std::uint8_t>(a) & static_cast<std::uint8_t>(b));
}

constexpr Subset unite(Subset a, Subset b) noexcept {
    return static_cast<Subset>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}

constexpr int cardinality(Subset s) noexcept {
    const auto bits = static_cast<std::uint8_t>(s);
    return (bits & 1) + ((bits >> 1) & 1);
}

inline constexpr double kMassTolerance = 1e-9;
inline constexpr double kConflictThreshold = 1.0 - 1e-12;

/// Trust placed in a source; 1 keeps its BBA intact, 0 turns it vacuous.
class Reliability {
  public:
    constexpr Reliability() noexcept = default;
    /// Throws InvalidParameters when alpha is outside [0, 1].
    explicit Reliability(double alpha);

    constexpr double value() const noexcept { return alpha_; }

    bool operator==(const Reliability&) const = default;

  private:
    double alpha_ = 1.0;
};

/// Basic belief assignment over {I, P}. Always normalized with m(empty) = 0.
class MassFunction {
  public:
    /// The vacuous assignment, m(omega) = 1.
    constexpr MassFunction() noexcept : mass_{0.0, 0.0, 0.0, 1.0} {}

    /// Throws InvalidMass unless the masses are nonnegative and sum to one.
    static MassFunction from_masses(double influence, double passive, double omega);

    static constexpr MassFunction vacuous() noexcept { return MassFunction{}; }

    /// Categorical assignment putting all mass on `s`. `s` must not be empty.
    static MassFunction categorical(Subset s);

    double operator[](Subset s) const noexcept { return mass_[index(s)]; }
    double influence() const noexcept { return mass_[index(Subset::influence)]; }
    double passive() const noexcept { return mass_[index(Subset::passive)]; }
    double omega() const noexcept { return mass_[index(Subset::omega)]; }

    const std::array<double, kSubsetCount>& masses() const noexcept { return mass_; }

    bool operator==(const MassFunction&) const = default;

  private:
    explicit constexpr MassFunction(std::array<double, kSubsetCount> m) noexcept : mass_(m) {}

    friend MassFunction combine_dempster(const MassFunction&, const MassFunction&);
    friend MassFunction discount(const MassFunction&, Reliability);

    std::array<double, kSubsetCount> mass_;
};

/// Dempster's rule of combination. Throws TotalConflict when the conflict
/// mass reaches 1 - 1e-12.
MassFunction combine_dempster(const MassFunction& a, const MassFunction& b);

/// Mass on the empty set before normalization, i.e. the conflict K.
double conflict(const MassFunction& a, const MassFunction& b) noexcept;

/// Classical discounting: scales every non-omega mass by alpha and moves the
/// remainder to omega.
MassFunction discount(const MassFunction& m, Reliability r);

/// Jousselme distance with D(A, B) = |A n B| / |A u B|. Result lies in [0, 1].
double jousselme_distance(const MassFunction& a, const MassFunction& b) noexcept;

/// Entry of the Jousselme similarity matrix. D(empty, empty) = 1 and
/// D(empty, X) = 0 otherwise.
double jaccard_similarity(Subset a, Subset b) noexcept;

} // namespace evinf
