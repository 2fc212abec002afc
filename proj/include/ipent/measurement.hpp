#pragma once

#include <cstddef>
#include <cstdint>

#include "ipent/states.hpp"

namespace ipent::measurement {

/// Probabilities below this are dropped from distributions to keep file
/// output stable.
inline constexpr double kProbabilityFloor = 1e-15;

/// Joint particle-number distribution over occupation vectors. Probabilities
/// are nonnegative and sum to 1 within 1e-12.
struct NumberDistribution {
    states::OccupationMap<double> entries;

    double total() const;
};

NumberDistribution joint_distribution(const states::TwoBosonState& state);
NumberDistribution joint_distribution(const states::TwoFermionState& state);

/// Restriction to outcomes with counts[mode] == observed, renormalized.
NumberDistribution conditional_distribution(const NumberDistribution& dist, std::size_t mode,
                                            int observed);

/// n inverse-CDF draws over the fixed occupation ordering, driven by
/// SplitMix64(seed). Deterministic given (dist, n, seed); counts sum to n.
states::OccupationMap<std::uint64_t> sample(const NumberDistribution& dist, std::uint64_t n,
                                            std::uint64_t seed);

}  // namespace ipent::measurement
