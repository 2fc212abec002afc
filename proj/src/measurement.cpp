#include "ipent/measurement.hpp"

#include <cmath>

#include "ipent/error.hpp"
#include "ipent/rng.hpp"

namespace ipent::measurement {

namespace {

template <typename State>
NumberDistribution distribution_from_state(const State& state) {
    if (!state.is_normalized(1e-10))
        raise(Errc::NotNormalized, "joint_distribution expects a normalized state");
    NumberDistribution dist;
    for (const auto& [occ, amp] : states::fock_amplitudes(state)) {
        const double p = std::norm(amp);
        if (p < kProbabilityFloor) continue;
        dist.entries.emplace(occ, p);
    }
    return dist;
}

}  // namespace

double NumberDistribution::total() const {
    double t = 0.0;
    for (const auto& [occ, p] : entries) t += p;
    return t;
}

NumberDistribution joint_distribution(const states::TwoBosonState& state) {
    return distribution_from_state(state);
}

NumberDistribution joint_distribution(const states::TwoFermionState& state) {
    return distribution_from_state(state);
}

NumberDistribution conditional_distribution(const NumberDistribution& dist, std::size_t mode,
                                            int observed) {
    NumberDistribution restricted;
    double total = 0.0;
    for (const auto& [occ, p] : dist.entries) {
        if (mode >= occ.size())
            raise(Errc::DimensionMismatch, "conditioning mode index out of range");
        if (occ[mode] == observed) {
            restricted.entries.emplace(occ, p);
            total += p;
        }
    }
    if (total <= 0.0)
        raise(Errc::ZeroProbabilityEvent, "conditioning event has zero probability");
    for (auto& [occ, p] : restricted.entries) p /= total;
    return restricted;
}

states::OccupationMap<std::uint64_t> sample(const NumberDistribution& dist, std::uint64_t n,
                                            std::uint64_t seed) {
    if (n == 0) raise(Errc::InvalidInput, "sample needs n >= 1");
    if (dist.entries.empty()) raise(Errc::InvalidInput, "sample needs a nonempty distribution");

    // Cumulative weights over the fixed occupation ordering.
    std::vector<const states::OccupationVector*> keys;
    std::vector<double> cumulative;
    double acc = 0.0;
    for (const auto& [occ, p] : dist.entries) {
        acc += p;
        keys.push_back(&occ);
        cumulative.push_back(acc);
    }
    const double total = acc;

    states::OccupationMap<std::uint64_t> counts;
    SplitMix64 rng(seed);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u = rng.next_double() * total;
        std::size_t k = 0;
        while (k + 1 < cumulative.size() && u >= cumulative[k]) ++k;
        ++counts[*keys[k]];
    }
    return counts;
}

}  // namespace ipent::measurement
