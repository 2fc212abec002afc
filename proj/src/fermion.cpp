#include "ipent/fermion.hpp"

#include "ipent/error.hpp"

namespace ipent::fermion {

const char* verdict_kind_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Separable: return "Separable";
        case VerdictKind::Entangled: return "Entangled";
    }
    return "Unknown";
}

StandardForm standard_form(const states::TwoFermionState& state, double rank_tol) {
    if (!state.is_normalized(1e-10))
        raise(Errc::NotNormalized, "two-fermion analysis expects a normalized state");
    matfact::SkewCanonicalDecomposition dec = matfact::skew_canonical(state.omega(), rank_tol);
    std::vector<double> z(dec.pair_values.begin(), dec.pair_values.begin() + dec.rank / 2);
    return {std::move(dec.unitary), std::move(z), dec.rank};
}

Verdict classify(const states::TwoFermionState& state, double rank_tol) {
    StandardForm form = standard_form(state, rank_tol);
    // A valid state has rank >= 2 and even rank; rank 2 is a single Slater
    // pair and hence separable.
    const VerdictKind kind =
        form.rank == 2 ? VerdictKind::Separable : VerdictKind::Entangled;
    return {kind, form.rank, form.z};
}

}  // namespace ipent::fermion
