#include "ipent/boson.hpp"

#include <cmath>

#include "ipent/error.hpp"

namespace ipent::boson {

namespace {

void require_normalized(const states::TwoBosonState& state) {
    if (!state.is_normalized(1e-10))
        raise(Errc::NotNormalized, "two-boson analysis expects a normalized state");
}

bool adjacent_pairs_equal(const std::vector<double>& lambdas, std::size_t rank, double eps_sep) {
    if (rank == 0 || rank % 2 != 0) return false;
    const double ref = lambdas.front();
    for (std::size_t i = 0; i + 1 < rank; i += 2)
        if (std::abs(lambdas[i] - lambdas[i + 1]) > eps_sep * ref) return false;
    return true;
}

}  // namespace

const char* verdict_kind_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::SeparableSameMode: return "SeparableSameMode";
        case VerdictKind::SeparableOrthogonalPair: return "SeparableOrthogonalPair";
        case VerdictKind::EntangledPairForm: return "EntangledPairForm";
        case VerdictKind::EntangledGeneral: return "EntangledGeneral";
    }
    return "Unknown";
}

bool is_separable(VerdictKind kind) {
    return kind == VerdictKind::SeparableSameMode || kind == VerdictKind::SeparableOrthogonalPair;
}

StandardForm standard_form(const states::TwoBosonState& state, double rank_tol) {
    require_normalized(state);
    matfact::TakagiDecomposition dec = matfact::takagi(state.omega(), rank_tol);
    std::vector<double> lambdas(dec.values.begin(), dec.values.begin() + dec.rank);
    return {std::move(dec.unitary), std::move(lambdas), dec.rank};
}

Verdict classify(const states::TwoBosonState& state, double eps_sep, double rank_tol) {
    StandardForm form = standard_form(state, rank_tol);
    const std::size_t m = form.rank;
    const auto& l = form.lambdas;

    VerdictKind kind = VerdictKind::EntangledGeneral;
    if (m == 1) {
        kind = VerdictKind::SeparableSameMode;
    } else if (m == 2 && std::abs(l[0] - l[1]) <= eps_sep * l[0]) {
        kind = VerdictKind::SeparableOrthogonalPair;
    } else if (m >= 4 && adjacent_pairs_equal(l, m, eps_sep)) {
        kind = VerdictKind::EntangledPairForm;
    }

    double measure = entanglement_measure(form);
    if (is_separable(kind)) {
        if (measure > 1e-9)
            raise(Errc::InternalInconsistency, "separable verdict with nonzero measure");
        measure = 0.0;
    }
    return {kind, form.lambdas, m, measure};
}

double entanglement_measure(const StandardForm& form) {
    double sq = 0.0;
    for (const double l : form.lambdas) sq += l * l;
    if (std::abs(2.0 * sq - 1.0) > 1e-10)
        raise(Errc::NotNormalized, "entanglement measure expects a normalized lambda spectrum");

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < form.rank; i += 2) {
        const double p = form.lambdas[i] * form.lambdas[i + 1];
        if (p <= 0.0) continue;
        total += -4.0 * p * std::log(4.0 * p);
    }
    // 4 l_{2i-1} l_{2i} <= 1 for a normalized spectrum, so the sum is
    // nonnegative up to rounding.
    if (total < 0.0 && total > -1e-12) total = 0.0;
    return total;
}

UnbalanceTransform unbalance_transform(double r1, double r2, double phi) {
    if (!(r1 >= 0.0) || !(r2 >= 0.0) || !std::isfinite(phi))
        raise(Errc::InvalidInput, "unbalance_transform needs r1 >= r2 >= 0 and finite phi");
    if (r1 < r2) raise(Errc::InvalidInput, "unbalance_transform needs r1 >= r2");
    if (r1 + r2 <= 0.0) raise(Errc::InvalidInput, "unbalance_transform needs a nonzero state");

    const double s = r1 + r2;
    ComplexMatrix t(2, 2);
    if (r2 == 0.0) {
        // Nothing to mix; only the phase of the occupied mode is removed.
        t(0, 0) = std::polar(1.0, -0.5 * phi);
        t(1, 1) = std::polar(1.0, 0.5 * phi);
    } else {
        const Complex em = std::polar(1.0, -0.5 * phi);
        const Complex ep = std::polar(1.0, 0.5 * phi);
        const double ca = std::sqrt(r1 / s);
        const double cb = std::sqrt(r2 / s);
        // Applied as omega -> T omega T^T, this takes diag(r1 e^{i phi},
        // r2 e^{-i phi}) exactly to [[r1 - r2, sqrt(r1 r2)], [sqrt(r1 r2), 0]].
        t(0, 0) = em * ca;
        t(0, 1) = Complex(0.0, -1.0) * ep * cb;
        t(1, 0) = em * cb;
        t(1, 1) = Complex(0.0, 1.0) * ep * ca;
    }
    return {std::move(t), r1 - r2, 2.0 * std::sqrt(r1 * r2)};
}

std::optional<PairForm> pair_form_translate(const StandardForm& form, double eps_sep) {
    const std::size_t m = form.rank;
    if (m == 0 || m % 2 != 0) return std::nullopt;
    if (!adjacent_pairs_equal(form.lambdas, m, eps_sep)) return std::nullopt;

    PairForm pf;
    pf.pair_count = m / 2;
    for (std::size_t i = 0; i + 1 < m; i += 2) {
        pf.z.push_back(form.lambdas[i + 1]);
        pf.schmidt.push_back(2.0 * form.lambdas[i + 1]);
    }
    return pf;
}

}  // namespace ipent::boson
