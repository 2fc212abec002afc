#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ipent/complex_matrix.hpp"
#include "ipent/matfact.hpp"
#include "ipent/states.hpp"

namespace ipent::boson {

/// Relative tolerance for "these two lambdas are equal" decisions, measured
/// against lambda_1. Separate from the rank tolerance because it compares two
/// nonzero values.
inline constexpr double kDefaultSepTol = 1e-8;

/// Diagonal standard form of a two-boson state: omega = basis diag(lambdas)
/// basis^T with the basis columns the canonical modes. lambdas are trimmed to
/// the numerical rank; 2 sum(lambda^2) = 1 for normalized input.
struct StandardForm {
    ComplexMatrix basis;
    std::vector<double> lambdas;
    std::size_t rank = 0;
};

enum class VerdictKind {
    SeparableSameMode,        // rank 1: c^dag c^dag |0>
    SeparableOrthogonalPair,  // balanced rank 2: c^dag d^dag |0>
    EntangledPairForm,        // >= 2 equal lambda pairs: distinguishable-equivalent
    EntangledGeneral,
};

const char* verdict_kind_name(VerdictKind kind);
bool is_separable(VerdictKind kind);

struct Verdict {
    VerdictKind kind;
    std::vector<double> lambdas;
    std::size_t rank = 0;
    double measure = 0.0;  // exactly 0 for separable verdicts
};

/// Lambda spectrum split into equal adjacent pairs: the state is equivalent to
/// a distinguishable two-particle state with Schmidt coefficients 2 z_i.
struct PairForm {
    std::size_t pair_count = 0;
    std::vector<double> z;        // z_i = lambda_{2i}, descending
    std::vector<double> schmidt;  // 2 z_i
};

/// The balanced/unbalanced basis change for a rank-2 diagonal standard form
/// diag(r1 e^{i phi}, r2 e^{-i phi}): a 2x2 unitary taking it to amplitudes
/// (r1 - r2) on f1 f1 and 2 sqrt(r1 r2) on f1 f2.
struct UnbalanceTransform {
    ComplexMatrix transform;
    double out_same = 0.0;   // r1 - r2
    double out_cross = 0.0;  // 2 sqrt(r1 r2)
};

StandardForm standard_form(const states::TwoBosonState& state,
                           double rank_tol = matfact::kDefaultRankTol);

Verdict classify(const states::TwoBosonState& state, double eps_sep = kDefaultSepTol,
                 double rank_tol = matfact::kDefaultRankTol);

/// -4 sum_i |l_{2i-1} l_{2i}| ln|4 l_{2i-1} l_{2i}| over adjacent descending
/// pairs up to rank; an unpaired trailing lambda contributes nothing. Requires
/// normalized lambdas (2 sum l^2 = 1).
double entanglement_measure(const StandardForm& form);

UnbalanceTransform unbalance_transform(double r1, double r2, double phi);

/// Translation into the distinguishable picture; empty when the spectrum does
/// not split into equal adjacent pairs.
std::optional<PairForm> pair_form_translate(const StandardForm& form,
                                            double eps_sep = kDefaultSepTol);

}  // namespace ipent::boson
