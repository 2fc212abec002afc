#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ipent/boson.hpp"
#include "ipent/complex_matrix.hpp"
#include "ipent/matfact.hpp"
#include "ipent/states.hpp"

namespace ipent::correlation {

inline constexpr double kDefaultCorrelationTol = 1e-9;

/// One-body observable F = sum_ij f_ij a_i^dag a_j with hermitian f. Inputs
/// within tolerance of hermitian are hermitized, anything worse is rejected.
class OneBodyOperator {
public:
    static OneBodyOperator from_matrix(ComplexMatrix f);

    /// Number operator of basis mode `mode`.
    static OneBodyOperator number_operator(std::size_t modes, std::size_t mode);

    /// Number operator of the (unit) mode vector v, f = v v^dag.
    static OneBodyOperator mode_number_operator(const std::vector<Complex>& v);

    std::size_t modes() const { return f_.rows(); }
    const ComplexMatrix& matrix() const { return f_; }

private:
    explicit OneBodyOperator(ComplexMatrix f) : f_(std::move(f)) {}
    ComplexMatrix f_;
};

/// Action of F on a state, unnormalized. On two-particle coefficient matrices
/// this is omega -> f omega + omega f^T, which preserves (anti)symmetry; on
/// single-particle amplitudes it is c -> f c.
states::TwoBosonState apply(const OneBodyOperator& op, const states::TwoBosonState& state);
states::TwoFermionState apply(const OneBodyOperator& op, const states::TwoFermionState& state);
states::SingleParticleState apply(const OneBodyOperator& op, const states::SingleParticleState& state);

/// <psi|F|psi> for a normalized state; real for hermitian F.
double expectation(const OneBodyOperator& op, const states::TwoBosonState& state);
double expectation(const OneBodyOperator& op, const states::TwoFermionState& state);
double expectation(const OneBodyOperator& op, const states::SingleParticleState& state);

struct CorrelationReport {
    bool correlated = false;
    std::optional<double> eigenvalue;  // present iff not correlated
    double residual = 0.0;             // ||F psi - <F> psi|| / ||psi||
};

CorrelationReport relative_correlation(const OneBodyOperator& op,
                                       const states::TwoBosonState& state,
                                       double tol = kDefaultCorrelationTol);
CorrelationReport relative_correlation(const OneBodyOperator& op,
                                       const states::TwoFermionState& state,
                                       double tol = kDefaultCorrelationTol);
CorrelationReport relative_correlation(const OneBodyOperator& op,
                                       const states::SingleParticleState& state,
                                       double tol = kDefaultCorrelationTol);

/// For a separable state, a basis in which the state is a joint eigenvector of
/// every mode number operator, together with the measured residuals (all must
/// come out <= the residual bound, otherwise the classifier and the witness
/// disagree and an InternalInconsistency error is raised). Empty for entangled
/// states.
struct CompleteSetWitness {
    ComplexMatrix basis;             // columns are the witness modes
    std::vector<double> residuals;   // one per mode number operator
};

std::optional<CompleteSetWitness> complete_set_witness(
    const states::TwoBosonState& state, double eps_sep = boson::kDefaultSepTol,
    double rank_tol = matfact::kDefaultRankTol, double residual_bound = kDefaultCorrelationTol);

std::optional<CompleteSetWitness> complete_set_witness(
    const states::TwoFermionState& state, double rank_tol = matfact::kDefaultRankTol,
    double residual_bound = kDefaultCorrelationTol);

}  // namespace ipent::correlation
