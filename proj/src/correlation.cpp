#include "ipent/correlation.hpp"

#include <cmath>

#include "ipent/error.hpp"
#include "ipent/fermion.hpp"

namespace ipent::correlation {

namespace {

void check_dims(std::size_t op_modes, std::size_t state_modes) {
    if (op_modes != state_modes)
        raise(Errc::DimensionMismatch, "operator and state mode counts differ");
}

// Coefficient-matrix action of F on a two-particle state: from
// [F, a_i^dag] = sum_k f_ki a_k^dag one gets omega -> f omega + omega f^T,
// which preserves both symmetry and antisymmetry.
ComplexMatrix coefficient_action(const ComplexMatrix& f, const ComplexMatrix& omega) {
    return f * omega + omega * f.transpose();
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    // Re tr(a^dag b)
    double acc = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            acc += (std::conj(a(r, c)) * b(r, c)).real();
    return acc;
}

}  // namespace

OneBodyOperator OneBodyOperator::from_matrix(ComplexMatrix f) {
    if (!f.is_square()) raise(Errc::InvalidInput, "one-body operator matrix must be square");
    if (f.rows() > matfact::kMaxModes)
        raise(Errc::InvalidInput, "one-body operator supports at most 64 modes");
    if (!f.all_finite()) raise(Errc::InvalidInput, "one-body operator has non-finite entries");
    if (hermitian_deviation(f) > 1e-12 * std::max(f.frobenius_norm(), 1.0))
        raise(Errc::NotHermitian, "one-body operator matrix is not hermitian");
    ComplexMatrix herm = (f + f.adjoint()) * Complex(0.5, 0.0);
    return OneBodyOperator(std::move(herm));
}

OneBodyOperator OneBodyOperator::number_operator(std::size_t modes, std::size_t mode) {
    if (mode >= modes) raise(Errc::InvalidInput, "number operator mode index out of range");
    ComplexMatrix f(modes, modes);
    f(mode, mode) = 1.0;
    return OneBodyOperator(std::move(f));
}

OneBodyOperator OneBodyOperator::mode_number_operator(const std::vector<Complex>& v) {
    if (v.empty()) raise(Errc::InvalidInput, "empty mode vector");
    const std::size_t n = v.size();
    ComplexMatrix f(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f(i, j) = v[i] * std::conj(v[j]);
    return OneBodyOperator(std::move(f));
}

states::TwoBosonState apply(const OneBodyOperator& op, const states::TwoBosonState& state) {
    check_dims(op.modes(), state.modes());
    return states::TwoBosonState::raw(coefficient_action(op.matrix(), state.omega()));
}

states::TwoFermionState apply(const OneBodyOperator& op, const states::TwoFermionState& state) {
    check_dims(op.modes(), state.modes());
    return states::TwoFermionState::raw(coefficient_action(op.matrix(), state.omega()));
}

states::SingleParticleState apply(const OneBodyOperator& op,
                                  const states::SingleParticleState& state) {
    check_dims(op.modes(), state.modes());
    return states::SingleParticleState::raw(op.matrix().apply(state.amplitudes()));
}

namespace {

// <psi|F|psi> / <psi|psi> on the coefficient matrix: Fock inner products of
// symmetric or antisymmetric coefficient matrices reduce to 2 tr(a^dag b).
double expectation_two_particle(const ComplexMatrix& f, const ComplexMatrix& omega) {
    const ComplexMatrix action = coefficient_action(f, omega);
    const double num = 2.0 * real_trace_product(omega, action);
    const double den = 2.0 * real_trace_product(omega, omega);
    return num / den;
}

struct ResidualResult {
    double expectation = 0.0;
    double residual = 0.0;
};

ResidualResult residual_two_particle(const ComplexMatrix& f, const ComplexMatrix& omega) {
    const double mu = expectation_two_particle(f, omega);
    const ComplexMatrix delta = coefficient_action(f, omega) - omega * Complex(mu, 0.0);
    return {mu, delta.frobenius_norm() / omega.frobenius_norm()};
}

CorrelationReport report_from(const ResidualResult& r, double tol) {
    CorrelationReport rep;
    rep.residual = r.residual;
    rep.correlated = r.residual > tol;
    if (!rep.correlated) rep.eigenvalue = r.expectation;
    return rep;
}

}  // namespace

double expectation(const OneBodyOperator& op, const states::TwoBosonState& state) {
    check_dims(op.modes(), state.modes());
    return expectation_two_particle(op.matrix(), state.omega());
}

double expectation(const OneBodyOperator& op, const states::TwoFermionState& state) {
    check_dims(op.modes(), state.modes());
    return expectation_two_particle(op.matrix(), state.omega());
}

double expectation(const OneBodyOperator& op, const states::SingleParticleState& state) {
    check_dims(op.modes(), state.modes());
    const auto fc = op.matrix().apply(state.amplitudes());
    Complex num(0.0, 0.0);
    double den = 0.0;
    for (std::size_t i = 0; i < fc.size(); ++i) {
        num += std::conj(state.amplitudes()[i]) * fc[i];
        den += std::norm(state.amplitudes()[i]);
    }
    return num.real() / den;
}

CorrelationReport relative_correlation(const OneBodyOperator& op,
                                       const states::TwoBosonState& state, double tol) {
    check_dims(op.modes(), state.modes());
    return report_from(residual_two_particle(op.matrix(), state.omega()), tol);
}

CorrelationReport relative_correlation(const OneBodyOperator& op,
                                       const states::TwoFermionState& state, double tol) {
    check_dims(op.modes(), state.modes());
    return report_from(residual_two_particle(op.matrix(), state.omega()), tol);
}

CorrelationReport relative_correlation(const OneBodyOperator& op,
                                       const states::SingleParticleState& state, double tol) {
    check_dims(op.modes(), state.modes());
    const double mu = expectation(op, state);
    const auto fc = op.matrix().apply(state.amplitudes());
    double delta_sq = 0.0;
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < fc.size(); ++i) {
        delta_sq += std::norm(fc[i] - mu * state.amplitudes()[i]);
        norm_sq += std::norm(state.amplitudes()[i]);
    }
    ResidualResult r{mu, std::sqrt(delta_sq / norm_sq)};
    return report_from(r, tol);
}

namespace {

template <typename State>
CompleteSetWitness verify_witness(const ComplexMatrix& basis, const State& state,
                                  double residual_bound) {
    CompleteSetWitness witness;
    witness.basis = basis;
    for (std::size_t i = 0; i < basis.cols(); ++i) {
        const auto op = OneBodyOperator::mode_number_operator(basis.column(i));
        const auto rep = relative_correlation(op, state, residual_bound);
        witness.residuals.push_back(rep.residual);
        if (rep.residual > residual_bound)
            raise(Errc::InternalInconsistency,
                  "separable verdict but a witness number operator has residual " +
                      std::to_string(rep.residual));
    }
    return witness;
}

}  // namespace

std::optional<CompleteSetWitness> complete_set_witness(const states::TwoBosonState& state,
                                                       double eps_sep, double rank_tol,
                                                       double residual_bound) {
    const boson::Verdict verdict = boson::classify(state, eps_sep, rank_tol);
    if (!boson::is_separable(verdict.kind)) return std::nullopt;

    const boson::StandardForm form = boson::standard_form(state, rank_tol);
    ComplexMatrix basis = form.basis;
    if (verdict.kind == boson::VerdictKind::SeparableOrthogonalPair) {
        // Balanced rank 2: the canonical modes carry half a particle each; the
        // joint number eigenbasis is the unbalance-transformed pair.
        const auto unb = boson::unbalance_transform(form.lambdas[0], form.lambdas[1], 0.0);
        ComplexMatrix mixer = ComplexMatrix::identity(state.modes());
        const ComplexMatrix m_adj = unb.transform.adjoint();
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) mixer(r, c) = m_adj(r, c);
        basis = basis * mixer;
    }
    return verify_witness(basis, state, residual_bound);
}

std::optional<CompleteSetWitness> complete_set_witness(const states::TwoFermionState& state,
                                                       double rank_tol, double residual_bound) {
    const fermion::Verdict verdict = fermion::classify(state, rank_tol);
    if (verdict.kind != fermion::VerdictKind::Separable) return std::nullopt;
    const fermion::StandardForm form = fermion::standard_form(state, rank_tol);
    return verify_witness(form.basis, state, residual_bound);
}

}  // namespace ipent::correlation
