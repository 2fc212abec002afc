#include "ipent/states.hpp"

#include <cmath>
#include <utility>

#include "ipent/error.hpp"
#include "ipent/matfact.hpp"

namespace ipent::states {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void check_two_particle_shape(const ComplexMatrix& omega, const char* kind) {
    if (!omega.is_square())
        raise(Errc::InvalidInput, std::string(kind) + " coefficient matrix must be square");
    if (omega.rows() > matfact::kMaxModes)
        raise(Errc::InvalidInput, std::string(kind) + " supports at most " +
                                      std::to_string(matfact::kMaxModes) + " modes");
    if (!omega.all_finite())
        raise(Errc::InvalidInput, std::string(kind) + " coefficient matrix has non-finite entries");
}

double fock_norm_squared(const ComplexMatrix& omega) {
    // 2 tr(omega omega^dag) = 2 ||omega||_F^2
    const double f = omega.frobenius_norm();
    return 2.0 * f * f;
}

}  // namespace

TwoBosonState TwoBosonState::from_matrix(ComplexMatrix omega) {
    TwoBosonState state = raw(std::move(omega));
    if (state.norm_squared() <= kNormFloorSquared)
        raise(Errc::ZeroState, "two-boson state has (near-)zero norm");
    return state;
}

TwoBosonState TwoBosonState::raw(ComplexMatrix omega) {
    check_two_particle_shape(omega, "TwoBosonState");
    const double scale = omega.frobenius_norm();
    if (symmetric_deviation(omega) > kStructureTol * scale)
        raise(Errc::NotSymmetric, "two-boson coefficient matrix is not symmetric");
    ComplexMatrix sym = (omega + omega.transpose()) * Complex(0.5, 0.0);
    return TwoBosonState(std::move(sym));
}

double TwoBosonState::norm_squared() const { return fock_norm_squared(omega_); }
double TwoBosonState::norm() const { return std::sqrt(norm_squared()); }

bool TwoBosonState::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

TwoBosonState TwoBosonState::normalized() const {
    const double sq = norm_squared();
    if (sq <= kNormFloorSquared) raise(Errc::ZeroState, "cannot normalize a zero two-boson state");
    return TwoBosonState(omega_ * Complex(1.0 / std::sqrt(sq), 0.0));
}

TwoFermionState TwoFermionState::from_matrix(ComplexMatrix omega) {
    TwoFermionState state = raw(std::move(omega));
    if (state.norm_squared() <= kNormFloorSquared)
        raise(Errc::ZeroState, "two-fermion state has (near-)zero norm");
    return state;
}

TwoFermionState TwoFermionState::raw(ComplexMatrix omega) {
    check_two_particle_shape(omega, "TwoFermionState");
    const double scale = omega.frobenius_norm();
    if (antisymmetric_deviation(omega) > kStructureTol * scale)
        raise(Errc::NotAntisymmetric, "two-fermion coefficient matrix is not antisymmetric");
    ComplexMatrix skw = (omega - omega.transpose()) * Complex(0.5, 0.0);
    return TwoFermionState(std::move(skw));
}

double TwoFermionState::norm_squared() const { return fock_norm_squared(omega_); }
double TwoFermionState::norm() const { return std::sqrt(norm_squared()); }

bool TwoFermionState::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

TwoFermionState TwoFermionState::normalized() const {
    const double sq = norm_squared();
    if (sq <= kNormFloorSquared)
        raise(Errc::ZeroState, "cannot normalize a zero two-fermion state");
    return TwoFermionState(omega_ * Complex(1.0 / std::sqrt(sq), 0.0));
}

SingleParticleState SingleParticleState::from_vector(std::vector<Complex> amplitudes) {
    SingleParticleState state = raw(std::move(amplitudes));
    if (state.norm_squared() <= kNormFloorSquared)
        raise(Errc::ZeroState, "single-particle state has (near-)zero norm");
    return state;
}

SingleParticleState SingleParticleState::raw(std::vector<Complex> amplitudes) {
    if (amplitudes.empty() || amplitudes.size() > matfact::kMaxModes)
        raise(Errc::InvalidInput, "single-particle state needs between 1 and 64 modes");
    for (const auto& z : amplitudes)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            raise(Errc::InvalidInput, "single-particle amplitudes must be finite");
    return SingleParticleState(std::move(amplitudes));
}

double SingleParticleState::norm_squared() const {
    double sq = 0.0;
    for (const auto& z : amplitudes_) sq += std::norm(z);
    return sq;
}

double SingleParticleState::norm() const { return std::sqrt(norm_squared()); }

bool SingleParticleState::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

SingleParticleState SingleParticleState::normalized() const {
    const double sq = norm_squared();
    if (sq <= kNormFloorSquared)
        raise(Errc::ZeroState, "cannot normalize a zero single-particle state");
    std::vector<Complex> out = amplitudes_;
    const double inv = 1.0 / std::sqrt(sq);
    for (auto& z : out) z *= inv;
    return SingleParticleState(std::move(out));
}

OccupationMap<Complex> fock_amplitudes(const TwoBosonState& state) {
    const auto& omega = state.omega();
    const std::size_t n = state.modes();
    OccupationMap<Complex> amps;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Complex amp = (i == j) ? kSqrt2 * omega(i, i) : 2.0 * omega(i, j);
            if (amp == Complex(0.0, 0.0)) continue;
            OccupationVector occ(n, 0);
            occ[i] += 1;
            occ[j] += 1;
            amps.emplace(std::move(occ), amp);
        }
    }
    return amps;
}

OccupationMap<Complex> fock_amplitudes(const TwoFermionState& state) {
    const auto& omega = state.omega();
    const std::size_t n = state.modes();
    OccupationMap<Complex> amps;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex amp = 2.0 * omega(i, j);
            if (amp == Complex(0.0, 0.0)) continue;
            OccupationVector occ(n, 0);
            occ[i] = 1;
            occ[j] = 1;
            amps.emplace(std::move(occ), amp);
        }
    }
    return amps;
}

TwoBosonState boson_from_fock_amplitudes(std::size_t modes, const OccupationMap<Complex>& amps) {
    ComplexMatrix omega(modes, modes);
    for (const auto& [occ, amp] : amps) {
        if (occ.size() != modes) raise(Errc::DimensionMismatch, "occupation length mismatch");
        std::vector<std::size_t> where;
        for (std::size_t i = 0; i < modes; ++i)
            for (int k = 0; k < occ[i]; ++k) where.push_back(i);
        if (where.size() != 2) raise(Errc::InvalidInput, "occupation must hold two particles");
        if (where[0] == where[1]) {
            omega(where[0], where[0]) = amp / kSqrt2;
        } else {
            omega(where[0], where[1]) = amp * 0.5;
            omega(where[1], where[0]) = amp * 0.5;
        }
    }
    return TwoBosonState::raw(std::move(omega));
}

TwoFermionState fermion_from_fock_amplitudes(std::size_t modes, const OccupationMap<Complex>& amps) {
    ComplexMatrix omega(modes, modes);
    for (const auto& [occ, amp] : amps) {
        if (occ.size() != modes) raise(Errc::DimensionMismatch, "occupation length mismatch");
        std::vector<std::size_t> where;
        for (std::size_t i = 0; i < modes; ++i) {
            if (occ[i] > 1) raise(Errc::InvalidInput, "fermionic occupation exceeds 1");
            if (occ[i] == 1) where.push_back(i);
        }
        if (where.size() != 2) raise(Errc::InvalidInput, "occupation must hold two particles");
        omega(where[0], where[1]) = amp * 0.5;
        omega(where[1], where[0]) = amp * Complex(-0.5, 0.0);
    }
    return TwoFermionState::raw(std::move(omega));
}

namespace {

template <typename State>
Complex overlap_via_amplitudes(const State& a, const State& b) {
    if (a.modes() != b.modes())
        raise(Errc::DimensionMismatch, "overlap requires matching mode counts");
    const auto amps_a = fock_amplitudes(a);
    const auto amps_b = fock_amplitudes(b);
    Complex acc(0.0, 0.0);
    for (const auto& [occ, amp] : amps_a) {
        const auto it = amps_b.find(occ);
        if (it != amps_b.end()) acc += std::conj(amp) * it->second;
    }
    return acc;
}

}  // namespace

Complex overlap(const TwoBosonState& a, const TwoBosonState& b) {
    return overlap_via_amplitudes(a, b);
}

Complex overlap(const TwoFermionState& a, const TwoFermionState& b) {
    return overlap_via_amplitudes(a, b);
}

Complex overlap(const SingleParticleState& a, const SingleParticleState& b) {
    if (a.modes() != b.modes())
        raise(Errc::DimensionMismatch, "overlap requires matching mode counts");
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.modes(); ++i)
        acc += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return acc;
}

Complex overlap(const TwoParticleState& a, const TwoParticleState& b) {
    if (a.index() != b.index())
        raise(Errc::StatisticsMismatch, "overlap requires matching particle statistics");
    if (std::holds_alternative<TwoBosonState>(a))
        return overlap(std::get<TwoBosonState>(a), std::get<TwoBosonState>(b));
    return overlap(std::get<TwoFermionState>(a), std::get<TwoFermionState>(b));
}

namespace {

ComplexMatrix outer_sym(const std::vector<Complex>& c, const std::vector<Complex>& d, double sign) {
    if (c.size() != d.size()) raise(Errc::DimensionMismatch, "mode vectors of different length");
    const std::size_t n = c.size();
    ComplexMatrix omega(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            omega(i, j) = 0.5 * (c[i] * d[j] + sign * d[i] * c[j]);
    return omega;
}

}  // namespace

TwoBosonState boson_pair_state(const std::vector<Complex>& c, const std::vector<Complex>& d) {
    return TwoBosonState::from_matrix(outer_sym(c, d, 1.0)).normalized();
}

TwoBosonState boson_same_mode_state(const std::vector<Complex>& c) {
    return boson_pair_state(c, c);
}

TwoFermionState fermion_pair_state(const std::vector<Complex>& c, const std::vector<Complex>& d) {
    return TwoFermionState::from_matrix(outer_sym(c, d, -1.0)).normalized();
}

}  // namespace ipent::states
