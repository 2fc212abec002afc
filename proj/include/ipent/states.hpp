#pragma once

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

#include "ipent/complex_matrix.hpp"

namespace ipent::states {

inline constexpr double kNormFloorSquared = 1e-14;
inline constexpr double kStructureTol = 1e-12;      // relative symmetry/antisymmetry tolerance
inline constexpr double kNormalizedTol = 1e-13;

/// Particle counts per mode. Two-particle vectors sum to 2, fermionic counts
/// never exceed 1.
using OccupationVector = std::vector<int>;

/// Occupation keys iterate in lexicographically descending order, e.g. for
/// two particles in three modes: (2,0,0), (1,1,0), (1,0,1), (0,2,0), (0,1,1),
/// (0,0,2). Fixed so that file output is byte-stable.
struct OccupationOrder {
    bool operator()(const OccupationVector& a, const OccupationVector& b) const {
        return a > b;
    }
};

template <typename T>
using OccupationMap = std::map<OccupationVector, T, OccupationOrder>;

/// Two-boson state sum_ij omega_ij a_i^dag a_j^dag |0>. omega is complex
/// symmetric; inputs within kStructureTol of symmetric are symmetrized,
/// anything worse is rejected. Squared Fock norm is 2 tr(omega omega^dag).
class TwoBosonState {
public:
    static TwoBosonState from_matrix(ComplexMatrix omega);

    /// Same validation minus the nonzero-norm floor. Operator application can
    /// legitimately produce the zero vector; it flows through this factory.
    static TwoBosonState raw(ComplexMatrix omega);

    std::size_t modes() const { return omega_.rows(); }
    const ComplexMatrix& omega() const { return omega_; }

    double norm_squared() const;
    double norm() const;
    bool is_normalized(double tol = kNormalizedTol) const;
    TwoBosonState normalized() const;

private:
    explicit TwoBosonState(ComplexMatrix omega) : omega_(std::move(omega)) {}
    ComplexMatrix omega_;
};

/// Two-fermion state with antisymmetric coefficient matrix. Mode count need
/// not be even; the rank of omega still is.
class TwoFermionState {
public:
    static TwoFermionState from_matrix(ComplexMatrix omega);
    static TwoFermionState raw(ComplexMatrix omega);

    std::size_t modes() const { return omega_.rows(); }
    const ComplexMatrix& omega() const { return omega_; }

    double norm_squared() const;
    double norm() const;
    bool is_normalized(double tol = kNormalizedTol) const;
    TwoFermionState normalized() const;

private:
    explicit TwoFermionState(ComplexMatrix omega) : omega_(std::move(omega)) {}
    ComplexMatrix omega_;
};

/// Single-particle state sum_i c_i a_i^dag |0>.
class SingleParticleState {
public:
    static SingleParticleState from_vector(std::vector<Complex> amplitudes);
    static SingleParticleState raw(std::vector<Complex> amplitudes);

    std::size_t modes() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

    double norm_squared() const;
    double norm() const;
    bool is_normalized(double tol = kNormalizedTol) const;
    SingleParticleState normalized() const;

private:
    explicit SingleParticleState(std::vector<Complex> amplitudes)
        : amplitudes_(std::move(amplitudes)) {}
    std::vector<Complex> amplitudes_;
};

using TwoParticleState = std::variant<TwoBosonState, TwoFermionState>;

/// Fock-basis amplitudes. Bosons: sqrt(2) omega_ii for a doubly occupied
/// mode, 2 omega_ij (i < j) for two distinct modes. Fermions: 2 omega_ij
/// (i < j). For a normalized state the amplitudes form a unit vector.
OccupationMap<Complex> fock_amplitudes(const TwoBosonState& state);
OccupationMap<Complex> fock_amplitudes(const TwoFermionState& state);

/// Inverse of fock_amplitudes (unchecked norm, so zero maps round-trip too).
TwoBosonState boson_from_fock_amplitudes(std::size_t modes, const OccupationMap<Complex>& amps);
TwoFermionState fermion_from_fock_amplitudes(std::size_t modes, const OccupationMap<Complex>& amps);

/// Inner product <a|b> via Fock amplitudes; the first argument is conjugated.
Complex overlap(const TwoBosonState& a, const TwoBosonState& b);
Complex overlap(const TwoFermionState& a, const TwoFermionState& b);
Complex overlap(const SingleParticleState& a, const SingleParticleState& b);

/// Variant overlap; rejects mixed statistics.
Complex overlap(const TwoParticleState& a, const TwoParticleState& b);

// Constructors for the basic product states: c^dag d^dag |0> and
// c^dag c^dag |0> built from explicit mode vectors, normalized.
TwoBosonState boson_pair_state(const std::vector<Complex>& c, const std::vector<Complex>& d);
TwoBosonState boson_same_mode_state(const std::vector<Complex>& c);
TwoFermionState fermion_pair_state(const std::vector<Complex>& c, const std::vector<Complex>& d);

}  // namespace ipent::states
