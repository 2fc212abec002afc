#pragma once

// Deterministic random inputs for the test and acceptance suites.

#include <cmath>
#include <vector>

#include "ipent/complex_matrix.hpp"
#include "ipent/rng.hpp"
#include "ipent/states.hpp"

namespace ipent_test {

inline double rand_gauss(ipent::SplitMix64& rng) {
    const double u1 = 1.0 - rng.next_double();
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

inline ipent::Complex rand_complex(ipent::SplitMix64& rng) {
    return ipent::Complex(rand_gauss(rng), rand_gauss(rng));
}

inline ipent::ComplexMatrix random_matrix(ipent::SplitMix64& rng, std::size_t n) {
    ipent::ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rand_complex(rng);
    return m;
}

inline ipent::ComplexMatrix random_symmetric(ipent::SplitMix64& rng, std::size_t n) {
    const auto m = random_matrix(rng, n);
    return (m + m.transpose()) * ipent::Complex(0.5, 0.0);
}

inline ipent::ComplexMatrix random_antisymmetric(ipent::SplitMix64& rng, std::size_t n) {
    const auto m = random_matrix(rng, n);
    return (m - m.transpose()) * ipent::Complex(0.5, 0.0);
}

inline ipent::ComplexMatrix random_hermitian(ipent::SplitMix64& rng, std::size_t n) {
    const auto m = random_matrix(rng, n);
    return (m + m.adjoint()) * ipent::Complex(0.5, 0.0);
}

inline std::vector<ipent::Complex> random_unit_vector(ipent::SplitMix64& rng, std::size_t n) {
    std::vector<ipent::Complex> v(n);
    double sq = 0.0;
    for (auto& z : v) {
        z = rand_complex(rng);
        sq += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(sq);
    for (auto& z : v) z *= inv;
    return v;
}

/// Haar-ish random unitary via Gram-Schmidt on a Gaussian matrix.
inline ipent::ComplexMatrix random_unitary(ipent::SplitMix64& rng, std::size_t n) {
    ipent::ComplexMatrix m = random_matrix(rng, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            ipent::Complex proj(0.0, 0.0);
            for (std::size_t r = 0; r < n; ++r) proj += std::conj(m(r, prev)) * m(r, c);
            for (std::size_t r = 0; r < n; ++r) m(r, c) -= proj * m(r, prev);
        }
        double sq = 0.0;
        for (std::size_t r = 0; r < n; ++r) sq += std::norm(m(r, c));
        const double inv = 1.0 / std::sqrt(sq);
        for (std::size_t r = 0; r < n; ++r) m(r, c) *= inv;
    }
    return m;
}

inline ipent::ComplexMatrix random_orthogonal(ipent::SplitMix64& rng, std::size_t n) {
    ipent::ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rand_gauss(rng);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            double proj = 0.0;
            for (std::size_t r = 0; r < n; ++r) proj += m(r, prev).real() * m(r, c).real();
            for (std::size_t r = 0; r < n; ++r) m(r, c) -= proj * m(r, prev);
        }
        double sq = 0.0;
        for (std::size_t r = 0; r < n; ++r) sq += std::norm(m(r, c));
        const double inv = 1.0 / std::sqrt(sq);
        for (std::size_t r = 0; r < n; ++r) m(r, c) *= inv;
    }
    return m;
}

inline ipent::states::TwoBosonState random_boson_state(ipent::SplitMix64& rng, std::size_t n) {
    return ipent::states::TwoBosonState::from_matrix(random_symmetric(rng, n)).normalized();
}

inline ipent::states::TwoFermionState random_fermion_state(ipent::SplitMix64& rng, std::size_t n) {
    return ipent::states::TwoFermionState::from_matrix(random_antisymmetric(rng, n)).normalized();
}

/// A two-vector span with the second vector made orthogonal to the first.
inline std::pair<std::vector<ipent::Complex>, std::vector<ipent::Complex>> random_orthonormal_pair(
    ipent::SplitMix64& rng, std::size_t n) {
    auto c = random_unit_vector(rng, n);
    auto d = random_unit_vector(rng, n);
    ipent::Complex proj(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) proj += std::conj(c[i]) * d[i];
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        d[i] -= proj * c[i];
        sq += std::norm(d[i]);
    }
    const double inv = 1.0 / std::sqrt(sq);
    for (auto& z : d) z *= inv;
    return {std::move(c), std::move(d)};
}

/// Separable two-boson state: same-mode or orthogonal-pair, even odds.
inline ipent::states::TwoBosonState random_separable_boson(ipent::SplitMix64& rng, std::size_t n) {
    if (n == 1 || (rng.next() & 1u)) {
        return ipent::states::boson_same_mode_state(random_unit_vector(rng, n));
    }
    auto [c, d] = random_orthonormal_pair(rng, n);
    return ipent::states::boson_pair_state(c, d);
}

inline ipent::states::TwoFermionState random_separable_fermion(ipent::SplitMix64& rng,
                                                               std::size_t n) {
    auto [c, d] = random_orthonormal_pair(rng, n);
    return ipent::states::fermion_pair_state(c, d);
}

}  // namespace ipent_test
