#pragma once

// Test-only singular value oracle: one-sided (Hestenes) Jacobi. Orthogonalizes
// column pairs by right rotations until every pair is numerically orthogonal;
// the singular values are the final column norms. Kept deliberately separate
// from the library's two-sided solver so the two can cross-check each other.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "ipent/complex_matrix.hpp"

namespace ipent_test {

inline std::vector<double> reference_singular_values(ipent::ComplexMatrix m) {
    using ipent::Complex;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool converged = true;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double app = 0.0, aqq = 0.0;
                Complex apq(0.0, 0.0);
                for (std::size_t r = 0; r < rows; ++r) {
                    app += std::norm(m(r, p));
                    aqq += std::norm(m(r, q));
                    apq += std::conj(m(r, p)) * m(r, q);
                }
                const double mag = std::abs(apq);
                if (mag <= 1e-15 * std::sqrt(app * aqq) || mag == 0.0) continue;
                converged = false;

                const Complex alpha = apq / mag;
                const double tau = (aqq - app) / (2.0 * mag);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t r = 0; r < rows; ++r) {
                    const Complex up = m(r, p);
                    const Complex vq = m(r, q);
                    m(r, p) = c * up - s * std::conj(alpha) * vq;
                    m(r, q) = s * alpha * up + c * vq;
                }
            }
        }
        if (converged) break;
    }

    std::vector<double> sv(cols, 0.0);
    for (std::size_t cidx = 0; cidx < cols; ++cidx) {
        double sq = 0.0;
        for (std::size_t r = 0; r < rows; ++r) sq += std::norm(m(r, cidx));
        sv[cidx] = std::sqrt(sq);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

}  // namespace ipent_test
