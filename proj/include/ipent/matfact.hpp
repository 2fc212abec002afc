#pragma once

#include <cstddef>
#include <vector>

#include "ipent/complex_matrix.hpp"

namespace ipent::matfact {

inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr std::size_t kMaxModes = 64;
inline constexpr std::size_t kSweepBudget = 100;

struct HermitianEig {
    std::vector<double> eigenvalues;  // real, descending
    ComplexMatrix eigenvectors;       // columns; H = V diag(w) V^dag
};

/// Factorization S = U diag(values) U^T of a complex symmetric matrix with U
/// unitary and the values real, nonnegative and descending. The values equal
/// the singular values of S; phases are absorbed into the columns of U.
struct TakagiDecomposition {
    ComplexMatrix unitary;
    std::vector<double> values;
    std::size_t rank = 0;
};

/// Factorization A = U B U^T of a complex antisymmetric matrix, with B the
/// block diagonal [[0, z_i], [-z_i, 0]] ... 0 and the z_i descending. The
/// singular values of A are each z_i twice; rank is even.
struct SkewCanonicalDecomposition {
    ComplexMatrix unitary;
    std::vector<double> pair_values;  // z_i, length floor(N/2)
    std::size_t rank = 0;             // 2 * number of z_i above the rank threshold
};

/// Cyclic Jacobi eigensolver for a hermitian matrix. Deterministic pivot
/// order, sweep budget kSweepBudget.
HermitianEig hermitian_eig(const ComplexMatrix& h);

/// Simultaneous diagonalization of two commuting real symmetric matrices by a
/// single real orthogonal transformation (joint Jacobi rotations). The result
/// is returned as a ComplexMatrix with zero imaginary parts.
ComplexMatrix simdiag_commuting_real_symmetric(const ComplexMatrix& f, const ComplexMatrix& g);

TakagiDecomposition takagi(const ComplexMatrix& s, double rank_tol = kDefaultRankTol);

SkewCanonicalDecomposition skew_canonical(const ComplexMatrix& a, double rank_tol = kDefaultRankTol);

/// Largest M such that values[M-1] > rank_tol * values[0]; 0 when everything
/// sits below an absolute floor. values must be nonnegative and descending.
std::size_t numerical_rank(const std::vector<double>& values, double rank_tol = kDefaultRankTol);

/// The canonical antisymmetric block matrix blkdiag([[0, z_i], [-z_i, 0]], 0...).
ComplexMatrix skew_block_matrix(std::size_t n, const std::vector<double>& pair_values);

}  // namespace ipent::matfact
