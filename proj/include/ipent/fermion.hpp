#pragma once

#include <cstddef>
#include <vector>

#include "ipent/complex_matrix.hpp"
#include "ipent/matfact.hpp"
#include "ipent/states.hpp"

namespace ipent::fermion {

/// Canonical form of a two-fermion state: omega = basis B basis^T with B the
/// antisymmetric block diagonal of the z_i. Column pairs (2i, 2i+1) of the
/// basis are the paired canonical modes. z is trimmed to rank/2; for a
/// normalized state 4 sum(z^2) = 1.
struct StandardForm {
    ComplexMatrix basis;
    std::vector<double> z;
    std::size_t rank = 0;
};

enum class VerdictKind {
    Separable,  // rank 2: a single Slater pair
    Entangled,  // rank > 2
};

const char* verdict_kind_name(VerdictKind kind);

struct Verdict {
    VerdictKind kind;
    std::size_t rank = 0;
    std::vector<double> z;
};

StandardForm standard_form(const states::TwoFermionState& state,
                           double rank_tol = matfact::kDefaultRankTol);

Verdict classify(const states::TwoFermionState& state,
                 double rank_tol = matfact::kDefaultRankTol);

}  // namespace ipent::fermion
