#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ipent/complex_matrix.hpp"
#include "ipent/states.hpp"

namespace ipent::oracle {

enum class Branch {
    SameMode,        // best product candidate was c^dag c^dag |0>
    OrthogonalPair,  // best product candidate was c^dag d^dag |0>, c orthogonal to d
};

const char* branch_name(Branch branch);

struct Options {
    std::size_t restarts = 32;
    double epsilon = 1e-7;  // separable iff best_overlap >= 1 - epsilon
    std::uint64_t seed = 0;
    std::size_t max_iterations = 500;
};

struct OracleVerdict {
    bool separable = false;
    double best_overlap = 0.0;
    Branch branch = Branch::SameMode;
    /// Unit mode vectors (c, d) of the best product state; present iff
    /// separable. c == d for the same-mode branch.
    std::optional<std::pair<std::vector<Complex>, std::vector<Complex>>> witness;
    std::size_t restarts_used = 0;
};

/// Independent separability check: maximize the overlap with normalized
/// product states c^dag c^dag |0> and c^dag d^dag |0> (c orthogonal to d) by
/// alternating closed-form ascent from seeded random starts. Deliberately
/// shares nothing with the factorization path beyond matrix-vector products.
OracleVerdict oracle_separability(const states::TwoBosonState& state, const Options& options = {});

/// Fermion version; Pauli exclusion removes the same-mode branch.
OracleVerdict oracle_separability(const states::TwoFermionState& state, const Options& options = {});

}  // namespace ipent::oracle
