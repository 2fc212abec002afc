#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "ipent/complex_matrix.hpp"
#include "ipent/correlation.hpp"
#include "ipent/states.hpp"

namespace ipent::io {

using Json = nlohmann::ordered_json;

enum class StatisticsKind { Boson, Fermion, Single };

const char* statistics_name(StatisticsKind kind);

/// A state file: {"statistics": "boson"|"fermion"|"single", "modes": N,
/// "matrix": [[{"re":..,"im":..}, ...], ...]} (or "vector" for single),
/// optional "label". Amplitudes need not be normalized on disk; the loaded
/// state is normalized.
struct StateFile {
    StatisticsKind statistics = StatisticsKind::Boson;
    std::size_t modes = 0;
    std::string label;  // empty when absent
    std::variant<std::monostate, states::TwoBosonState, states::TwoFermionState,
                 states::SingleParticleState>
        state;

    const states::TwoBosonState& boson() const;
    const states::TwoFermionState& fermion() const;
    const states::SingleParticleState& single() const;
};

StateFile parse_state(const Json& j, const std::string& origin);
StateFile load_state_file(const std::string& path);

/// Operator file: {"modes": N, "matrix": [[{"re":..,"im":..}, ...], ...]},
/// hermitian, optional "label".
correlation::OneBodyOperator load_operator_file(const std::string& path);

// JSON shapes shared by state files and reports.
Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j, const std::string& origin);
Json matrix_to_json(const ComplexMatrix& m);
Json vector_to_json(const std::vector<Complex>& v);

}  // namespace ipent::io
