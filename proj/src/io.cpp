#include "ipent/state_io.hpp"

#include <fstream>

#include "ipent/error.hpp"
#include "ipent/matfact.hpp"

namespace ipent::io {

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::ParseError, "cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        raise(Errc::ParseError, path + ": " + e.what());
    }
    return j;
}

double number_field(const Json& j, const char* key, const std::string& origin) {
    if (!j.contains(key) || !j[key].is_number())
        raise(Errc::ParseError, origin + ": missing numeric field '" + key + "'");
    return j[key].get<double>();
}

ComplexMatrix parse_matrix(const Json& j, std::size_t modes, const std::string& origin) {
    if (!j.is_array() || j.size() != modes)
        raise(Errc::ParseError, origin + ": 'matrix' must be an array of " +
                                    std::to_string(modes) + " rows");
    ComplexMatrix m(modes, modes);
    for (std::size_t r = 0; r < modes; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != modes)
            raise(Errc::ParseError, origin + ": matrix row " + std::to_string(r) +
                                        " must hold " + std::to_string(modes) + " entries");
        for (std::size_t c = 0; c < modes; ++c) m(r, c) = complex_from_json(row[c], origin);
    }
    if (!m.all_finite()) raise(Errc::ParseError, origin + ": matrix entries must be finite");
    return m;
}

std::vector<Complex> parse_vector(const Json& j, std::size_t modes, const std::string& origin) {
    if (!j.is_array() || j.size() != modes)
        raise(Errc::ParseError, origin + ": 'vector' must be an array of " +
                                    std::to_string(modes) + " entries");
    std::vector<Complex> v(modes);
    for (std::size_t i = 0; i < modes; ++i) v[i] = complex_from_json(j[i], origin);
    return v;
}

std::size_t parse_modes(const Json& j, const std::string& origin) {
    const double modes_raw = number_field(j, "modes", origin);
    if (modes_raw < 1 || modes_raw > static_cast<double>(matfact::kMaxModes) ||
        modes_raw != static_cast<double>(static_cast<std::size_t>(modes_raw)))
        raise(Errc::ParseError, origin + ": 'modes' must be an integer in [1, 64]");
    return static_cast<std::size_t>(modes_raw);
}

}  // namespace

const char* statistics_name(StatisticsKind kind) {
    switch (kind) {
        case StatisticsKind::Boson: return "boson";
        case StatisticsKind::Fermion: return "fermion";
        case StatisticsKind::Single: return "single";
    }
    return "unknown";
}

const states::TwoBosonState& StateFile::boson() const {
    if (!std::holds_alternative<states::TwoBosonState>(state))
        raise(Errc::StatisticsMismatch, "state file does not hold a two-boson state");
    return std::get<states::TwoBosonState>(state);
}

const states::TwoFermionState& StateFile::fermion() const {
    if (!std::holds_alternative<states::TwoFermionState>(state))
        raise(Errc::StatisticsMismatch, "state file does not hold a two-fermion state");
    return std::get<states::TwoFermionState>(state);
}

const states::SingleParticleState& StateFile::single() const {
    if (!std::holds_alternative<states::SingleParticleState>(state))
        raise(Errc::StatisticsMismatch, "state file does not hold a single-particle state");
    return std::get<states::SingleParticleState>(state);
}

StateFile parse_state(const Json& j, const std::string& origin) {
    if (!j.is_object()) raise(Errc::ParseError, origin + ": state file must be a JSON object");
    if (!j.contains("statistics") || !j["statistics"].is_string())
        raise(Errc::ParseError, origin + ": missing string field 'statistics'");
    const std::string stat = j["statistics"].get<std::string>();

    StateFile out;
    out.modes = parse_modes(j, origin);
    if (j.contains("label")) {
        if (!j["label"].is_string()) raise(Errc::ParseError, origin + ": 'label' must be a string");
        out.label = j["label"].get<std::string>();
    }

    if (stat == "boson") {
        out.statistics = StatisticsKind::Boson;
        if (!j.contains("matrix")) raise(Errc::ParseError, origin + ": boson state needs 'matrix'");
        out.state =
            states::TwoBosonState::from_matrix(parse_matrix(j["matrix"], out.modes, origin))
                .normalized();
    } else if (stat == "fermion") {
        out.statistics = StatisticsKind::Fermion;
        if (!j.contains("matrix"))
            raise(Errc::ParseError, origin + ": fermion state needs 'matrix'");
        out.state =
            states::TwoFermionState::from_matrix(parse_matrix(j["matrix"], out.modes, origin))
                .normalized();
    } else if (stat == "single") {
        out.statistics = StatisticsKind::Single;
        if (!j.contains("vector")) raise(Errc::ParseError, origin + ": single state needs 'vector'");
        out.state =
            states::SingleParticleState::from_vector(parse_vector(j["vector"], out.modes, origin))
                .normalized();
    } else {
        raise(Errc::ParseError, origin + ": unknown statistics '" + stat + "'");
    }
    return out;
}

StateFile load_state_file(const std::string& path) { return parse_state(load_json(path), path); }

correlation::OneBodyOperator load_operator_file(const std::string& path) {
    const Json j = load_json(path);
    if (!j.is_object()) raise(Errc::ParseError, path + ": operator file must be a JSON object");
    const std::size_t modes = parse_modes(j, path);
    if (!j.contains("matrix")) raise(Errc::ParseError, path + ": operator file needs 'matrix'");
    return correlation::OneBodyOperator::from_matrix(parse_matrix(j["matrix"], modes, path));
}

Json complex_to_json(const Complex& z) {
    Json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

Complex complex_from_json(const Json& j, const std::string& origin) {
    if (!j.is_object()) raise(Errc::ParseError, origin + ": complex entries must be {re, im}");
    return Complex(number_field(j, "re", origin), number_field(j, "im", origin));
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_to_json(const std::vector<Complex>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(complex_to_json(z));
    return out;
}

}  // namespace ipent::io
