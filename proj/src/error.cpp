#include "ipent/error.hpp"

namespace ipent {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NotHermitian: return "NotHermitian";
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::NotAntisymmetric: return "NotAntisymmetric";
        case Errc::NotCommuting: return "NotCommuting";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::ZeroState: return "ZeroState";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::StatisticsMismatch: return "StatisticsMismatch";
        case Errc::NotNormalized: return "NotNormalized";
        case Errc::InvalidInput: return "InvalidInput";
        case Errc::ZeroProbabilityEvent: return "ZeroProbabilityEvent";
        case Errc::ParseError: return "ParseError";
        case Errc::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace ipent
