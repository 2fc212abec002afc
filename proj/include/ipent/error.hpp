#pragma once

#include <stdexcept>
#include <string>

namespace ipent {

enum class Errc {
    NotHermitian,
    NotSymmetric,
    NotAntisymmetric,
    NotCommuting,
    NoConvergence,
    ZeroState,
    DimensionMismatch,
    StatisticsMismatch,
    NotNormalized,
    InvalidInput,
    ZeroProbabilityEvent,
    ParseError,
    InternalInconsistency,
};

const char* errc_name(Errc code);

/// Every failure in the library is reported as an Error carrying one of the
/// codes above; the message adds context (dimensions, norms, file names).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace ipent
