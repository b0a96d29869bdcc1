#pragma once

#include <stdexcept>
#include <string>

namespace ballpoly {

// Failure categories. ToleranceConflict and the two cross-check codes get
// dedicated process exit codes in the CLI; everything else maps to plain
// input/usage errors.
enum class Errc {
    EmptyInput,
    DegenerateCoincident,
    DegenerateEmptyOrPoint,
    AxisDegenerate,
    NotOnSphere,
    NotFullDimensional,
    NotSeparable,
    NotTight,
    ToleranceConflict,
    InternalInvariantViolation,
    NonGenericUnsupported,
    GhsCrossCheckFailure,
    NotExtremalInput,
    DualityFailure,
    BarycenterFallback,
    InvalidArcSelection,
    InvalidParity,
    InvalidSpec,
    TruncationTooCoarse,
    DualEdgeConflict,
    InvalidOrder,
    TooLarge,
    DuplicatePoints,
    ParseError,
    IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace ballpoly
