#pragma once

#include <stdexcept>
#include <string>

namespace valtree {

enum class Errc {
    ParseError,
    NonMonicDivisor,
    NonMonic,
    OmegaInconsistent,
    ConstantPolynomial,
    ValueNotIncreased,
    BadDegree,
    ShapeViolation,
    IndexOutOfRange,
    NotNormalized,
    OmegaAbsent,
    PoleAtOrigin,
    DegenerateDirection,
    IterationLimit,
    PerfectPowerUndecided,
    NonRationalCenter,
    SearchExhausted,
    FieldMismatch,
    OutOfSegment,
    NotTotallyOrdered,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace valtree
