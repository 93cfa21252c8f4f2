#include "valtree/error.hpp"

namespace valtree {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::NonMonicDivisor: return "NonMonicDivisor";
    case Errc::NonMonic: return "NonMonic";
    case Errc::OmegaInconsistent: return "OmegaInconsistent";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::ValueNotIncreased: return "ValueNotIncreased";
    case Errc::BadDegree: return "BadDegree";
    case Errc::ShapeViolation: return "ShapeViolation";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::OmegaAbsent: return "OmegaAbsent";
    case Errc::PoleAtOrigin: return "PoleAtOrigin";
    case Errc::DegenerateDirection: return "DegenerateDirection";
    case Errc::IterationLimit: return "IterationLimit";
    case Errc::PerfectPowerUndecided: return "PerfectPowerUndecided";
    case Errc::NonRationalCenter: return "NonRationalCenter";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::OutOfSegment: return "OutOfSegment";
    case Errc::NotTotallyOrdered: return "NotTotallyOrdered";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace valtree
