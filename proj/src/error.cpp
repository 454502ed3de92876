#include "ncproj/error.hpp"

namespace ncproj {

std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::SubmatrixNotInvertible: return "SubmatrixNotInvertible";
    case ErrorKind::UndefinedExpression: return "UndefinedExpression";
    case ErrorKind::RowFormMismatch: return "RowFormMismatch";
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::PairMismatch: return "PairMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ResampleLimitExceeded: return "ResampleLimitExceeded";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::CollinearFrame: return "CollinearFrame";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
    case ErrorKind::ConsecutiveCoincidence: return "ConsecutiveCoincidence";
    case ErrorKind::PointsTooClose: return "PointsTooClose";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::NonPositiveKappa: return "NonPositiveKappa";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::UnsupportedRingForSuite: return "UnsupportedRingForSuite";
    case ErrorKind::UnknownOperation: return "UnknownOperation";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace ncproj
