#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncproj {

enum class ErrorKind {
    NotInvertible,
    SubmatrixNotInvertible,
    UndefinedExpression,
    RowFormMismatch,
    SymmetryViolation,
    PairMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    ResampleLimitExceeded,
    DegeneratePair,
    CollinearFrame,
    SideConditionViolated,
    ConsecutiveCoincidence,
    PointsTooClose,
    QuadratureFailure,
    NonPositiveKappa,
    UnknownSuite,
    UnsupportedRingForSuite,
    UnknownOperation,
    ParseError,
};

std::string_view to_string(ErrorKind k) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

    // Degenerate input rather than a numerical or programming failure.
    bool is_undefined() const noexcept {
        switch (kind_) {
        case ErrorKind::NotInvertible:
        case ErrorKind::SubmatrixNotInvertible:
        case ErrorKind::UndefinedExpression:
        case ErrorKind::DegeneratePair:
        case ErrorKind::CollinearFrame:
        case ErrorKind::ConsecutiveCoincidence:
        case ErrorKind::PointsTooClose:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorKind kind_;
    std::string detail_;
};

// Rethrows any degeneracy as UndefinedExpression, keeping the original detail.
template <class F>
auto defined_or_throw(F&& f, std::string_view what) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.is_undefined() && e.kind() != ErrorKind::UndefinedExpression)
            throw Error(ErrorKind::UndefinedExpression, std::string(what) + " (" + e.detail() + ")");
        throw;
    }
}

}  // namespace ncproj
