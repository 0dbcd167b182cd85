#ifndef FLOATDOM_ERROR_HPP
#define FLOATDOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace floatdom {

enum class ErrorCode {
    InvalidCurve,
    NonSimpleCurve,
    DegenerateChord,
    NoIntersection,
    NearTangency,
    PoleProximity,
    NotARoot,
    Nonconvex,
    NotConcyclic,
    AmbiguousArc,
    InvalidArgument,
    Parse,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidCurve: return "invalid-curve";
    case ErrorCode::NonSimpleCurve: return "non-simple-curve";
    case ErrorCode::DegenerateChord: return "degenerate-chord";
    case ErrorCode::NoIntersection: return "no-intersection";
    case ErrorCode::NearTangency: return "near-tangency";
    case ErrorCode::PoleProximity: return "pole-proximity";
    case ErrorCode::NotARoot: return "not-a-root";
    case ErrorCode::Nonconvex: return "nonconvex";
    case ErrorCode::NotConcyclic: return "not-concyclic";
    case ErrorCode::AmbiguousArc: return "ambiguous-arc";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Parse: return "parse-error";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace floatdom

#endif // FLOATDOM_ERROR_HPP
