#pragma once

#include <stdexcept>
#include <string>

namespace annigraph {

// Every failure the library reports, as one exception type with a kind tag.
// The CLI maps kinds onto exit codes, tests match on kinds.
enum class ErrorKind {
    InvalidGroup,
    WrongGroupKind,
    OracleCapExceeded,
    GroupTooLarge,
    GraphTooLarge,
    EquitabilityViolated,
    NotThreshold,
    NotSymmetric,
    NoConvergence,
    NotSquarefree,
    UnsupportedFormat,
    ParseError,
    NonPrimeBase,
    NotApplicable,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidGroup: return "InvalidGroup";
        case ErrorKind::WrongGroupKind: return "WrongGroupKind";
        case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::GraphTooLarge: return "GraphTooLarge";
        case ErrorKind::EquitabilityViolated: return "EquitabilityViolated";
        case ErrorKind::NotThreshold: return "NotThreshold";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NonPrimeBase: return "NonPrimeBase";
        case ErrorKind::NotApplicable: return "NotApplicable";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace annigraph
