#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bifurc {

enum class ErrorCode {
    InvalidParams,
    DegenerateGraph,
    NotSymmetric,
    NoConvergence,
    NonFinite,
    IllConditionedFit,
    NonSimpleMode,
    UnsupportedActivation,
    MultiModeRegime,
    TooLarge,
    ZeroMatrix,
    BranchHop,
    SubcriticalInput,
    SupercriticalInput,
    ConfigError,
    IoError,
    NumericFailure,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::DegenerateGraph: return "DegenerateGraph";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::IllConditionedFit: return "IllConditionedFit";
    case ErrorCode::NonSimpleMode: return "NonSimpleMode";
    case ErrorCode::UnsupportedActivation: return "UnsupportedActivation";
    case ErrorCode::MultiModeRegime: return "MultiModeRegime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::BranchHop: return "BranchHop";
    case ErrorCode::SubcriticalInput: return "SubcriticalInput";
    case ErrorCode::SupercriticalInput: return "SupercriticalInput";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NumericFailure: return "NumericFailure";
    }
    return "Unknown";
}

/// All library failures surface as this exception; `code()` identifies the category.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& what) {
    if (!condition) throw Error(code, what);
}

}  // namespace bifurc
