#pragma once

#include <stdexcept>
#include <string>

namespace lpiso {

enum class ErrorCode {
    NegativeBase,
    SpaceMismatch,
    UnsupportedSpace,
    ValidationMissing,
    UnknownChainLimit,
    AtomCountMismatch,
    PrecisionExhausted,
    GridTooSmall,
    LoopDetected,
    NotIsomorphism,
    BadInput,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NegativeBase: return "NegativeBase";
        case ErrorCode::SpaceMismatch: return "SpaceMismatch";
        case ErrorCode::UnsupportedSpace: return "UnsupportedSpace";
        case ErrorCode::ValidationMissing: return "ValidationMissing";
        case ErrorCode::UnknownChainLimit: return "UnknownChainLimit";
        case ErrorCode::AtomCountMismatch: return "AtomCountMismatch";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::GridTooSmall: return "GridTooSmall";
        case ErrorCode::LoopDetected: return "LoopDetected";
        case ErrorCode::NotIsomorphism: return "NotIsomorphism";
        case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

} // namespace lpiso
