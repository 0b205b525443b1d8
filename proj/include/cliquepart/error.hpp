#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cliquepart {

enum class ErrorCode {
    CompositeP,
    CapExceeded,
    NotPrimePower,
    DivisionByZero,
    EvenCharacteristic,
    BadResidue,
    BadParams,
    BudgetExceeded,
    RsetSpaceTooLarge,
    WrongUniformity,
    UniformityUnderflow,
    ParseError,
    InvariantViolation,
    ConstructionFailed,
    NotMonotone,
    UnequalBlockSizes,
    CardinalityMismatch,
    NotAPacking,
    Overflow,
    IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::CompositeP: return "CompositeP";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorCode::BadResidue: return "BadResidue";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::RsetSpaceTooLarge: return "RsetSpaceTooLarge";
        case ErrorCode::WrongUniformity: return "WrongUniformity";
        case ErrorCode::UniformityUnderflow: return "UniformityUnderflow";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::ConstructionFailed: return "ConstructionFailed";
        case ErrorCode::NotMonotone: return "NotMonotone";
        case ErrorCode::UnequalBlockSizes: return "UnequalBlockSizes";
        case ErrorCode::CardinalityMismatch: return "CardinalityMismatch";
        case ErrorCode::NotAPacking: return "NotAPacking";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// All library failures are reported through this one exception type; the
/// code drives CLI exit statuses and lets tests match on the failure kind.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

    /// True for failures caused by a size or time budget rather than bad input.
    [[nodiscard]] bool is_resource_limit() const noexcept {
        return code_ == ErrorCode::CapExceeded || code_ == ErrorCode::BudgetExceeded ||
               code_ == ErrorCode::RsetSpaceTooLarge;
    }

private:
    ErrorCode code_;
};

}  // namespace cliquepart
