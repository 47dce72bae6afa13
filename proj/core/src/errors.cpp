#include "magicsq/errors.hpp"

#include <string>

namespace magicsq {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidDigit: return "InvalidDigit";
    case ErrorCode::InvalidCodeWord: return "InvalidCodeWord";
    case ErrorCode::NonRotatableDigit: return "NonRotatableDigit";
    case ErrorCode::NonMirrorableDigit: return "NonMirrorableDigit";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::BadBlockSize: return "BadBlockSize";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::MalformedBlock: return "MalformedBlock";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

namespace {

std::string describe_unmapped(ErrorCode code, std::size_t position, int digit,
                              std::size_t row, std::size_t col)
{
    std::string msg = code == ErrorCode::NonMirrorableDigit ? "digit has no mirror image: "
                                                            : "digit has no 180-degree image: ";
    msg += std::to_string(digit);
    msg += " at position " + std::to_string(position);
    if (row != UnmappedDigitError::npos) {
        msg += " of cell (" + std::to_string(row) + ", " + std::to_string(col) + ")";
    }
    return msg;
}

}  // namespace

UnmappedDigitError::UnmappedDigitError(ErrorCode code, std::size_t position, int digit,
                                       std::size_t row, std::size_t col)
    : Error(code, describe_unmapped(code, position, digit, row, col)),
      position_(position),
      digit_(digit),
      row_(row),
      col_(col)
{
}

}  // namespace magicsq
