// errors.hpp -- exception types raised by the magicsq library

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace magicsq {

enum class ErrorCode {
    InvalidDigit,
    InvalidCodeWord,
    NonRotatableDigit,
    NonMirrorableDigit,
    ShapeMismatch,
    InvalidState,
    BadBlockSize,
    NotDivisible,
    BudgetExhausted,
    Unsatisfiable,
    OracleTooLarge,
    MalformedBlock,
    InvalidSpec,
    Overflow,
};

std::string_view to_string(ErrorCode code);

/// Base class for every error the library reports. Absence of a property
/// (e.g. a square that is not magic) is never an error.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// A digit with no image under a rotation or mirror map.
/// Row/column are set when the codeword came from a square cell.
class UnmappedDigitError : public Error
{
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    UnmappedDigitError(ErrorCode code, std::size_t position, int digit,
                       std::size_t row = npos, std::size_t col = npos);

    std::size_t position() const noexcept { return position_; }
    int digit() const noexcept { return digit_; }
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }
    bool has_cell() const noexcept { return row_ != npos; }

private:
    std::size_t position_;
    int digit_;
    std::size_t row_;
    std::size_t col_;
};

}  // namespace magicsq
