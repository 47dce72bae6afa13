// types.hpp -- digit strings, alphabets, digit maps and squares

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace magicsq {

/// Exact integer used for every sum and sum of squares. Operations that
/// could exceed its range check and throw ErrorCode::Overflow.
using Exact = __int128;

std::string to_string(Exact value);

/// Adds with an overflow check.
Exact checked_add(Exact a, Exact b);
/// Multiplies with an overflow check.
Exact checked_mul(Exact a, Exact b);

/// A decimal digit 0..9.
using Digit = std::uint8_t;

/// Widest codeword accepted. Squares of 18-digit values stay well inside
/// the range of Exact even when summed over large lines.
inline constexpr std::size_t kMaxWidth = 18;

/// Non-empty ascending set of distinct digits.
class Alphabet
{
public:
    /// {0, 1, 2}
    Alphabet();
    explicit Alphabet(std::vector<Digit> digits);

    /// Parses a string such as "012". Duplicates and non-digits throw.
    static Alphabet parse(std::string_view text);

    bool contains(Digit d) const noexcept { return (mask_ >> d) & 1u; }
    std::span<const Digit> digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    Digit min() const noexcept { return digits_.front(); }
    Digit max() const noexcept { return digits_.back(); }
    std::string str() const;

    bool operator==(const Alphabet& other) const noexcept { return mask_ == other.mask_; }

private:
    std::vector<Digit> digits_;
    std::uint16_t mask_ = 0;
};

/// Fixed-width digit string, most significant digit first. Leading zeros
/// are part of the value's identity: "0110" and "110" are different words.
class CodeWord
{
public:
    /// Throws ErrorCode::InvalidCodeWord on empty input, non-digits, or a
    /// width above kMaxWidth.
    explicit CodeWord(std::string_view digits);
    static CodeWord from_digits(std::span<const Digit> digits);

    std::size_t width() const noexcept { return text_.size(); }
    Digit digit(std::size_t i) const noexcept { return static_cast<Digit>(text_[i] - '0'); }
    const std::string& str() const noexcept { return text_; }

    /// Positional value, Σ digit[i] · 10^(width−1−i).
    Exact value() const noexcept;
    bool is_palindrome() const noexcept;

    auto operator<=>(const CodeWord&) const = default;
    bool operator==(const CodeWord&) const = default;

private:
    CodeWord() = default;
    std::string text_;
};

/// Partial digit-to-digit map, e.g. the 180° rotation of seven-segment
/// digits or their mirror image.
class DigitMap
{
public:
    DigitMap() { image_.fill(-1); }
    DigitMap(std::initializer_list<std::pair<int, int>> pairs);

    /// {0→0, 1→1, 2→2, 5→5, 6→9, 8→8, 9→6}
    static const DigitMap& rotation();
    /// {0→0, 1→1, 2→5, 5→2, 8→8}
    static const DigitMap& mirror();

    bool contains(Digit d) const noexcept { return d < 10 && image_[d] >= 0; }
    /// Image of d; only valid when contains(d).
    Digit operator()(Digit d) const noexcept { return static_cast<Digit>(image_[d]); }
    std::vector<Digit> domain() const;
    bool is_involution() const noexcept;

private:
    std::array<std::int8_t, 10> image_{};
};

/// n×n grid of codewords sharing one width, stored row-major.
class Square
{
public:
    /// Throws ShapeMismatch when rows are ragged, empty, or widths differ.
    explicit Square(std::vector<std::vector<CodeWord>> rows);
    Square(std::size_t order, std::vector<CodeWord> cells);

    static Square from_strings(const std::vector<std::vector<std::string>>& rows);

    std::size_t order() const noexcept { return order_; }
    std::size_t width() const noexcept { return width_; }
    const CodeWord& at(std::size_t row, std::size_t col) const noexcept
    {
        return cells_[row * order_ + col];
    }
    std::span<const CodeWord> cells() const noexcept { return cells_; }

    const std::optional<Alphabet>& alphabet() const noexcept { return alphabet_; }
    /// Attaches an alphabet; throws InvalidDigit if a cell uses a digit
    /// outside it.
    Square with_alphabet(Alphabet alphabet) const;
    Square without_alphabet() const;

    std::vector<std::vector<std::string>> to_strings() const;

    bool operator==(const Square& other) const noexcept
    {
        return order_ == other.order_ && cells_ == other.cells_;
    }

private:
    std::size_t order_ = 0;
    std::size_t width_ = 0;
    std::vector<CodeWord> cells_;
    std::optional<Alphabet> alphabet_;
};

}  // namespace magicsq

template <>
struct std::hash<magicsq::CodeWord>
{
    std::size_t operator()(const magicsq::CodeWord& w) const noexcept
    {
        return std::hash<std::string>{}(w.str());
    }
};
