#include "magicsq/types.hpp"

#include <algorithm>
#include <limits>

#include "magicsq/errors.hpp"

namespace magicsq {

std::string to_string(Exact value)
{
    if (value == 0) {
        return "0";
    }
    bool negative = value < 0;
    // Work in the unsigned domain so the most negative value is handled.
    unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                     : static_cast<unsigned __int128>(value);
    std::string out;
    while (mag != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) {
        out.push_back('-');
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Exact checked_add(Exact a, Exact b)
{
    Exact r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, "exact sum exceeds 128-bit range");
    }
    return r;
}

Exact checked_mul(Exact a, Exact b)
{
    Exact r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, "exact product exceeds 128-bit range");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet() : Alphabet(std::vector<Digit>{0, 1, 2}) {}

Alphabet::Alphabet(std::vector<Digit> digits) : digits_(std::move(digits))
{
    if (digits_.empty()) {
        throw Error(ErrorCode::InvalidDigit, "alphabet must not be empty");
    }
    for (Digit d : digits_) {
        if (d > 9) {
            throw Error(ErrorCode::InvalidDigit, "alphabet digit out of range: " + std::to_string(d));
        }
        if (contains(d)) {
            throw Error(ErrorCode::InvalidDigit, "duplicate alphabet digit: " + std::to_string(d));
        }
        mask_ |= static_cast<std::uint16_t>(1u << d);
    }
    std::sort(digits_.begin(), digits_.end());
}

Alphabet Alphabet::parse(std::string_view text)
{
    std::vector<Digit> digits;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw Error(ErrorCode::InvalidDigit,
                        std::string("alphabet contains a non-digit: '") + c + "'");
        }
        digits.push_back(static_cast<Digit>(c - '0'));
    }
    return Alphabet(std::move(digits));
}

std::string Alphabet::str() const
{
    std::string out;
    for (Digit d : digits_) {
        out.push_back(static_cast<char>('0' + d));
    }
    return out;
}

// ---------------------------------------------------------------------------
// CodeWord

CodeWord::CodeWord(std::string_view digits) : text_(digits)
{
    if (text_.empty()) {
        throw Error(ErrorCode::InvalidCodeWord, "codeword must have at least one digit");
    }
    if (text_.size() > kMaxWidth) {
        throw Error(ErrorCode::InvalidCodeWord,
                    "codeword wider than " + std::to_string(kMaxWidth) + " digits");
    }
    for (char c : text_) {
        if (c < '0' || c > '9') {
            throw Error(ErrorCode::InvalidCodeWord, "codeword contains a non-digit: \"" + text_ + "\"");
        }
    }
}

CodeWord CodeWord::from_digits(std::span<const Digit> digits)
{
    std::string text;
    text.reserve(digits.size());
    for (Digit d : digits) {
        text.push_back(static_cast<char>('0' + d));
    }
    return CodeWord(text);
}

Exact CodeWord::value() const noexcept
{
    Exact v = 0;
    for (char c : text_) {
        v = v * 10 + (c - '0');
    }
    return v;
}

bool CodeWord::is_palindrome() const noexcept
{
    return std::equal(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(text_.size() / 2),
                      text_.rbegin());
}

// ---------------------------------------------------------------------------
// DigitMap

DigitMap::DigitMap(std::initializer_list<std::pair<int, int>> pairs)
{
    image_.fill(-1);
    for (auto [from, to] : pairs) {
        if (from < 0 || from > 9 || to < 0 || to > 9) {
            throw Error(ErrorCode::InvalidDigit, "digit map entry out of range");
        }
        image_[static_cast<std::size_t>(from)] = static_cast<std::int8_t>(to);
    }
}

const DigitMap& DigitMap::rotation()
{
    static const DigitMap map{{0, 0}, {1, 1}, {2, 2}, {5, 5}, {6, 9}, {8, 8}, {9, 6}};
    return map;
}

const DigitMap& DigitMap::mirror()
{
    static const DigitMap map{{0, 0}, {1, 1}, {2, 5}, {5, 2}, {8, 8}};
    return map;
}

std::vector<Digit> DigitMap::domain() const
{
    std::vector<Digit> out;
    for (Digit d = 0; d < 10; ++d) {
        if (contains(d)) {
            out.push_back(d);
        }
    }
    return out;
}

bool DigitMap::is_involution() const noexcept
{
    for (Digit d = 0; d < 10; ++d) {
        if (!contains(d)) {
            continue;
        }
        Digit img = (*this)(d);
        if (!contains(img) || (*this)(img) != d) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Square

Square::Square(std::vector<std::vector<CodeWord>> rows)
{
    order_ = rows.size();
    if (order_ == 0) {
        throw Error(ErrorCode::ShapeMismatch, "square must have at least one row");
    }
    cells_.reserve(order_ * order_);
    for (std::size_t i = 0; i < order_; ++i) {
        if (rows[i].size() != order_) {
            throw Error(ErrorCode::ShapeMismatch,
                        "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " cells, expected " + std::to_string(order_));
        }
        for (auto& w : rows[i]) {
            cells_.push_back(std::move(w));
        }
    }
    width_ = cells_.front().width();
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        if (cells_[k].width() != width_) {
            throw Error(ErrorCode::ShapeMismatch,
                        "cell (" + std::to_string(k / order_) + ", " + std::to_string(k % order_) +
                            ") has width " + std::to_string(cells_[k].width()) + ", expected " +
                            std::to_string(width_));
        }
    }
}

Square::Square(std::size_t order, std::vector<CodeWord> cells)
    : order_(order), cells_(std::move(cells))
{
    if (order_ == 0 || cells_.size() != order_ * order_) {
        throw Error(ErrorCode::ShapeMismatch, "cell count does not match order");
    }
    width_ = cells_.front().width();
    for (const auto& w : cells_) {
        if (w.width() != width_) {
            throw Error(ErrorCode::ShapeMismatch, "cells differ in width");
        }
    }
}

Square Square::from_strings(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::vector<CodeWord>> words;
    words.reserve(rows.size());
    for (const auto& row : rows) {
        auto& out = words.emplace_back();
        out.reserve(row.size());
        for (const auto& cell : row) {
            out.emplace_back(cell);
        }
    }
    return Square(std::move(words));
}

Square Square::with_alphabet(Alphabet alphabet) const
{
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        const auto& w = cells_[k];
        for (std::size_t p = 0; p < w.width(); ++p) {
            if (!alphabet.contains(w.digit(p))) {
                throw Error(ErrorCode::InvalidDigit,
                            "cell (" + std::to_string(k / order_) + ", " + std::to_string(k % order_) +
                                ") uses digit " + std::to_string(w.digit(p)) +
                                " outside alphabet " + alphabet.str());
            }
        }
    }
    Square out = *this;
    out.alphabet_ = std::move(alphabet);
    return out;
}

Square Square::without_alphabet() const
{
    Square out = *this;
    out.alphabet_.reset();
    return out;
}

std::vector<std::vector<std::string>> Square::to_strings() const
{
    std::vector<std::vector<std::string>> rows(order_);
    for (std::size_t i = 0; i < order_; ++i) {
        rows[i].reserve(order_);
        for (std::size_t j = 0; j < order_; ++j) {
            rows[i].push_back(at(i, j).str());
        }
    }
    return rows;
}

}  // namespace magicsq
