// transforms.hpp -- 180° rotation, mirror reflection, palindromic extension

#pragma once

#include "magicsq/types.hpp"

namespace magicsq {

/// Turns the word upside down: reverses digit order and maps each digit.
/// Throws UnmappedDigitError(NonRotatableDigit) naming the first bad position.
CodeWord rotate_codeword(const CodeWord& word, const DigitMap& map = DigitMap::rotation());

/// Reflects the word about a vertical axis: reverse, then map each digit.
CodeWord mirror_codeword(const CodeWord& word, const DigitMap& map = DigitMap::mirror());

/// Rotates the whole grid by 180°: cell (i, j) takes the rotated word from
/// (n−1−i, n−1−j). Errors carry the source cell coordinates.
Square rotate_square(const Square& square, const DigitMap& map = DigitMap::rotation());

/// Flips columns and mirrors each word.
Square mirror_square(const Square& square, const DigitMap& map = DigitMap::mirror());

/// Every cell w becomes w followed by reverse(w). "12" -> "1221".
Square palindromic_extend(const Square& square);

}  // namespace magicsq
