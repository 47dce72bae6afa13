// sevenseg.hpp -- seven-segment ASCII rendering and text-level 180° rotation
//
// Each digit is a 3×3 character cell:
//
//     row 0   " a "
//     row 1   "fgb"
//     row 2   "edc"
//
// with '_' for a lit horizontal segment (a, g, d) and '|' for a lit
// vertical one. Digits are separated by one blank column, square cells by
// two, and rows of a square by one blank line.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "magicsq/types.hpp"

namespace magicsq::sevenseg {

enum Segment : std::uint8_t {
    kA = 1 << 0,  // top
    kB = 1 << 1,  // top right
    kC = 1 << 2,  // bottom right
    kD = 1 << 3,  // bottom
    kE = 1 << 4,  // bottom left
    kF = 1 << 5,  // top left
    kG = 1 << 6,  // middle
};

/// Lit segments of a digit, one bit per segment.
struct SegmentGlyph
{
    std::uint8_t mask = 0;

    bool operator==(const SegmentGlyph&) const = default;
};

SegmentGlyph glyph(Digit d);

/// The glyph turned upside down: a↔d, b↔e, c↔f, g fixed. The turned 1
/// lands on {e, f} and is moved back to {b, c}.
SegmentGlyph rotate(SegmentGlyph g);

/// Fixed-width block of text lines. Lines keep their trailing blanks so
/// that every line has the same length.
struct TextBlock
{
    std::vector<std::string> lines;

    std::size_t height() const noexcept { return lines.size(); }
    std::size_t width() const noexcept { return lines.empty() ? 0 : lines.front().size(); }

    bool operator==(const TextBlock&) const = default;
};

/// 3 rows × (4·width − 1) columns.
TextBlock render_codeword(const CodeWord& word);

TextBlock render_square(const Square& square);

/// Rotates a rendered block by 180°. The block must consist of bands of
/// three glyph rows separated by single blank lines, with lines of equal
/// length and only ' ', '_' and '|'; otherwise throws MalformedBlock.
/// Within a band, '_' moves from row r to row 2−r and '|' from row r to
/// row 3−r. A lone stroke left behind by a turned 1 is then moved to the
/// right of its cell, so rotate_text(render(w)) == render(rotate_codeword(w)).
TextBlock rotate_text(const TextBlock& block);

/// Joins lines with '\n', dropping trailing blanks from each line.
std::string to_text(const TextBlock& block);

/// Splits text into lines and pads them to a common width.
TextBlock parse_text(std::string_view text);

}  // namespace magicsq::sevenseg
