#include "magicsq/sevenseg.hpp"

#include <algorithm>
#include <array>

#include "magicsq/errors.hpp"

namespace magicsq::sevenseg {

namespace {

constexpr std::array<std::uint8_t, 10> kGlyphs = {
    kA | kB | kC | kD | kE | kF,       // 0
    kB | kC,                           // 1
    kA | kB | kG | kE | kD,            // 2
    kA | kB | kG | kC | kD,            // 3
    kF | kG | kB | kC,                 // 4
    kA | kF | kG | kC | kD,            // 5
    kA | kF | kG | kE | kC | kD,       // 6
    kA | kB | kC,                      // 7
    kA | kB | kC | kD | kE | kF | kG,  // 8
    kA | kB | kC | kD | kF | kG,       // 9
};

constexpr std::size_t kBandHeight = 3;

void draw(const CodeWord& word, std::array<std::string, 3>& rows)
{
    for (std::size_t p = 0; p < word.width(); ++p) {
        if (p > 0) {
            for (auto& r : rows) {
                r.push_back(' ');
            }
        }
        const std::uint8_t m = glyph(word.digit(p)).mask;
        auto on = [m](std::uint8_t seg, char c) { return (m & seg) ? c : ' '; };
        rows[0] += {' ', on(kA, '_'), ' '};
        rows[1] += {on(kF, '|'), on(kG, '_'), on(kB, '|')};
        rows[2] += {on(kE, '|'), on(kD, '_'), on(kC, '|')};
    }
}

// Moves each lone two-row stroke (a turned-over 1) to the right edge of
// its cell. The band occupies lines base..base+2.
void settle_ones(std::vector<std::string>& lines, std::size_t base)
{
    const std::size_t w = lines[base].size();
    auto blank = [&](std::size_t c) {
        if (c >= w) {
            return true;
        }
        return lines[base][c] == ' ' && lines[base + 1][c] == ' ' && lines[base + 2][c] == ' ';
    };
    for (std::size_t c = 0; c + 2 < w; ++c) {
        const bool stroke = lines[base][c] == ' ' && lines[base + 1][c] == '|' && lines[base + 2][c] == '|';
        if (stroke && (c == 0 || blank(c - 1)) && blank(c + 1) && blank(c + 2)) {
            lines[base + 1][c] = lines[base + 2][c] = ' ';
            lines[base + 1][c + 2] = lines[base + 2][c + 2] = '|';
            c += 2;
        }
    }
}

[[noreturn]] void malformed(const std::string& why)
{
    throw Error(ErrorCode::MalformedBlock, "malformed seven-segment block: " + why);
}

}  // namespace

SegmentGlyph glyph(Digit d)
{
    if (d > 9) {
        throw Error(ErrorCode::InvalidDigit, "no glyph for digit " + std::to_string(d));
    }
    return {kGlyphs[d]};
}

SegmentGlyph rotate(SegmentGlyph g)
{
    static constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 7> kSwap = {{
        {kA, kD}, {kB, kE}, {kC, kF}, {kD, kA}, {kE, kB}, {kF, kC}, {kG, kG},
    }};
    std::uint8_t out = 0;
    for (auto [from, to] : kSwap) {
        if (g.mask & from) {
            out |= to;
        }
    }
    // A lone stroke reads as 1 on either side; it is always drawn on the right.
    if (out == (kE | kF)) {
        out = kB | kC;
    }
    return {out};
}

TextBlock render_codeword(const CodeWord& word)
{
    std::array<std::string, 3> rows;
    draw(word, rows);
    return {{rows[0], rows[1], rows[2]}};
}

TextBlock render_square(const Square& square)
{
    const std::size_t n = square.order();
    TextBlock block;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            block.lines.emplace_back();
        }
        std::array<std::string, 3> rows;
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) {
                for (auto& r : rows) {
                    r += "  ";
                }
            }
            draw(square.at(i, j), rows);
        }
        block.lines.insert(block.lines.end(), rows.begin(), rows.end());
    }
    const std::size_t width = block.lines.front().size();
    for (auto& line : block.lines) {
        line.resize(width, ' ');
    }
    return block;
}

TextBlock rotate_text(const TextBlock& block)
{
    const std::size_t h = block.height();
    if (h < kBandHeight || (h + 1) % (kBandHeight + 1) != 0) {
        malformed("height " + std::to_string(h) + " is not 4k-1");
    }
    const std::size_t w = block.width();
    if (w == 0) {
        malformed("empty lines");
    }
    if (h == kBandHeight && (w + 1) % 4 != 0) {
        malformed("width " + std::to_string(w) + " is not 4k-1");
    }
    for (std::size_t r = 0; r < h; ++r) {
        const auto& line = block.lines[r];
        if (line.size() != w) {
            malformed("line " + std::to_string(r) + " has length " + std::to_string(line.size()) +
                      ", expected " + std::to_string(w));
        }
        const bool separator = r % (kBandHeight + 1) == kBandHeight;
        for (char c : line) {
            if (c != ' ' && c != '_' && c != '|') {
                malformed(std::string("unexpected character '") + c + "'");
            }
            if (separator && c != ' ') {
                malformed("separator line " + std::to_string(r) + " is not blank");
            }
            if (!separator && r % (kBandHeight + 1) == 0 && c == '|') {
                malformed("'|' in the top row of a band");
            }
        }
    }

    const std::size_t bands = (h + 1) / (kBandHeight + 1);
    TextBlock out;
    out.lines.assign(h, std::string(w, ' '));
    for (std::size_t band = 0; band < bands; ++band) {
        const std::size_t src_base = band * (kBandHeight + 1);
        const std::size_t dst_base = (bands - 1 - band) * (kBandHeight + 1);
        for (std::size_t r = 0; r < kBandHeight; ++r) {
            for (std::size_t c = 0; c < w; ++c) {
                const char ch = block.lines[src_base + r][c];
                if (ch == ' ') {
                    continue;
                }
                const std::size_t dst_row = ch == '_' ? 2 - r : 3 - r;
                out.lines[dst_base + dst_row][w - 1 - c] = ch;
            }
        }
        settle_ones(out.lines, dst_base);
    }
    return out;
}

std::string to_text(const TextBlock& block)
{
    std::string out;
    for (const auto& line : block.lines) {
        auto end = line.find_last_not_of(' ');
        out.append(line, 0, end == std::string::npos ? 0 : end + 1);
        out.push_back('\n');
    }
    return out;
}

TextBlock parse_text(std::string_view text)
{
    TextBlock block;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        block.lines.emplace_back(line);
        start = end + 1;
    }
    std::size_t width = 0;
    for (const auto& line : block.lines) {
        width = std::max(width, line.size());
    }
    for (auto& line : block.lines) {
        line.resize(width, ' ');
    }
    return block;
}

}  // namespace magicsq::sevenseg
