#include "magicsq/transforms.hpp"

#include <algorithm>
#include <optional>

#include "magicsq/errors.hpp"

namespace magicsq {

namespace {

CodeWord reverse_and_map(const CodeWord& word, const DigitMap& map, ErrorCode code,
                         std::size_t row = UnmappedDigitError::npos,
                         std::size_t col = UnmappedDigitError::npos)
{
    const std::size_t width = word.width();
    std::string out(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        Digit d = word.digit(i);
        if (!map.contains(d)) {
            throw UnmappedDigitError(code, i, d, row, col);
        }
        out[width - 1 - i] = static_cast<char>('0' + map(d));
    }
    return CodeWord(out);
}

std::optional<Alphabet> map_alphabet(const std::optional<Alphabet>& alphabet, const DigitMap& map)
{
    if (!alphabet) {
        return std::nullopt;
    }
    std::vector<Digit> image;
    for (Digit d : alphabet->digits()) {
        if (map.contains(d) && std::find(image.begin(), image.end(), map(d)) == image.end()) {
            image.push_back(map(d));
        }
    }
    if (image.empty()) {
        return std::nullopt;
    }
    return Alphabet(std::move(image));
}

Square attach(Square square, const std::optional<Alphabet>& alphabet)
{
    return alphabet ? square.with_alphabet(*alphabet) : square;
}

}  // namespace

CodeWord rotate_codeword(const CodeWord& word, const DigitMap& map)
{
    return reverse_and_map(word, map, ErrorCode::NonRotatableDigit);
}

CodeWord mirror_codeword(const CodeWord& word, const DigitMap& map)
{
    return reverse_and_map(word, map, ErrorCode::NonMirrorableDigit);
}

Square rotate_square(const Square& square, const DigitMap& map)
{
    const std::size_t n = square.order();
    std::vector<CodeWord> cells;
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t si = n - 1 - i;
            std::size_t sj = n - 1 - j;
            cells.push_back(reverse_and_map(square.at(si, sj), map, ErrorCode::NonRotatableDigit, si, sj));
        }
    }
    return attach(Square(n, std::move(cells)), map_alphabet(square.alphabet(), map));
}

Square mirror_square(const Square& square, const DigitMap& map)
{
    const std::size_t n = square.order();
    std::vector<CodeWord> cells;
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t sj = n - 1 - j;
            cells.push_back(reverse_and_map(square.at(i, sj), map, ErrorCode::NonMirrorableDigit, i, sj));
        }
    }
    return attach(Square(n, std::move(cells)), map_alphabet(square.alphabet(), map));
}

Square palindromic_extend(const Square& square)
{
    if (square.width() * 2 > kMaxWidth) {
        throw Error(ErrorCode::InvalidCodeWord, "extended width exceeds " + std::to_string(kMaxWidth));
    }
    std::vector<CodeWord> cells;
    cells.reserve(square.cells().size());
    for (const auto& w : square.cells()) {
        std::string text = w.str();
        text.append(w.str().rbegin(), w.str().rend());
        cells.emplace_back(text);
    }
    return attach(Square(square.order(), std::move(cells)), square.alphabet());
}

}  // namespace magicsq
