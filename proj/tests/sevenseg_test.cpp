#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "magicsq/errors.hpp"
#include "magicsq/sevenseg.hpp"
#include "magicsq/transforms.hpp"
#include "oracles.hpp"

using namespace magicsq;
using namespace magicsq::sevenseg;

namespace {

std::string random_word(std::mt19937_64& rng, std::size_t width, const std::string& digits)
{
    std::uniform_int_distribution<std::size_t> pick(0, digits.size() - 1);
    std::string w;
    for (std::size_t p = 0; p < width; ++p) w.push_back(digits[pick(rng)]);
    return w;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Render, SingleDigits)
{
    EXPECT_EQ(render_codeword(CodeWord("2")).lines, (std::vector<std::string>{" _ ", " _|", "|_ "}));
    EXPECT_EQ(render_codeword(CodeWord("1")).lines, (std::vector<std::string>{"   ", "  |", "  |"}));
    EXPECT_EQ(render_codeword(CodeWord("0")).lines, (std::vector<std::string>{" _ ", "| |", "|_|"}));
    EXPECT_EQ(render_codeword(CodeWord("8")).lines, (std::vector<std::string>{" _ ", "|_|", "|_|"}));
}

TEST(Render, WordLayout)
{
    auto block = render_codeword(CodeWord("120"));
    EXPECT_EQ(block.width(), 11u);
    EXPECT_EQ(block.lines, (std::vector<std::string>{"     _   _ ", "  |  _| | |", "  | |_  |_|"}));
}

TEST(Render, SquareLayout)
{
    auto block = render_square(Square::from_strings({{"1", "2"}, {"0", "1"}}));
    EXPECT_EQ(block.height(), 7u);
    EXPECT_EQ(block.lines[0], "      _ ");
    EXPECT_EQ(block.lines[3], std::string(8, ' '));
    EXPECT_EQ(block.lines[4], " _      ");
}

TEST(Render, GoldenPalindromicSquare)
{
    auto sq = Square::from_strings({{"0110", "2002", "1221"}, {"2222", "1111", "0000"}, {"1001", "0220", "2112"}});
    EXPECT_EQ(to_text(render_square(sq)), read_file(MAGICSQ_FIXTURES "/palindromic_3x3.render.txt"));
}

TEST(Glyph, RotationLaw)
{
    for (Digit d : {0, 1, 2, 5, 6, 8, 9}) {
        EXPECT_EQ(rotate(glyph(d)), glyph(static_cast<Digit>(DigitMap::rotation()(d)))) << int(d);
    }
    for (Digit d : {3, 4, 7}) {
        bool is_digit = false;
        for (Digit e = 0; e < 10; ++e) is_digit = is_digit || rotate(glyph(d)) == glyph(e);
        EXPECT_FALSE(is_digit) << int(d);
    }
}

TEST(RotateText, MatchesRotatedWords)
{
    std::mt19937_64 rng(4);
    for (int k = 0; k < 500; ++k) {
        CodeWord w(random_word(rng, 1 + k % 9, "0125689"));
        ASSERT_EQ(rotate_text(render_codeword(w)), render_codeword(rotate_codeword(w))) << w.str();
    }
}

TEST(RotateText, MatchesRotatedSquares)
{
    std::mt19937_64 rng(8);
    for (int k = 0; k < 100; ++k) {
        auto sq = Square::from_strings(oracle::random_grid(rng, 1 + k % 5, 1 + k % 4, "0125689"));
        ASSERT_EQ(rotate_text(render_square(sq)), render_square(rotate_square(sq)));
    }
}

TEST(RotateText, RoundTripsThroughText)
{
    auto sq = Square::from_strings(oracle::lo_shu_base3());
    auto text = to_text(render_square(sq));
    EXPECT_EQ(rotate_text(rotate_text(parse_text(text))), render_square(sq));
}

TEST(RotateText, RejectsMalformedBlocks)
{
    auto code = [](const TextBlock& b) {
        try {
            rotate_text(b);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidState;
    };
    EXPECT_EQ(code(TextBlock{{" _ ", " _|"}}), ErrorCode::MalformedBlock);
    EXPECT_EQ(code(TextBlock{{" _ ", " _|", "|_"}}), ErrorCode::MalformedBlock);
    EXPECT_EQ(code(TextBlock{{" x ", " _|", "|_ "}}), ErrorCode::MalformedBlock);
    EXPECT_EQ(code(TextBlock{{" _  ", " _| ", "|_  "}}), ErrorCode::MalformedBlock);
}

TEST(ToText, NoTrailingWhitespace)
{
    std::mt19937_64 rng(9);
    for (int k = 0; k < 50; ++k) {
        auto sq = Square::from_strings(oracle::random_grid(rng, 1 + k % 4, 1 + k % 3, "0123456789"));
        std::istringstream in(to_text(render_square(sq)));
        std::string line;
        while (std::getline(in, line)) {
            ASSERT_TRUE(line.empty() || line.back() != ' ');
        }
    }
}

TEST(MirrorCodeword, InvolutionOnMirrorableWords)
{
    std::mt19937_64 rng(12);
    for (int k = 0; k < 500; ++k) {
        CodeWord w(random_word(rng, 1 + k % 12, "01258"));
        ASSERT_EQ(mirror_codeword(mirror_codeword(w)), w);
    }
}

TEST(RotateText, TurnedOneStaysFlushRight)
{
    EXPECT_EQ(rotate_text(render_codeword(CodeWord("12"))), render_codeword(CodeWord("21")));
    EXPECT_EQ(rotate_text(render_codeword(CodeWord("1"))), render_codeword(CodeWord("1")));
    auto block = render_codeword(CodeWord("1691"));
    EXPECT_EQ(rotate_text(rotate_text(block)), block);
}
