// verify.hpp -- line sums, magic/bimagic/pandiagonal predicates and reports
//
// All arithmetic is exact. Verification never mutates its input; a
// property that does not hold is reported as absent/false, and only
// malformed queries (a block size that does not divide the order, a
// pandiagonal query on a non-magic square) throw.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magicsq/errors.hpp"
#include "magicsq/types.hpp"

namespace magicsq {

enum class LineKind { Row, Column, MainDiagonal, AntiDiagonal };

struct LineId
{
    LineKind kind;
    std::size_t index = 0;  // row/column number; 0 for the diagonals

    bool operator==(const LineId&) const = default;
};

std::string to_string(const LineId& id);

struct LineSum
{
    LineId line;
    Exact sum = 0;
    Exact sum_of_squares = 0;
};

/// The 2n+2 lines in order: rows, columns, main diagonal, anti-diagonal.
std::vector<LineSum> line_sums(const Square& square);

/// Common sum of all 2n+2 lines, if there is one.
std::optional<Exact> check_magic(const Square& square);

struct BimagicSums
{
    Exact s1 = 0;
    Exact s2 = 0;

    bool operator==(const BimagicSums&) const = default;
};

std::optional<BimagicSums> check_bimagic(const Square& square);

/// True iff every broken diagonal (i, (j±i) mod n) sums to S1 and, with
/// `bimagic`, every one also has sum of squares S2. Throws InvalidState if
/// the square is not magic.
bool check_pandiagonal(const Square& square, bool bimagic = false);

/// Common total of the aligned k×k tiles. Throws BadBlockSize unless k
/// divides the order.
std::optional<Exact> check_blocks(const Square& square, std::size_t block);

struct EntryProperties
{
    bool all_palindromic = false;
    bool all_distinct = false;
    bool rotation_closed = false;

    bool operator==(const EntryProperties&) const = default;
};

EntryProperties entry_properties(const Square& square, const DigitMap& rotation = DigitMap::rotation());

struct PythagorasResult
{
    bool holds = false;
    Exact a2 = 0;
    Exact b2 = 0;
    Exact c2 = 0;
};

PythagorasResult pythagoras_check(Exact a, Exact b, Exact c);

/// Line sum of squares forced on any bimagic square built from exactly
/// these entries: Σ value² / n. Throws NotDivisibleError when n does not
/// divide Σ value², or ShapeMismatch when |entries| ≠ n².
Exact s2_from_multiset(std::span<const CodeWord> entries, std::size_t order);

struct BlockResult
{
    std::size_t block = 0;
    std::optional<Exact> common_sum;
};

struct PropertyReport
{
    std::size_t order = 0;
    std::size_t width = 0;
    std::optional<Exact> s1;  // common line sum, when constant
    std::optional<Exact> s2;  // common line sum of squares, when constant
    bool is_magic = false;
    bool is_bimagic = false;
    bool is_pandiagonal = false;
    bool is_pandiagonal_bimagic = false;
    std::vector<BlockResult> block_results;
    bool all_entries_palindromic = false;
    bool all_entries_distinct = false;
    bool rotation_closed = false;
    std::vector<LineSum> lines;
};

/// Full report. Block results cover every proper divisor k of the order
/// with 1 < k < n plus any extra sizes requested (each must divide n).
PropertyReport verify(const Square& square, std::span<const std::size_t> extra_blocks = {});

class NotDivisibleError : public Error
{
public:
    NotDivisibleError(Exact total, std::size_t divisor);

    Exact total() const noexcept { return total_; }
    std::size_t divisor() const noexcept { return divisor_; }
    Exact remainder() const noexcept { return total_ % static_cast<Exact>(divisor_); }

private:
    Exact total_;
    std::size_t divisor_;
};

}  // namespace magicsq
