#include "magicsq/verify.hpp"

#include <algorithm>
#include <unordered_set>

#include "magicsq/errors.hpp"

namespace magicsq {

namespace {

struct Accumulator
{
    Exact sum = 0;
    Exact squares = 0;

    void add(Exact v)
    {
        sum = checked_add(sum, v);
        squares = checked_add(squares, checked_mul(v, v));
    }
};

std::vector<Exact> cell_values(const Square& square)
{
    std::vector<Exact> values;
    values.reserve(square.cells().size());
    for (const auto& w : square.cells()) {
        values.push_back(w.value());
    }
    return values;
}

template <typename Get>
bool all_equal(const std::vector<LineSum>& lines, Get get)
{
    return std::all_of(lines.begin(), lines.end(),
                       [&](const LineSum& l) { return get(l) == get(lines.front()); });
}

}  // namespace

std::string to_string(const LineId& id)
{
    switch (id.kind) {
    case LineKind::Row: return "row " + std::to_string(id.index);
    case LineKind::Column: return "col " + std::to_string(id.index);
    case LineKind::MainDiagonal: return "diag";
    case LineKind::AntiDiagonal: return "anti";
    }
    return "?";
}

std::vector<LineSum> line_sums(const Square& square)
{
    const std::size_t n = square.order();
    const auto values = cell_values(square);
    std::vector<Accumulator> rows(n), cols(n);
    Accumulator diag, anti;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Exact v = values[i * n + j];
            rows[i].add(v);
            cols[j].add(v);
            if (i == j) {
                diag.add(v);
            }
            if (i + j == n - 1) {
                anti.add(v);
            }
        }
    }
    std::vector<LineSum> out;
    out.reserve(2 * n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({{LineKind::Row, i}, rows[i].sum, rows[i].squares});
    }
    for (std::size_t j = 0; j < n; ++j) {
        out.push_back({{LineKind::Column, j}, cols[j].sum, cols[j].squares});
    }
    out.push_back({{LineKind::MainDiagonal, 0}, diag.sum, diag.squares});
    out.push_back({{LineKind::AntiDiagonal, 0}, anti.sum, anti.squares});
    return out;
}

std::optional<Exact> check_magic(const Square& square)
{
    auto lines = line_sums(square);
    if (!all_equal(lines, [](const LineSum& l) { return l.sum; })) {
        return std::nullopt;
    }
    return lines.front().sum;
}

std::optional<BimagicSums> check_bimagic(const Square& square)
{
    auto lines = line_sums(square);
    if (!all_equal(lines, [](const LineSum& l) { return l.sum; }) ||
        !all_equal(lines, [](const LineSum& l) { return l.sum_of_squares; })) {
        return std::nullopt;
    }
    return BimagicSums{lines.front().sum, lines.front().sum_of_squares};
}

bool check_pandiagonal(const Square& square, bool bimagic)
{
    auto lines = line_sums(square);
    if (!all_equal(lines, [](const LineSum& l) { return l.sum; })) {
        throw Error(ErrorCode::InvalidState, "pandiagonality is only defined for magic squares");
    }
    const Exact s1 = lines.front().sum;
    if (bimagic && !all_equal(lines, [](const LineSum& l) { return l.sum_of_squares; })) {
        return false;
    }
    const Exact s2 = lines.front().sum_of_squares;

    const std::size_t n = square.order();
    const auto values = cell_values(square);
    for (std::size_t k = 0; k < n; ++k) {
        Accumulator down, up;
        for (std::size_t i = 0; i < n; ++i) {
            down.add(values[i * n + (i + k) % n]);
            up.add(values[i * n + (k + n - i) % n]);
        }
        if (down.sum != s1 || up.sum != s1) {
            return false;
        }
        if (bimagic && (down.squares != s2 || up.squares != s2)) {
            return false;
        }
    }
    return true;
}

std::optional<Exact> check_blocks(const Square& square, std::size_t block)
{
    const std::size_t n = square.order();
    if (block == 0 || n % block != 0) {
        throw Error(ErrorCode::BadBlockSize,
                    "block size " + std::to_string(block) + " does not divide order " + std::to_string(n));
    }
    const std::size_t tiles = n / block;
    std::optional<Exact> common;
    for (std::size_t bi = 0; bi < tiles; ++bi) {
        for (std::size_t bj = 0; bj < tiles; ++bj) {
            Exact total = 0;
            for (std::size_t i = 0; i < block; ++i) {
                for (std::size_t j = 0; j < block; ++j) {
                    total = checked_add(total, square.at(bi * block + i, bj * block + j).value());
                }
            }
            if (!common) {
                common = total;
            } else if (*common != total) {
                return std::nullopt;
            }
        }
    }
    return common;
}

EntryProperties entry_properties(const Square& square, const DigitMap& rotation)
{
    EntryProperties props{true, true, true};
    std::unordered_set<CodeWord> seen;
    seen.reserve(square.cells().size());
    for (const auto& w : square.cells()) {
        props.all_palindromic = props.all_palindromic && w.is_palindrome();
        if (!seen.insert(w).second) {
            props.all_distinct = false;
        }
        for (std::size_t p = 0; p < w.width(); ++p) {
            if (!rotation.contains(w.digit(p))) {
                props.rotation_closed = false;
            }
        }
    }
    return props;
}

PythagorasResult pythagoras_check(Exact a, Exact b, Exact c)
{
    if (a < 0 || b < 0 || c < 0) {
        throw Error(ErrorCode::InvalidState, "pythagoras_check expects non-negative sides");
    }
    PythagorasResult r;
    r.a2 = checked_mul(a, a);
    r.b2 = checked_mul(b, b);
    r.c2 = checked_mul(c, c);
    r.holds = checked_add(r.a2, r.b2) == r.c2;
    return r;
}

NotDivisibleError::NotDivisibleError(Exact total, std::size_t divisor)
    : Error(ErrorCode::NotDivisible,
            "sum of squares " + magicsq::to_string(total) + " is not divisible by " +
                std::to_string(divisor) + " (remainder " +
                magicsq::to_string(total % static_cast<Exact>(divisor)) + ")"),
      total_(total),
      divisor_(divisor)
{
}

Exact s2_from_multiset(std::span<const CodeWord> entries, std::size_t order)
{
    if (order == 0 || entries.size() != order * order) {
        throw Error(ErrorCode::ShapeMismatch, "multiset size " + std::to_string(entries.size()) +
                                                  " is not the square of " + std::to_string(order));
    }
    Exact total = 0;
    for (const auto& w : entries) {
        Exact v = w.value();
        total = checked_add(total, checked_mul(v, v));
    }
    if (total % static_cast<Exact>(order) != 0) {
        throw NotDivisibleError(total, order);
    }
    return total / static_cast<Exact>(order);
}

PropertyReport verify(const Square& square, std::span<const std::size_t> extra_blocks)
{
    const std::size_t n = square.order();
    PropertyReport report;
    report.order = n;
    report.width = square.width();
    report.lines = line_sums(square);

    if (all_equal(report.lines, [](const LineSum& l) { return l.sum; })) {
        report.s1 = report.lines.front().sum;
    }
    if (all_equal(report.lines, [](const LineSum& l) { return l.sum_of_squares; })) {
        report.s2 = report.lines.front().sum_of_squares;
    }
    report.is_magic = report.s1.has_value();
    report.is_bimagic = report.is_magic && report.s2.has_value();
    if (report.is_magic) {
        report.is_pandiagonal = check_pandiagonal(square, false);
        report.is_pandiagonal_bimagic = report.is_bimagic && report.is_pandiagonal &&
                                        check_pandiagonal(square, true);
    }

    std::vector<std::size_t> blocks;
    for (std::size_t k = 2; k < n; ++k) {
        if (n % k == 0) {
            blocks.push_back(k);
        }
    }
    for (std::size_t k : extra_blocks) {
        if (k == 0 || n % k != 0) {
            throw Error(ErrorCode::BadBlockSize,
                        "block size " + std::to_string(k) + " does not divide order " + std::to_string(n));
        }
        blocks.push_back(k);
    }
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    for (std::size_t k : blocks) {
        report.block_results.push_back({k, check_blocks(square, k)});
    }

    auto props = entry_properties(square);
    report.all_entries_palindromic = props.all_palindromic;
    report.all_entries_distinct = props.all_distinct;
    report.rotation_closed = props.rotation_closed;
    return report;
}

}  // namespace magicsq
