// generate.hpp -- construction of magic squares from digit planes
//
// A width-d square is built from d layers, each an n×n grid of digits
// whose rows, columns and diagonals all sum to a per-place target s_p.
// Stacking the layers gives a square with S1 = Σ s_p · 10^(d−1−p); for
// s_p = n at every place that is a repdigit such as 33, 4444 or 5555.
// Because every digit of the default alphabet {0,1,2} reads the same
// upside down, a 180° rotation of such a square is again magic with the
// same S1.

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "magicsq/layers.hpp"
#include "magicsq/types.hpp"

namespace magicsq {

/// What gen_square / bimagic_search look for.
struct SearchSpec
{
    std::size_t order = 3;
    std::size_t width = 1;
    Alphabet alphabet;
    /// Target line sum for each digit plane, most significant first.
    /// Must have exactly `width` entries (bimagic search also accepts none).
    std::vector<int> line_sum_per_place;
    bool require_pandiagonal = false;
    bool require_distinct = false;
    bool require_palindromic = false;
    bool require_bimagic = false;
    /// Maximum number of squares to emit.
    std::size_t limit = 1;
    std::uint64_t seed = 0;
    /// Wall-clock budget; zero means unbounded.
    std::chrono::milliseconds budget{0};
    /// Lexicographic order instead of seeded random order. Both modes are
    /// reproducible for a fixed seed.
    bool deterministic = false;
};

/// Returns false to stop the search.
using LayerSink = std::function<bool(const Layer&)>;
using SquareSink = std::function<bool(const Square&)>;

enum class SearchStatus {
    Complete,      // the whole space was explored
    LimitReached,  // `limit` squares were emitted, or the sink asked to stop
    BudgetReached, // time ran out after at least one emission
};

struct SearchOutcome
{
    std::size_t emitted = 0;
    SearchStatus status = SearchStatus::Complete;
    std::uint64_t nodes = 0;
};

struct LayerQuery
{
    std::size_t order = 3;
    Alphabet alphabet;
    int line_sum = 0;
    bool pandiagonal = false;
};

/// Streams every layer whose rows, columns and both diagonals (all 2n
/// broken diagonals with `pandiagonal`) sum to `line_sum`, in ascending
/// row-major order. Returns the number emitted. An unreachable sum gives
/// an empty stream.
std::size_t gen_layers(const LayerQuery& query, const LayerSink& sink);
std::vector<Layer> collect_layers(const LayerQuery& query);

/// Stacks layers into a square (layer 0 = most significant place).
/// Throws ShapeMismatch when orders differ or the list is empty.
Square stack_layers(std::span<const Layer> layers);

/// Streams squares satisfying `spec`. Every emitted square has been
/// re-verified against the requested properties. Throws Unsatisfiable when
/// the space is proven empty, BudgetExhausted when time runs out before
/// the first square, and InvalidSpec for malformed specs.
///
/// Deterministic emission order is lexicographic by (layer 0, layer 1, …),
/// each layer compared row-major.
SearchOutcome gen_square(const SearchSpec& spec, const SquareSink& sink);
std::vector<Square> gen_squares(const SearchSpec& spec);

/// Order-9 bimagic search over width-4 words from {0,1,2}.
///
/// Each cell reads as two base-3 digits of a symbol from A followed by two
/// of a symbol from B, where A and B are orthogonal diagonal Latin squares
/// of order 9. The four digit planes are affine functions of the base-3
/// digits of the cell coordinates over GF(3), chosen so that on every row,
/// column, diagonal and aligned 3×3 block each pair of planes takes all
/// nine digit pairs. That fixes Σx_p, Σx_p² and Σx_p·x_q per line and so
/// the sum of squares of the composed values. Emitted squares verify as
/// (S1, S2) = (9999, 17169495) with 3×3 block sums 9999.
SearchOutcome bimagic_search(const SearchSpec& spec, const SquareSink& sink);

/// Tiles a (m×m) grid of k×k blocks into an mk×mk square. Makes no magic
/// guarantee. Throws ShapeMismatch on ragged grids or mixed block shapes.
Square compose_blocks(const std::vector<std::vector<Square>>& blocks);

/// Exhaustive oracle: every order-3, width-1 grid over `alphabet` whose 8
/// lines sum to `line_sum`, sorted. Throws OracleTooLarge when the grid
/// count |alphabet|^9 exceeds 10^8.
std::vector<Square> brute_force_squares(const Alphabet& alphabet, int line_sum);

}  // namespace magicsq
