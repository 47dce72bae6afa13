#include "magicsq/generate.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

#include "magicsq/errors.hpp"
#include "magicsq/verify.hpp"
#include "search_clock.hpp"

namespace magicsq {

namespace {

using detail::BudgetHit;
using detail::CutoffHit;
using detail::SearchClock;

using LayerCallback = std::function<bool(std::span<const Digit>)>;

// Row-major backtracking over one digit plane. Each placement updates the
// partial sums of the lines through the cell and prunes when a line can no
// longer reach the target with the digits left to fill it.
//
// With group constraints, cell c belongs to group[c] and at most `capacity`
// cells of one group may take the same digit; this is how distinctness of
// the composed codewords is enforced one place at a time.
class LayerSearch
{
public:
    LayerSearch(std::size_t order, const Alphabet& alphabet, int target, bool pandiagonal,
                SearchClock& clock, std::mt19937_64* rng)
        : n_(order),
          target_(target),
          min_(alphabet.min()),
          max_(alphabet.max()),
          digits_(alphabet.digits().begin(), alphabet.digits().end()),
          clock_(clock),
          rng_(rng),
          grid_(order * order, 0),
          cell_lines_(order * order),
          choice_(order * order, digits_)
    {
        const std::size_t line_count = pandiagonal ? 4 * n_ : 2 * n_ + 2;
        sum_.assign(line_count, 0);
        filled_.assign(line_count, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                auto& lines = cell_lines_[i * n_ + j];
                lines.push_back(i);
                lines.push_back(n_ + j);
                if (pandiagonal) {
                    lines.push_back(2 * n_ + (j + n_ - i) % n_);
                    lines.push_back(3 * n_ + (i + j) % n_);
                } else {
                    if (i == j) {
                        lines.push_back(2 * n_);
                    }
                    if (i + j == n_ - 1) {
                        lines.push_back(2 * n_ + 1);
                    }
                }
            }
        }
    }

    void constrain_groups(std::span<const std::uint32_t> groups, std::size_t group_count,
                          std::size_t capacity)
    {
        groups_ = groups;
        capacity_ = capacity;
        group_use_.assign(group_count * 10, 0);
    }

    bool run(const LayerCallback& on_layer)
    {
        on_layer_ = &on_layer;
        return place(0);
    }

private:
    bool feasible(std::size_t line) const
    {
        const long rem = static_cast<long>(n_ - filled_[line]);
        const long need = target_ - sum_[line];
        return need >= rem * min_ && need <= rem * max_;
    }

    bool place(std::size_t cell)
    {
        if (cell == grid_.size()) {
            return (*on_layer_)(grid_);
        }
        clock_.tick();
        auto& order = choice_[cell];
        if (rng_ != nullptr) {
            std::shuffle(order.begin(), order.end(), *rng_);
        }
        const auto& lines = cell_lines_[cell];
        for (Digit d : order) {
            std::uint32_t* use = nullptr;
            if (!groups_.empty()) {
                use = &group_use_[groups_[cell] * 10 + d];
                if (*use >= capacity_) {
                    continue;
                }
            }
            bool ok = true;
            for (std::size_t l : lines) {
                sum_[l] += d;
                ++filled_[l];
            }
            for (std::size_t l : lines) {
                ok = ok && feasible(l);
            }
            bool keep_going = true;
            if (ok) {
                grid_[cell] = d;
                if (use != nullptr) {
                    ++*use;
                }
                keep_going = place(cell + 1);
                if (use != nullptr) {
                    --*use;
                }
            }
            for (std::size_t l : lines) {
                sum_[l] -= d;
                --filled_[l];
            }
            if (!keep_going) {
                return false;
            }
        }
        return true;
    }

    std::size_t n_;
    int target_;
    int min_;
    int max_;
    std::vector<Digit> digits_;
    SearchClock& clock_;
    std::mt19937_64* rng_;
    std::vector<Digit> grid_;
    std::vector<std::vector<std::size_t>> cell_lines_;
    std::vector<std::vector<Digit>> choice_;
    std::vector<int> sum_;
    std::vector<std::size_t> filled_;
    std::span<const std::uint32_t> groups_;
    std::size_t capacity_ = 0;
    std::vector<std::uint32_t> group_use_;
    const LayerCallback* on_layer_ = nullptr;
};

bool line_sum_reachable(std::size_t order, const Alphabet& alphabet, int s)
{
    const long n = static_cast<long>(order);
    return s >= n * alphabet.min() && s <= n * alphabet.max();
}

class SquareSearch
{
public:
    SquareSearch(const SearchSpec& spec, const SquareSink& accept, SearchClock& clock, std::mt19937_64* rng)
        : spec_(spec),
          accept_(accept),
          clock_(clock),
          rng_(rng),
          n_(spec.order),
          places_(spec.require_palindromic ? (spec.width + 1) / 2 : spec.width),
          chosen_(places_)
    {
        // Cells sharing a prefix of p+1 digits still need distinct suffixes
        // drawn from |alphabet|^(places−p−1) possibilities.
        const std::size_t cells = n_ * n_;
        capacity_.resize(places_);
        for (std::size_t p = 0; p < places_; ++p) {
            std::size_t cap = 1;
            for (std::size_t q = p + 1; q < places_ && cap < cells; ++q) {
                cap *= spec.alphabet.size();
            }
            capacity_[p] = std::min(cap, cells);
        }
        for (std::size_t p = 0; p < spec.width; ++p) {
            predicted_s1_ = predicted_s1_ * 10 + spec.line_sum_per_place[p];
        }
    }

    bool run()
    {
        std::vector<std::uint32_t> groups(n_ * n_, 0);
        return descend(0, groups, 1);
    }

private:
    bool descend(std::size_t place, const std::vector<std::uint32_t>& groups, std::size_t group_count)
    {
        if (place == places_) {
            return finish();
        }
        LayerSearch search(n_, spec_.alphabet, spec_.line_sum_per_place[place], spec_.require_pandiagonal,
                           clock_, rng_);
        if (spec_.require_distinct) {
            search.constrain_groups(groups, group_count, capacity_[place]);
        }
        return search.run([&](std::span<const Digit> grid) {
            chosen_[place].assign(grid.begin(), grid.end());
            if (!spec_.require_distinct) {
                return descend(place + 1, groups, 1);
            }
            std::vector<std::int64_t> remap(group_count * 10, -1);
            std::vector<std::uint32_t> next(groups.size());
            std::uint32_t count = 0;
            for (std::size_t c = 0; c < groups.size(); ++c) {
                auto& slot = remap[groups[c] * 10 + grid[c]];
                if (slot < 0) {
                    slot = count++;
                }
                next[c] = static_cast<std::uint32_t>(slot);
            }
            return descend(place + 1, next, count);
        });
    }

    bool finish()
    {
        std::vector<Layer> layers;
        layers.reserve(spec_.width);
        for (std::size_t p = 0; p < spec_.width; ++p) {
            std::size_t source = p < places_ ? p : spec_.width - 1 - p;
            layers.emplace_back(n_, chosen_[source]);
        }
        Square square = stack_layers(layers).with_alphabet(spec_.alphabet);
        recheck(square);
        return accept_(square);
    }

    void recheck(const Square& square) const
    {
        auto s1 = check_magic(square);
        bool ok = s1 && *s1 == predicted_s1_;
        if (ok && spec_.require_pandiagonal) {
            ok = check_pandiagonal(square);
        }
        if (ok && (spec_.require_distinct || spec_.require_palindromic)) {
            auto props = entry_properties(square);
            ok = (!spec_.require_distinct || props.all_distinct) &&
                 (!spec_.require_palindromic || props.all_palindromic);
        }
        if (!ok) {
            throw Error(ErrorCode::InvalidState, "generated square failed re-verification");
        }
    }

    const SearchSpec& spec_;
    const SquareSink& accept_;
    SearchClock& clock_;
    std::mt19937_64* rng_;
    std::size_t n_;
    std::size_t places_;
    std::vector<std::vector<Digit>> chosen_;
    std::vector<std::size_t> capacity_;
    Exact predicted_s1_ = 0;
};

// Node allowance of the first randomized restart; doubled after each cut.
constexpr std::uint64_t kFirstCutoff = 4096;

std::string cells_key(const Square& square)
{
    std::string key;
    for (const auto& w : square.cells()) {
        key += w.str();
    }
    return key;
}

void validate(const SearchSpec& spec)
{
    if (spec.order < 3) {
        throw Error(ErrorCode::InvalidSpec, "order must be at least 3");
    }
    if (spec.order > 64) {
        throw Error(ErrorCode::InvalidSpec, "order above 64 is not supported");
    }
    if (spec.width == 0 || spec.width > kMaxWidth) {
        throw Error(ErrorCode::InvalidSpec, "width must be between 1 and " + std::to_string(kMaxWidth));
    }
    if (spec.line_sum_per_place.size() != spec.width) {
        throw Error(ErrorCode::InvalidSpec, "expected " + std::to_string(spec.width) +
                                                " per-place line sums, got " +
                                                std::to_string(spec.line_sum_per_place.size()));
    }
    for (int s : spec.line_sum_per_place) {
        if (s < 0) {
            throw Error(ErrorCode::InvalidSpec, "line sums must be non-negative");
        }
    }
    if (spec.limit == 0) {
        throw Error(ErrorCode::InvalidSpec, "limit must be positive");
    }
}

}  // namespace

std::size_t gen_layers(const LayerQuery& query, const LayerSink& sink)
{
    if (query.order == 0) {
        throw Error(ErrorCode::InvalidSpec, "layer order must be positive");
    }
    if (!line_sum_reachable(query.order, query.alphabet, query.line_sum)) {
        return 0;
    }
    SearchClock clock(std::chrono::milliseconds{0});
    LayerSearch search(query.order, query.alphabet, query.line_sum, query.pandiagonal, clock, nullptr);
    std::size_t count = 0;
    search.run([&](std::span<const Digit> grid) {
        ++count;
        return sink(Layer(query.order, std::vector<Digit>(grid.begin(), grid.end())));
    });
    return count;
}

std::vector<Layer> collect_layers(const LayerQuery& query)
{
    std::vector<Layer> out;
    gen_layers(query, [&](const Layer& layer) {
        out.push_back(layer);
        return true;
    });
    return out;
}

Square stack_layers(std::span<const Layer> layers)
{
    LayerStack stack;
    stack.layers.assign(layers.begin(), layers.end());
    if (!stack.layers.empty()) {
        stack.order = stack.layers.front().order();
    }
    return recompose(stack);
}

SearchOutcome gen_square(const SearchSpec& spec, const SquareSink& sink)
{
    if (spec.require_bimagic) {
        return bimagic_search(spec, sink);
    }
    validate(spec);
    for (int s : spec.line_sum_per_place) {
        if (!line_sum_reachable(spec.order, spec.alphabet, s)) {
            throw Error(ErrorCode::Unsatisfiable,
                        "line sum " + std::to_string(s) + " is out of reach for order " +
                            std::to_string(spec.order) + " over alphabet " + spec.alphabet.str());
        }
    }
    if (spec.require_palindromic) {
        const auto& s = spec.line_sum_per_place;
        if (!std::equal(s.begin(), s.end(), s.rbegin())) {
            throw Error(ErrorCode::Unsatisfiable,
                        "palindromic entries force equal line sums at mirrored places");
        }
    }
    if (spec.require_distinct) {
        const std::size_t places = spec.require_palindromic ? (spec.width + 1) / 2 : spec.width;
        std::size_t words = 1;
        for (std::size_t p = 0; p < places && words < spec.order * spec.order; ++p) {
            words *= spec.alphabet.size();
        }
        if (words < spec.order * spec.order) {
            throw Error(ErrorCode::Unsatisfiable, "not enough distinct codewords for " +
                                                      std::to_string(spec.order * spec.order) + " cells");
        }
    }

    // Randomized order runs as a series of restarts with doubling node
    // allowances, which cuts off the long unlucky branches a single random
    // descent can get stuck in. A restart that finishes under its allowance
    // has covered the whole space. Squares found again after a restart are
    // skipped.
    SearchClock clock(spec.budget);
    SearchOutcome outcome;
    std::unordered_set<std::string> seen;
    const SquareSink accept = [&](const Square& square) {
        if (!spec.deterministic && !seen.insert(cells_key(square)).second) {
            return true;
        }
        ++outcome.emitted;
        return sink(square) && outcome.emitted < spec.limit;
    };
    try {
        if (spec.deterministic) {
            SquareSearch search(spec, accept, clock, nullptr);
            outcome.status = search.run() ? SearchStatus::Complete : SearchStatus::LimitReached;
        } else {
            std::uint64_t cutoff = kFirstCutoff;
            for (std::uint32_t restart = 0;; ++restart) {
                std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                                  restart};
                std::mt19937_64 rng(seq);
                SquareSearch search(spec, accept, clock, &rng);
                clock.set_cutoff(cutoff);
                try {
                    outcome.status = search.run() ? SearchStatus::Complete : SearchStatus::LimitReached;
                    break;
                } catch (const CutoffHit&) {
                    cutoff *= 2;
                }
            }
        }
    } catch (const BudgetHit&) {
        outcome.status = SearchStatus::BudgetReached;
    }
    outcome.nodes = clock.nodes();
    if (outcome.emitted == 0) {
        if (outcome.status == SearchStatus::BudgetReached) {
            throw Error(ErrorCode::BudgetExhausted, "no square found within " +
                                                        std::to_string(spec.budget.count()) + " ms");
        }
        if (outcome.status == SearchStatus::Complete) {
            throw Error(ErrorCode::Unsatisfiable, "search space exhausted without a solution");
        }
    }
    return outcome;
}

std::vector<Square> gen_squares(const SearchSpec& spec)
{
    std::vector<Square> out;
    gen_square(spec, [&](const Square& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

Square compose_blocks(const std::vector<std::vector<Square>>& blocks)
{
    const std::size_t m = blocks.size();
    if (m == 0) {
        throw Error(ErrorCode::ShapeMismatch, "block grid is empty");
    }
    const std::size_t k = blocks[0].empty() ? 0 : blocks[0][0].order();
    const std::size_t width = blocks[0].empty() ? 0 : blocks[0][0].width();
    for (std::size_t bi = 0; bi < m; ++bi) {
        if (blocks[bi].size() != m) {
            throw Error(ErrorCode::ShapeMismatch, "block grid is not square");
        }
        for (std::size_t bj = 0; bj < m; ++bj) {
            if (blocks[bi][bj].order() != k || blocks[bi][bj].width() != width) {
                throw Error(ErrorCode::ShapeMismatch,
                            "block (" + std::to_string(bi) + ", " + std::to_string(bj) +
                                ") differs in order or width");
            }
        }
    }
    const std::size_t n = m * k;
    std::vector<CodeWord> cells;
    cells.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cells.push_back(blocks[i / k][j / k].at(i % k, j % k));
        }
    }
    return Square(n, std::move(cells));
}

std::vector<Square> brute_force_squares(const Alphabet& alphabet, int line_sum)
{
    constexpr std::uint64_t cap = 100'000'000;
    const std::size_t base = alphabet.size();
    std::uint64_t states = 1;
    for (int c = 0; c < 9; ++c) {
        states *= base;
    }
    if (states > cap) {
        throw Error(ErrorCode::OracleTooLarge,
                    std::to_string(states) + " grids exceed the oracle cap of 10^8");
    }

    static constexpr int kLines[8][3] = {
        {0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6},
    };
    const auto digits = alphabet.digits();
    std::array<std::size_t, 9> index{};
    std::vector<Square> out;
    for (std::uint64_t state = 0; state < states; ++state) {
        std::array<int, 9> grid{};
        for (int c = 0; c < 9; ++c) {
            grid[c] = digits[index[c]];
        }
        bool magic = true;
        for (const auto& line : kLines) {
            if (grid[line[0]] + grid[line[1]] + grid[line[2]] != line_sum) {
                magic = false;
                break;
            }
        }
        if (magic) {
            std::vector<CodeWord> cells;
            for (int v : grid) {
                cells.emplace_back(std::string(1, static_cast<char>('0' + v)));
            }
            out.emplace_back(3, std::move(cells));
        }
        for (int c = 8; c >= 0; --c) {
            if (++index[c] < base) {
                break;
            }
            index[c] = 0;
        }
    }
    std::sort(out.begin(), out.end(), [](const Square& a, const Square& b) {
        return std::lexicographical_compare(a.cells().begin(), a.cells().end(), b.cells().begin(),
                                            b.cells().end());
    });
    return out;
}

}  // namespace magicsq
