// Order-9 bimagic squares over {0,1,2}^4.
//
// Cell (i, j) has base-3 coordinates t = (i1, i0, j1, j0). Digit plane p is
// x_p = σ_p((r_p · t) mod 3) for a coefficient row r_p ∈ GF(3)^4 and a
// permutation σ_p of {0,1,2}. Writing r_p = (u_p, v_p) with u_p the row
// part and v_p the column part, plane p restricted to
//   a row          varies as v_p · (j1, j0)
//   a column       varies as u_p · (i1, i0)
//   the diagonal   varies as (u_p + v_p) · t'
//   the antidiag   varies as (u_p − v_p) · t'
//   a 3×3 block    varies as (u_p[1], v_p[1]) · (i0, j0)
// A pair of planes takes all nine digit pairs on such a line exactly when
// the two restricted forms are linearly independent. The search picks four
// rows that are pairwise independent in all five views and jointly of full
// rank (so all 81 cells are distinct).

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <unordered_set>

#include "magicsq/errors.hpp"
#include "magicsq/generate.hpp"
#include "magicsq/verify.hpp"
#include "search_clock.hpp"

namespace magicsq {

namespace {

using detail::BudgetHit;
using detail::SearchClock;

using Row = std::array<int, 4>;
using Pair = std::array<int, 2>;
using Perm = std::array<Digit, 3>;

constexpr std::size_t kPlanes = 4;
constexpr std::size_t kOrder = 9;
constexpr Exact kS1 = 9999;

int mod3(int v) { return ((v % 3) + 3) % 3; }

std::array<Pair, 5> views(const Row& r)
{
    return {{
        {r[0], r[1]},
        {r[2], r[3]},
        {mod3(r[0] + r[2]), mod3(r[1] + r[3])},
        {mod3(r[0] - r[2]), mod3(r[1] - r[3])},
        {r[1], r[3]},
    }};
}

bool independent(const Pair& a, const Pair& b) { return mod3(a[0] * b[1] - a[1] * b[0]) != 0; }

bool admissible(const Row& r)
{
    for (const auto& v : views(r)) {
        if (v[0] == 0 && v[1] == 0) {
            return false;
        }
    }
    return true;
}

bool compatible(const Row& a, const Row& b)
{
    auto va = views(a);
    auto vb = views(b);
    for (std::size_t k = 0; k < va.size(); ++k) {
        if (!independent(va[k], vb[k])) {
            return false;
        }
    }
    return true;
}

bool full_rank(std::array<Row, kPlanes> m)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 4 && rank < kPlanes; ++col) {
        std::size_t pivot = rank;
        while (pivot < kPlanes && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == kPlanes) {
            continue;
        }
        std::swap(m[rank], m[pivot]);
        const int inv = m[rank][col];  // 1 and 2 are their own inverses mod 3
        for (auto& x : m[rank]) {
            x = mod3(x * inv);
        }
        for (std::size_t r = 0; r < kPlanes; ++r) {
            if (r != rank && m[r][col] != 0) {
                const int f = m[r][col];
                for (std::size_t c = 0; c < 4; ++c) {
                    m[r][c] = mod3(m[r][c] - f * m[rank][c]);
                }
            }
        }
        ++rank;
    }
    return rank == kPlanes;
}

std::vector<Row> admissible_rows()
{
    std::vector<Row> rows;
    for (int code = 0; code < 81; ++code) {
        Row r{code / 27, (code / 9) % 3, (code / 3) % 3, code % 3};
        if (admissible(r)) {
            rows.push_back(r);
        }
    }
    return rows;
}

std::vector<Perm> all_perms()
{
    std::vector<Perm> perms;
    Perm p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

Square build(const std::array<Row, kPlanes>& rows, const std::array<Perm, kPlanes>& perms)
{
    std::vector<CodeWord> cells;
    cells.reserve(kOrder * kOrder);
    std::string text(kPlanes, '0');
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            const std::array<int, 4> t{i / 3, i % 3, j / 3, j % 3};
            for (std::size_t p = 0; p < kPlanes; ++p) {
                int dot = 0;
                for (std::size_t c = 0; c < 4; ++c) {
                    dot += rows[p][c] * t[c];
                }
                text[p] = static_cast<char>('0' + perms[p][static_cast<std::size_t>(mod3(dot))]);
            }
            cells.emplace_back(text);
        }
    }
    return Square(kOrder, std::move(cells)).with_alphabet(Alphabet{});
}

void recheck(const Square& square)
{
    const Exact s2 = s2_from_multiset(square.cells(), kOrder);
    const auto sums = check_bimagic(square);
    const auto blocks = check_blocks(square, 3);
    if (!sums || sums->s1 != kS1 || sums->s2 != s2 || !blocks || *blocks != kS1 ||
        !entry_properties(square).all_distinct) {
        throw Error(ErrorCode::InvalidState, "bimagic candidate failed re-verification");
    }
}

void validate_bimagic(const SearchSpec& spec)
{
    if (spec.order != kOrder || spec.width != kPlanes || !(spec.alphabet == Alphabet{})) {
        throw Error(ErrorCode::InvalidSpec,
                    "bimagic search supports order 9, width 4, alphabet 012 only");
    }
    if (!spec.line_sum_per_place.empty() &&
        (spec.line_sum_per_place.size() != kPlanes ||
         std::any_of(spec.line_sum_per_place.begin(), spec.line_sum_per_place.end(),
                     [](int s) { return s != 9; }))) {
        throw Error(ErrorCode::InvalidSpec, "bimagic search requires line sum 9 at every place");
    }
    if (spec.require_pandiagonal || spec.require_palindromic) {
        throw Error(ErrorCode::InvalidSpec,
                    "bimagic search does not support pandiagonal or palindromic constraints");
    }
    if (spec.limit == 0) {
        throw Error(ErrorCode::InvalidSpec, "limit must be positive");
    }
}

class PlaneSearch
{
public:
    PlaneSearch(std::vector<Row> candidates, SearchClock& clock)
        : candidates_(std::move(candidates)), clock_(clock)
    {
    }

    /// Calls visit for each ordered compatible full-rank 4-tuple in
    /// candidate order; stops when visit returns false.
    template <typename Visit>
    bool run(Visit&& visit)
    {
        return extend(0, visit);
    }

private:
    template <typename Visit>
    bool extend(std::size_t depth, Visit& visit)
    {
        if (depth == kPlanes) {
            return !full_rank(chosen_) || visit(chosen_);
        }
        for (const Row& r : candidates_) {
            clock_.tick();
            bool ok = true;
            for (std::size_t q = 0; q < depth && ok; ++q) {
                ok = compatible(chosen_[q], r);
            }
            if (!ok) {
                continue;
            }
            chosen_[depth] = r;
            if (!extend(depth + 1, visit)) {
                return false;
            }
        }
        return true;
    }

    std::vector<Row> candidates_;
    SearchClock& clock_;
    std::array<Row, kPlanes> chosen_{};
};

std::string fingerprint(const Square& square)
{
    std::string key;
    for (const auto& w : square.cells()) {
        key += w.str();
    }
    return key;
}

}  // namespace

SearchOutcome bimagic_search(const SearchSpec& spec, const SquareSink& sink)
{
    validate_bimagic(spec);
    SearchClock clock(spec.budget);
    const auto perms = all_perms();
    SearchOutcome outcome;

    auto emit = [&](const Square& square) {
        recheck(square);
        ++outcome.emitted;
        return sink(square) && outcome.emitted < spec.limit;
    };

    try {
        if (spec.deterministic) {
            PlaneSearch search(admissible_rows(), clock);
            bool finished = search.run([&](const std::array<Row, kPlanes>& rows) {
                for (std::size_t code = 0; code < 6 * 6 * 6 * 6; ++code) {
                    clock.tick();
                    std::array<Perm, kPlanes> sigma{perms[code / 216], perms[(code / 36) % 6],
                                                    perms[(code / 6) % 6], perms[code % 6]};
                    if (!emit(build(rows, sigma))) {
                        return false;
                    }
                }
                return true;
            });
            outcome.status = finished ? SearchStatus::Complete : SearchStatus::LimitReached;
        } else {
            // Randomized restarts: a shuffled candidate order picks the
            // first compatible tuple, random permutations relabel digits.
            std::mt19937_64 rng(spec.seed);
            std::unordered_set<std::string> seen;
            auto rows = admissible_rows();
            constexpr std::size_t kMaxStale = 20000;
            std::size_t stale = 0;
            outcome.status = SearchStatus::Complete;
            while (stale < kMaxStale) {
                clock.check();
                std::shuffle(rows.begin(), rows.end(), rng);
                std::optional<std::array<Row, kPlanes>> found;
                PlaneSearch search(rows, clock);
                search.run([&](const std::array<Row, kPlanes>& tuple) {
                    found = tuple;
                    return false;
                });
                if (!found) {
                    break;
                }
                std::array<Perm, kPlanes> sigma{};
                for (auto& s : sigma) {
                    s = perms[std::uniform_int_distribution<std::size_t>(0, perms.size() - 1)(rng)];
                }
                Square square = build(*found, sigma);
                if (!seen.insert(fingerprint(square)).second) {
                    ++stale;
                    continue;
                }
                stale = 0;
                if (!emit(square)) {
                    outcome.status = SearchStatus::LimitReached;
                    break;
                }
            }
        }
    } catch (const BudgetHit&) {
        outcome.status = SearchStatus::BudgetReached;
    }
    outcome.nodes = clock.nodes();
    if (outcome.emitted == 0) {
        if (outcome.status == SearchStatus::BudgetReached) {
            throw Error(ErrorCode::BudgetExhausted, "no bimagic square found within " +
                                                        std::to_string(spec.budget.count()) + " ms");
        }
        throw Error(ErrorCode::Unsatisfiable, "bimagic search space exhausted without a solution");
    }
    return outcome;
}

}  // namespace magicsq
