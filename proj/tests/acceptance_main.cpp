// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "document.hpp"
#include "magicsq/magicsq.hpp"
#include "oracles.hpp"

using namespace magicsq;

namespace {

struct Outcome
{
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            passed = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

struct Criterion
{
    int id;
    std::string title;
    std::chrono::milliseconds limit;
    std::function<void(Outcome&)> body;
};

struct CliResult
{
    int code;
    std::string out;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    cli::Streams io{in, out, err, false};
    int code = cli::run(args, io);
    return {code, out.str()};
}

std::string s(Exact v) { return magicsq::to_string(v); }

Square first_row(const std::vector<std::string>& row)
{
    std::vector<std::vector<std::string>> g(row.size(), std::vector<std::string>(row.size(), std::string(row[0].size(), '0')));
    g[0] = row;
    return Square::from_strings(g);
}

void ac1(Outcome& o)
{
    auto r = pythagoras_check(3333, 4444, 5555);
    o.require(r.holds, "identity does not hold");
    o.require(r.a2 == 11108889 && r.b2 == 19749136 && r.c2 == 30858025,
              "squares " + s(r.a2) + "," + s(r.b2) + "," + s(r.c2));
    o.detail = s(r.a2) + "+" + s(r.b2) + "=" + s(r.c2);
}

void ac2(Outcome& o)
{
    const std::vector<std::pair<std::vector<std::string>, Exact>> quoted = {
        {{"1221", "1111", "1001"}, 3333},
        {{"1012", "2101", "1210", "0121"}, 4444},
        {{"2002", "2222", "0011", "0200", "1120"}, 5555},
    };
    for (const auto& [cells, want] : quoted) {
        Exact oracle_sum = 0;
        for (const auto& c : cells) oracle_sum += oracle::value_of(c);
        Exact got = line_sums(first_row(cells)).front().sum;
        o.require(got == want && oracle_sum == want, "row sums to " + s(got));
    }
}

void ac3(Outcome& o)
{
    auto g = run_cli({"generate", "--order", "3", "--width", "2", "--line-sum", "3", "--distinct"});
    o.require(g.code == 0, "generate exit " + std::to_string(g.code));
    auto v = run_cli({"verify", "--report", "json"}, g.out);
    auto j = nlohmann::json::parse(v.out, nullptr, false);
    o.require(v.code == 0 && !j.is_discarded() && j.size() >= 1 && j[0]["s1"] == "33", "order-3 width-2 S1");

    SearchSpec spec;
    spec.width = 4;
    spec.line_sum_per_place = {3, 3, 3, 3};
    spec.require_palindromic = true;
    spec.require_distinct = true;
    auto sq = gen_squares(spec).front();
    auto report = verify(sq);
    o.require(report.s1 == std::optional<Exact>(3333), "palindromic S1");
    o.require(report.all_entries_palindromic, "entries not palindromic");
    o.require(oracle::line_totals(sq.to_strings()).front() == 3333, "oracle palindromic S1");
}

void ac4(Outcome& o)
{
    SearchSpec four;
    four.order = 4;
    four.width = 4;
    four.line_sum_per_place = {4, 4, 4, 4};
    four.require_distinct = true;
    auto sq4 = gen_squares(four).front();
    auto t4 = oracle::line_totals(sq4.to_strings());
    o.require(oracle::constant(t4) && t4.front() == 4444, "oracle S1 4444");
    o.require(check_magic(sq4) == std::optional<Exact>(4444), "S1 4444");

    SearchSpec five;
    five.order = 5;
    five.width = 4;
    five.line_sum_per_place = {5, 5, 5, 5};
    five.require_distinct = true;
    five.require_pandiagonal = true;
    auto sq5 = gen_squares(five).front();
    auto g5 = sq5.to_strings();
    o.require(oracle::constant(oracle::broken_diagonal_totals(g5)), "oracle broken diagonals");
    o.require(oracle::line_totals(g5).front() == 5555, "oracle S1 5555");
    o.require(check_magic(sq5) == std::optional<Exact>(5555) && check_pandiagonal(sq5), "pandiagonal 5555");
}

void ac5(Outcome& o)
{
    SearchSpec spec;
    spec.order = 4;
    spec.width = 4;
    spec.line_sum_per_place = {4, 4, 4, 4};
    spec.require_distinct = true;
    spec.limit = 100;
    auto squares = gen_squares(spec);
    o.require(squares.size() == 100, "generated " + std::to_string(squares.size()));
    std::size_t good = 0;
    for (const auto& sq : squares) {
        auto rotated = rotate_square(sq);
        auto before = check_magic(sq);
        auto after = check_magic(rotated);
        auto totals = oracle::line_totals(rotated.to_strings());
        if (before && after == before && oracle::constant(totals) && totals.front() == *before) ++good;
    }
    o.require(good == squares.size(), std::to_string(good) + " of " + std::to_string(squares.size()) + " kept S1");
}

void ac6(Outcome& o)
{
    for (int sum = 0; sum <= 6; ++sum) {
        std::set<std::string> brute = oracle::enumerate_3x3(3, sum);
        std::set<std::string> got;
        gen_layers({3, Alphabet{}, sum, false}, [&](const Layer& l) {
            std::string k;
            for (Digit d : l.digits()) k.push_back(static_cast<char>('0' + d));
            got.insert(k);
            return true;
        });
        o.require(got == brute, "mismatch at s=" + std::to_string(sum));
    }
}

void ac7(Outcome& o)
{
    std::vector<CodeWord> words;
    for (const auto& w : oracle::all_words("012", 4)) words.emplace_back(w);
    const Exact s2 = s2_from_multiset(words, 9);
    const Exact in_text = 17169495;
    const Exact header = 17169395;
    o.require(s2 == in_text, "multiset S2 " + s(s2));
    o.require(s2 != header, "header value unexpectedly consistent");

    std::string search = "no square within budget";
    SearchSpec spec;
    spec.order = 9;
    spec.width = 4;
    spec.require_bimagic = true;
    spec.budget = std::chrono::minutes(10);
    try {
        auto sq = gen_squares(spec).front();
        auto sums = check_bimagic(sq);
        o.require(sums && sums->s1 == 9999 && sums->s2 == in_text, "emitted square fails (9999, 17169495)");
        o.require(check_blocks(sq, 3) == std::optional<Exact>(9999), "3x3 blocks");
        auto sq2 = oracle::line_totals(sq.to_strings(), true);
        o.require(oracle::constant(sq2) && sq2.front() == in_text, "oracle S2");
        search = "square verifies S1=9999 S2=" + s(sums ? sums->s2 : 0) + " blocks=9999";
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExhausted) throw;
    }
    o.detail = "S2=" + s(s2) + " agrees with 17169495; header 17169395 inconsistent; " + search + (o.detail.empty() ? "" : "; " + o.detail);
}

void ac8(Outcome& o)
{
    std::vector<CodeWord> words;
    for (const auto& w : oracle::all_words("012", 4)) words.emplace_back(w + std::string(w.rbegin(), w.rend()));
    const Exact s2 = s2_from_multiset(words, 9);
    const std::string digits = s(s2);
    o.require(digits.back() == '5', "last digit " + digits.substr(digits.size() - 1));
    o.require(digits != "1717172174949490", "printed value reproduced");
    o.detail = "S2=" + digits + " ends in 5; printed 1717172174949490 cannot be an S2 here" +
               (o.passed ? "" : "; " + o.detail);
}

void ac9(Outcome& o)
{
    std::mt19937_64 rng(1729);
    std::size_t bad = 0;
    for (int k = 0; k < 1000; ++k) {
        auto sq = Square::from_strings(oracle::random_grid(rng, 1 + k % 9, 1 + k % 8, "0123456789"));
        if (recompose(decompose(sq)) != sq) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " round-trip failures");

    bad = 0;
    for (int k = 0; k < 500; ++k) {
        CodeWord w(oracle::random_grid(rng, 1, 1 + k % 10, "0125689")[0][0]);
        if (sevenseg::rotate_text(sevenseg::render_codeword(w)) != sevenseg::render_codeword(rotate_codeword(w))) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " rendering mismatches");

    bad = 0;
    for (int k = 0; k < 500; ++k) {
        CodeWord w(oracle::random_grid(rng, 1, 1 + k % 10, "01258")[0][0]);
        if (mirror_codeword(mirror_codeword(w)) != w) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " mirror failures");
}

void ac10(Outcome& o)
{
    const std::vector<std::vector<std::string>> runs = {
        {"generate", "--order", "4", "--width", "4", "--line-sum", "4", "--distinct", "--limit", "20"},
        {"generate", "--order", "5", "--width", "4", "--line-sum", "5", "--pandiagonal", "--distinct", "--limit", "5"},
        {"generate", "--bimagic", "--limit", "5"},
    };
    for (auto args : runs) {
        args.insert(args.end(), {"--deterministic", "--seed", "0"});
        auto a = run_cli(args);
        auto b = run_cli(args);
        o.require(a.code == 0 && b.code == 0, "generate failed");
        o.require(!a.out.empty() && a.out == b.out, "outputs differ for " + args[2]);
    }
}

// Composite of m×m blocks, each an order-k magic square with line sum t:
// every row, column and diagonal crosses m blocks along one of their lines.
Square composite(std::size_t k, std::size_t m, bool pandiagonal, std::uint64_t seed)
{
    SearchSpec spec;
    spec.order = k;
    spec.width = 4;
    spec.line_sum_per_place.assign(4, static_cast<int>(k));
    spec.require_distinct = true;
    spec.require_pandiagonal = pandiagonal;
    spec.seed = seed;
    spec.limit = m * m;
    auto blocks = gen_squares(spec);
    std::vector<std::vector<Square>> grid(m);
    for (std::size_t b = 0; b < m * m; ++b) grid[b / m].push_back(blocks[b % blocks.size()]);
    return compose_blocks(grid);
}

void ac11(Outcome& o)
{
    struct Case
    {
        std::size_t k;
        bool pandiagonal;
    };
    std::string summary;
    for (auto c : {Case{4, false}, Case{5, true}}) {
        auto sq = composite(c.k, c.k, c.pandiagonal, 11);
        auto g = sq.to_strings();
        auto totals = oracle::line_totals(g);
        Exact block_total = 0;
        for (std::size_t i = 0; i < c.k; ++i) {
            for (std::size_t j = 0; j < c.k; ++j) block_total += oracle::value_of(g[i][j]);
        }
        const std::string doc = cli::write_json(cli::SquareDocument::from_square(sq));
        const std::string k = std::to_string(c.k);
        auto v = run_cli({"verify", "--report", "json", "--blocks", k}, doc);
        auto j = nlohmann::json::parse(v.out, nullptr, false);
        o.require(v.code == 0, "verify exit " + std::to_string(v.code));
        o.require(!j.is_discarded() && oracle::constant(totals) && j["s1"] == s(totals.front()), "S1 for order " + std::to_string(sq.order()));
        bool block_ok = false;
        if (!j.is_discarded()) {
            for (const auto& b : j["block_results"]) {
                if (b["k"] == c.k) block_ok = b["common_block_sum"] == s(block_total);
            }
        }
        o.require(block_ok, "block sum for order " + std::to_string(sq.order()));

        o.require(run_cli({"verify", "--bimagic"}, doc).code == 1, "property failure exit");
        o.require(run_cli({"verify", "--blocks", "7"}, doc).code == 2, "bad block exit");
        o.require(run_cli({"verify"}, doc.substr(0, doc.size() / 2)).code == 2, "malformed exit");
        summary += (summary.empty() ? "" : ", ") + std::to_string(sq.order()) + "x" + std::to_string(sq.order()) +
                   " S1=" + s(totals.front()) + " block=" + s(block_total);
    }
    o.require(run_cli({"generate", "--order", "3", "--line-sum", "7"}).code == 3, "unsatisfiable exit");
    o.detail = summary + (o.passed ? "" : "; " + o.detail);
}

}  // namespace

int main()
{
    using std::chrono::milliseconds;
    const std::vector<Criterion> criteria = {
        {1, "Pythagorean identity", milliseconds(1), ac1},
        {2, "quoted line sums", milliseconds(1), ac2},
        {3, "order-3 generation", milliseconds(1000), ac3},
        {4, "order-4 and pandiagonal order-5 generation", milliseconds(10000), ac4},
        {5, "upside-down law over 100 squares", milliseconds(5000), ac5},
        {6, "layer generator equals brute force", milliseconds(10000), ac6},
        {7, "9x9 bimagic audit", milliseconds(600000), ac7},
        {8, "palindromic S2 parity", milliseconds(1000), ac8},
        {9, "round trip, rendering, mirror", milliseconds(5000), ac9},
        {10, "deterministic generation", milliseconds(60000), ac10},
        {11, "16x16 and 25x25 composite audit", milliseconds(60000), ac11},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = ms <= static_cast<double>(c.limit.count());
        const bool ok = o.passed && in_time;
        if (!ok) ++failed;
        std::printf("AC%-2d %-4s %-44s %10.3f ms (limit %lld ms)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), ms,
                    static_cast<long long>(c.limit.count()), o.detail.empty() ? "" : "  ", o.detail.c_str());
        if (!in_time) std::printf("     over time limit\n");
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
