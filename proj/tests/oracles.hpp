// oracles.hpp -- independent reference computations for the test suites
//
// Nothing here calls into the code paths it is used to check: sums are
// recomputed from the cell strings with plain integer loops.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "magicsq/types.hpp"

namespace oracle {

using Grid = std::vector<std::vector<std::string>>;
using magicsq::Exact;

inline Exact value_of(const std::string& word)
{
    Exact v = 0;
    for (char c : word) {
        v = v * 10 + (c - '0');
    }
    return v;
}

/// All 2n+2 line sums of a grid, rows then columns then both diagonals.
inline std::vector<Exact> line_totals(const Grid& g, bool squares = false)
{
    const std::size_t n = g.size();
    auto f = [squares](const std::string& w) {
        Exact v = value_of(w);
        return squares ? v * v : v;
    };
    std::vector<Exact> out;
    for (std::size_t i = 0; i < n; ++i) {
        Exact s = 0;
        for (std::size_t j = 0; j < n; ++j) s += f(g[i][j]);
        out.push_back(s);
    }
    for (std::size_t j = 0; j < n; ++j) {
        Exact s = 0;
        for (std::size_t i = 0; i < n; ++i) s += f(g[i][j]);
        out.push_back(s);
    }
    Exact d = 0, a = 0;
    for (std::size_t i = 0; i < n; ++i) {
        d += f(g[i][i]);
        a += f(g[i][n - 1 - i]);
    }
    out.push_back(d);
    out.push_back(a);
    return out;
}

inline bool constant(const std::vector<Exact>& v)
{
    for (Exact x : v) {
        if (x != v.front()) return false;
    }
    return true;
}

/// Sums over all 2n broken diagonals, enumerated cell by cell.
inline std::vector<Exact> broken_diagonal_totals(const Grid& g)
{
    const std::size_t n = g.size();
    std::vector<Exact> out;
    for (std::size_t k = 0; k < n; ++k) {
        Exact down = 0, up = 0;
        for (std::size_t i = 0; i < n; ++i) {
            down += value_of(g[i][(i + k) % n]);
            up += value_of(g[i][(k + n - i) % n]);
        }
        out.push_back(down);
        out.push_back(up);
    }
    return out;
}

/// The classical Lo-Shu square, entries minus one, as two base-3 digits.
inline Grid lo_shu_base3()
{
    const int lo_shu[3][3] = {{4, 9, 2}, {3, 5, 7}, {8, 1, 6}};
    Grid g(3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            int v = lo_shu[i][j] - 1;
            g[i].push_back(std::string{static_cast<char>('0' + v / 3), static_cast<char>('0' + v % 3)});
        }
    }
    return g;
}

/// Every 3×3 digit grid over {0..base−1} whose 8 lines sum to s, as
/// row-major digit strings.
inline std::set<std::string> enumerate_3x3(int base, int s)
{
    static const int lines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                                    {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};
    std::set<std::string> out;
    int total = 1;
    for (int c = 0; c < 9; ++c) total *= base;
    for (int code = 0; code < total; ++code) {
        std::array<int, 9> g{};
        int x = code;
        for (int c = 8; c >= 0; --c) {
            g[c] = x % base;
            x /= base;
        }
        bool ok = true;
        for (const auto& l : lines) {
            ok = ok && g[l[0]] + g[l[1]] + g[l[2]] == s;
        }
        if (ok) {
            std::string key;
            for (int v : g) key.push_back(static_cast<char>('0' + v));
            out.insert(key);
        }
    }
    return out;
}

/// All words of the given width over the alphabet, in ascending order.
inline std::vector<std::string> all_words(const std::string& alphabet, std::size_t width)
{
    std::vector<std::string> out{""};
    for (std::size_t p = 0; p < width; ++p) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            for (char c : alphabet) next.push_back(w + c);
        }
        out = std::move(next);
    }
    return out;
}

inline Exact sum_of_squares(const std::vector<std::string>& words)
{
    Exact t = 0;
    for (const auto& w : words) {
        Exact v = value_of(w);
        t += v * v;
    }
    return t;
}

/// Random grid of order n, width w, digits drawn from `digits`.
inline Grid random_grid(std::mt19937_64& rng, std::size_t n, std::size_t w, const std::string& digits)
{
    std::uniform_int_distribution<std::size_t> pick(0, digits.size() - 1);
    Grid g(n, std::vector<std::string>(n));
    for (auto& row : g) {
        for (auto& cell : row) {
            for (std::size_t p = 0; p < w; ++p) cell.push_back(digits[pick(rng)]);
        }
    }
    return g;
}

}  // namespace oracle
