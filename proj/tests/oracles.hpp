#pragma once

// Independent reference implementations used by the tests. Everything here
// works on plain long long values so it shares no code with the library.

#include "tropknap/census.hpp"
#include "tropknap/instance.hpp"
#include "tropknap/reductions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace tropknap {
inline void PrintTo(const Matrix& m, std::ostream* os) { *os << m.to_string(); }
}  // namespace tropknap

namespace oracle {

using tropknap::Matrix;
using tropknap::Semiring;

using Grid = std::vector<long long>;  // row-major k x k

inline long long low(Semiring s) { return s == Semiring::MaxPlus ? 0 : 1; }

inline long long times(long long a, long long b, Semiring s) { return s == Semiring::MaxPlus ? a + b : a * b; }

inline Grid mul(const Grid& a, const Grid& b, std::size_t k, Semiring s)
{
    Grid c(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            long long best = times(a[i * k], b[j], s);
            for (std::size_t l = 1; l < k; ++l) best = std::max(best, times(a[i * k + l], b[l * k + j], s));
            c[i * k + j] = best;
        }
    return c;
}

inline Grid grid(const Matrix& m)
{
    Grid g;
    for (const auto& e : m.entries()) g.push_back(e.convert_to<long long>());
    return g;
}

inline Matrix matrix(const Grid& g, std::size_t k, Semiring s)
{
    std::vector<tropknap::Integer> e(g.begin(), g.end());
    return Matrix(s, k, std::move(e));
}

inline Grid random_grid(std::size_t k, Semiring s, long long hi, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long long> d(low(s), hi);
    Grid g(k * k);
    for (auto& x : g) x = d(rng);
    return g;
}

// Largest X with A X <= B, entry by entry, or nullopt when some entry would
// fall below the domain.
inline std::optional<Grid> residual_box(const Grid& a, const Grid& b, std::size_t k, Semiring s)
{
    Grid top(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            long long best = 0;
            for (std::size_t l = 0; l < k; ++l) {
                const long long v = s == Semiring::MaxPlus ? b[l * k + j] - a[l * k + i] : b[l * k + j] / a[l * k + i];
                best = l == 0 ? v : std::min(best, v);
            }
            if (best < low(s)) return std::nullopt;
            top[i * k + j] = best;
        }
    return top;
}

inline std::uint64_t box_volume(const Grid& top, Semiring s)
{
    std::uint64_t v = 1;
    for (long long t : top) v *= static_cast<std::uint64_t>(t - low(s) + 1);
    return v;
}

// Visits every X with low <= X <= top in row-major lexicographic order.
inline void scan_box(const Grid& top, Semiring s, const std::function<void(const Grid&)>& visit)
{
    Grid x(top.size(), low(s));
    while (true) {
        visit(x);
        std::size_t pos = x.size();
        while (pos > 0) {
            --pos;
            if (x[pos] < top[pos]) {
                ++x[pos];
                break;
            }
            x[pos] = low(s);
            if (pos == 0) return;
        }
    }
}

// All solutions of A X = B by scanning the residual box.
inline std::vector<Grid> solutions(const Grid& a, const Grid& b, std::size_t k, Semiring s)
{
    std::vector<Grid> out;
    const auto top = residual_box(a, b, k, s);
    if (!top) return out;
    scan_box(*top, s, [&](const Grid& x) {
        if (mul(a, x, k, s) == b) out.push_back(x);
    });
    return out;
}

// Subset-sum and knapsack by depth-first search over exponent vectors in
// lexicographic order. A partial product that is not below c can never grow
// back into c, which keeps the search small.
inline bool leq(const Grid& a, const Grid& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::optional<std::vector<long long>> search(const std::vector<Grid>& w, const Grid& c, std::size_t k,
                                                    Semiring s, long long max_exponent)
{
    const std::size_t n = w.size();
    std::vector<long long> x(n, 0);
    std::function<bool(std::size_t, const std::optional<Grid>&)> rec = [&](std::size_t i,
                                                                          const std::optional<Grid>& prefix) {
        if (i == n) return prefix.has_value() && *prefix == c;
        x[i] = 0;
        if (rec(i + 1, prefix)) return true;
        std::optional<Grid> p = prefix;
        for (long long e = 1; e <= max_exponent; ++e) {
            p = p ? mul(*p, w[i], k, s) : w[i];
            if (!leq(*p, c)) break;
            x[i] = e;
            if (rec(i + 1, p)) return true;
        }
        x[i] = 0;
        return false;
    };
    if (rec(0, std::nullopt)) return x;
    return std::nullopt;
}

// Exact cover by brute force over subsets of triples.
inline std::optional<std::vector<int>> exact_cover(std::size_t ground, const std::vector<std::array<std::size_t, 3>>& t)
{
    const std::size_t n = t.size();
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        std::vector<int> hit(ground + 1, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                for (auto e : t[i]) ++hit[e];
        if (std::all_of(hit.begin() + 1, hit.end(), [](int h) { return h == 1; })) {
            std::vector<int> pick(n);
            for (std::size_t i = 0; i < n; ++i) pick[i] = mask >> i & 1;
            return pick;
        }
    }
    return std::nullopt;
}

inline unsigned bits(unsigned long long v) { return v == 0 ? 0 : 64 - __builtin_clzll(v); }

// All max-times instances with k = 1 and binary size exactly m.
inline std::vector<std::vector<unsigned long long>> instances_k1(unsigned m)
{
    // Encodes an instance as (w_1, ..., w_n, c); size is sum of bit lengths plus n.
    std::vector<std::vector<unsigned long long>> out;
    std::vector<unsigned long long> cur;
    std::function<void(unsigned)> rec = [&](unsigned budget) {
        // close with a target using the whole remaining budget
        if (budget >= 1 && budget < 63) {
            for (unsigned long long c = 1ULL << (budget - 1); c < (1ULL << budget); ++c) {
                auto inst = cur;
                inst.push_back(c);
                out.push_back(std::move(inst));
            }
        }
        // or add another witness: its bits + 1 separator, leaving >= 1 for the target
        for (unsigned b = 1; b + 1 < budget; ++b) {
            for (unsigned long long w = 1ULL << (b - 1); w < (1ULL << b); ++w) {
                cur.push_back(w);
                rec(budget - b - 1);
                cur.pop_back();
            }
        }
    };
    rec(m);
    return out;
}

}  // namespace oracle
