#include "oracles.hpp"

#include "tropknap/linear_systems.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tropknap;

namespace {

Matrix mp(std::initializer_list<std::initializer_list<long long>> rows)
{
    return Matrix::from_rows(Semiring::MaxPlus, rows);
}

Matrix mt(std::initializer_list<std::initializer_list<long long>> rows)
{
    return Matrix::from_rows(Semiring::MaxTimes, rows);
}

// A random pair where B = A X0 for a random X0 half of the time.
std::pair<oracle::Grid, oracle::Grid> random_pair(std::size_t k, Semiring s, std::mt19937_64& rng)
{
    const auto a = oracle::random_grid(k, s, 8, rng);
    if (rng() % 2 == 0) {
        for (int attempt = 0; attempt < 20; ++attempt) {
            const auto x = oracle::random_grid(k, s, s == Semiring::MaxPlus ? 4 : 3, rng);
            const auto b = oracle::mul(a, x, k, s);
            if (*std::max_element(b.begin(), b.end()) <= 8) return {a, b};
        }
    }
    return {a, oracle::random_grid(k, s, 8, rng)};
}

}  // namespace

TEST(Principal, Examples)
{
    const auto p = principal_solution(mp({{1, 2}, {3, 4}}), mp({{5, 6}, {7, 8}}));
    EXPECT_EQ(p.feasible_floor(), mp({{4, 5}, {3, 4}}));
    EXPECT_EQ(principal_solution(mp({{0, 0}, {0, 0}}), mp({{1, 2}, {3, 4}})).feasible_floor(), mp({{1, 2}, {1, 2}}));
    EXPECT_EQ(principal_solution(mt({{2, 2}, {2, 2}}), mt({{4, 4}, {4, 4}})).feasible_floor(), mt({{2, 2}, {2, 2}}));
}

TEST(Principal, ExactQuotientsAndTightness)
{
    const auto p = principal_solution(mt({{2}}), mt({{7}}));
    EXPECT_EQ(p.value(0, 0), (Quotient{7, 2}));
    EXPECT_FALSE(p.tightable(0, 0));
    EXPECT_EQ(p.feasible_floor(), mt({{3}}));
    EXPECT_FALSE(has_solution(mt({{2}}), mt({{7}})));
}

TEST(Principal, NegativeEntryMeansNoFloor)
{
    const auto p = principal_solution(mp({{5, 0}, {0, 0}}), mp({{1, 9}, {9, 9}}));
    EXPECT_FALSE(p.feasible_floor().has_value());
    EXPECT_FALSE(has_solution(mp({{5, 0}, {0, 0}}), mp({{1, 9}, {9, 9}})));
}

TEST(HasSolution, Examples)
{
    EXPECT_TRUE(has_solution(mp({{1, 2}, {3, 4}}), mp({{5, 6}, {7, 8}})));
    EXPECT_FALSE(has_solution(mp({{0, 0}, {0, 0}}), mp({{1, 2}, {3, 4}})));
    EXPECT_TRUE(has_solution(mt({{2, 2}, {2, 2}}), mt({{4, 4}, {4, 4}})));
}

TEST(SolutionLemma, Examples)
{
    const auto a = mp({{1, 2}, {3, 4}});
    const auto b = mp({{5, 6}, {7, 8}});
    EXPECT_TRUE(check_solution_lemma(a, mp({{4, 5}, {3, 4}}), b));
    EXPECT_TRUE(check_solution_lemma(a, mp({{4, 5}, {3, 3}}), b));
    EXPECT_FALSE(check_solution_lemma(a, mp({{3, 5}, {2, 4}}), b));
    // Above the principal solution the covering test does not apply.
    EXPECT_FALSE(check_solution_lemma(a, mp({{5, 5}, {3, 4}}), b));
}

TEST(Enumerate, Examples)
{
    EXPECT_EQ(enumerate_solutions(mp({{0}}), mp({{3}})), std::vector<Matrix>{mp({{3}})});
    EXPECT_TRUE(enumerate_solutions(mt({{2}}), mt({{7}})).empty());

    const auto a = mp({{1, 2}, {3, 4}});
    const auto b = mp({{5, 6}, {7, 8}});
    const auto all = enumerate_solutions(a, b);
    EXPECT_NE(std::find(all.begin(), all.end(), mp({{4, 5}, {3, 4}})), all.end());
    EXPECT_NE(std::find(all.begin(), all.end(), mp({{4, 5}, {3, 3}})), all.end());

    std::vector<Matrix> scanned;
    for (const auto& g : oracle::solutions(oracle::grid(a), oracle::grid(b), 2, Semiring::MaxPlus)) {
        scanned.push_back(oracle::matrix(g, 2, Semiring::MaxPlus));
    }
    EXPECT_EQ(all, scanned);
}

TEST(Enumerate, LimitAndCount)
{
    const auto a = mp({{0, 0}, {0, 0}});
    const auto b = mp({{3, 3}, {3, 3}});
    const auto all = enumerate_solutions(a, b);
    // each column: x_0j, x_1j in [0,3] with max 3 gives 7 choices
    EXPECT_EQ(all.size(), 49u);
    EXPECT_EQ(solution_count(a, b), 49);
    EXPECT_EQ(enumerate_solutions(a, b, 5).size(), 5u);
    EXPECT_EQ(count_solutions(a, b, 10), 10u);
    EXPECT_EQ(count_solutions(a, b, 100), 49u);
}

TEST(Enumerate, CursorStaysExhausted)
{
    SolutionEnumerator e(mp({{0}}), mp({{3}}));
    EXPECT_EQ(e.next(), mp({{3}}));
    EXPECT_FALSE(e.next().has_value());
    EXPECT_FALSE(e.next().has_value());
}

TEST(Enumerate, RejectsMismatch)
{
    EXPECT_THROW(enumerate_solutions(mp({{0}}), mt({{3}})), std::invalid_argument);
    EXPECT_THROW(principal_solution(mp({{0}}), mp({{1, 1}, {1, 1}})), std::invalid_argument);
}

TEST(Property, EnumerationMatchesBoxScan)
{
    std::mt19937_64 rng(21);
    for (Semiring s : {Semiring::MaxPlus, Semiring::MaxTimes}) {
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t k = 1 + trial % 3;
            const auto [ga, gb] = random_pair(k, s, rng);
            const auto top = oracle::residual_box(ga, gb, k, s);
            if (top && oracle::box_volume(*top, s) > 2'000'000) continue;
            const Matrix a = oracle::matrix(ga, k, s);
            const Matrix b = oracle::matrix(gb, k, s);
            std::vector<Matrix> expect;
            for (const auto& g : oracle::solutions(ga, gb, k, s)) expect.push_back(oracle::matrix(g, k, s));
            const auto got = enumerate_solutions(a, b);
            ASSERT_EQ(got, expect) << a.to_string() << " / " << b.to_string();
            ASSERT_EQ(solution_count(a, b), Integer(expect.size()));
            ASSERT_EQ(has_solution(a, b), !expect.empty());
            const auto floor = principal_solution(a, b).feasible_floor();
            if (!expect.empty()) {
                ASSERT_EQ(expect.back(), *floor);
                for (const auto& x : got) ASSERT_TRUE(mat_leq(x, *floor));
            }
        }
    }
}

TEST(Property, LemmaAgreesWithProduct)
{
    std::mt19937_64 rng(22);
    for (Semiring s : {Semiring::MaxPlus, Semiring::MaxTimes}) {
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t k = 1 + trial % 3;
            const auto [ga, gb] = random_pair(k, s, rng);
            const auto top = oracle::residual_box(ga, gb, k, s);
            if (!top || oracle::box_volume(*top, s) > 200'000) continue;
            const Matrix a = oracle::matrix(ga, k, s);
            const Matrix b = oracle::matrix(gb, k, s);
            oracle::scan_box(*top, s, [&](const oracle::Grid& x) {
                const Matrix xm = oracle::matrix(x, k, s);
                ASSERT_EQ(check_solution_lemma(a, xm, b), oracle::mul(ga, x, k, s) == gb);
            });
        }
    }
}

TEST(Property, SolutionCountMatchesEnumeration)
{
    std::mt19937_64 rng(23);
    for (Semiring s : {Semiring::MaxPlus, Semiring::MaxTimes}) {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t k = 1 + trial % 3;
            const auto a = oracle::matrix(oracle::random_grid(k, s, 3, rng), k, s);
            const auto x = oracle::matrix(oracle::random_grid(k, s, 4, rng), k, s);
            const auto b = a * x;
            const auto n = count_solutions(a, b, 200'000);
            if (n == 200'000) continue;
            ASSERT_EQ(solution_count(a, b), Integer(n));
            ASSERT_GE(n, 1u);
        }
    }
}
