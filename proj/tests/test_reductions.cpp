#include "oracles.hpp"

#include "tropknap/reductions.hpp"
#include "tropknap/solvers.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace tropknap;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Embed, Examples)
{
    EXPECT_EQ(embed_constant(3, 2, Semiring::MaxPlus), Matrix::from_rows(Semiring::MaxPlus, {{3, 3}, {3, 3}}));
    EXPECT_EQ(embed_constant(1, 3, Semiring::MaxTimes), Matrix::constant(Semiring::MaxTimes, 3, 1));
    EXPECT_EQ(embed_constant(2, 2, Semiring::MaxPlus) * embed_constant(3, 2, Semiring::MaxPlus),
              embed_constant(5, 2, Semiring::MaxPlus));
    EXPECT_THROW(embed_constant(0, 2, Semiring::MaxTimes), DomainError);
}

TEST(Embed, Homomorphism)
{
    std::mt19937_64 rng(41);
    for (Semiring s : {Semiring::MaxPlus, Semiring::MaxTimes}) {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t k = 1 + trial % 4;
            const Integer a = rng() % 1000 + 1;
            const Integer b = rng() % 1000 + 1;
            EXPECT_EQ(embed_constant(a, k, s) * embed_constant(b, k, s), embed_constant(scalar_mul(a, b, s), k, s));
        }
    }
}

TEST(ReduceScalar, Examples)
{
    const auto add = reduce_scalar_to_matrix(ints({2, 3}), 5, 2, Semiring::MaxPlus);
    EXPECT_EQ(solve_ssp_dp(add).certificate, (Certificate{ints({1, 1})}));
    const auto mul = reduce_scalar_to_matrix(ints({2, 3}), 6, 2, Semiring::MaxTimes);
    EXPECT_EQ(solve_ssp_dp(mul).verdict, Verdict::Yes);
    const auto pow = reduce_scalar_to_matrix(ints({2}), 8, 2, Semiring::MaxTimes);
    EXPECT_EQ(solve_kp_dp(pow).certificate, (Certificate{ints({3})}));

    const ScalarInstance s{ScalarOp::Multiply, ints({2}), 8};
    EXPECT_EQ(reduce_scalar_to_matrix(s, 2), pow);
}

TEST(Primes, Examples)
{
    EXPECT_EQ(first_primes(4), ints({2, 3, 5, 7}));
    EXPECT_EQ(first_primes(1), ints({2}));
    EXPECT_EQ(first_primes(8), ints({2, 3, 5, 7, 11, 13, 17, 19}));
    EXPECT_THROW(first_primes(0), std::invalid_argument);
}

TEST(X3C, SingleTriple)
{
    const X3CInstance x(3, {{1, 2, 3}});
    const auto s = reduce_x3c_to_kp_product(x);
    EXPECT_EQ(s.op, ScalarOp::Multiply);
    EXPECT_EQ(s.items, ints({210, 7}));
    EXPECT_EQ(s.target, 210);
    const auto v = solve_scalar_brute(s, ProblemKind::Knapsack);
    EXPECT_TRUE(v.yes);
    EXPECT_EQ(v.certificate, (Certificate{ints({1, 0})}));
}

TEST(X3C, Validation)
{
    EXPECT_THROW(X3CInstance(3, {{1, 1, 2}}), std::invalid_argument);
    EXPECT_THROW(X3CInstance(4, {{1, 2, 3}}), std::invalid_argument);
    EXPECT_THROW(X3CInstance(3, {{0, 1, 2}}), std::invalid_argument);
    EXPECT_THROW(X3CInstance(3, {{1, 2, 4}}), std::invalid_argument);
}

TEST(X3C, TwoTripleCover)
{
    const X3CInstance x(6, {{1, 2, 3}, {4, 5, 6}, {1, 2, 4}});
    const auto v = solve_scalar_brute(reduce_x3c_to_kp_product(x), ProblemKind::Knapsack);
    ASSERT_TRUE(v.yes);
    // items alternate between a triple and its complement
    EXPECT_EQ(v.certificate->exponents, ints({1, 0, 1, 0, 0, 1}));
}

TEST(ScalarBrute, Examples)
{
    EXPECT_EQ(solve_scalar_brute({ScalarOp::Add, ints({2, 3}), 5}, ProblemKind::SubsetSum).certificate,
              (Certificate{ints({1, 1})}));
    EXPECT_FALSE(solve_scalar_brute({ScalarOp::Multiply, ints({3}), 8}, ProblemKind::Knapsack).yes);
    EXPECT_TRUE(solve_scalar_brute({ScalarOp::Add, ints({0}), 0}, ProblemKind::Knapsack).yes);
    EXPECT_FALSE(solve_scalar_brute({ScalarOp::Add, ints({}), 0}, ProblemKind::SubsetSum).yes);
    EXPECT_THROW(solve_scalar_brute({ScalarOp::Multiply, ints({0}), 4}, ProblemKind::SubsetSum), DomainError);
    EXPECT_THROW(solve_scalar_brute({ScalarOp::Multiply, ints({2}), 0}, ProblemKind::SubsetSum), DomainError);
}

TEST(Property, ReductionPreservesAnswers)
{
    std::mt19937_64 rng(42);
    for (ScalarOp op : {ScalarOp::Add, ScalarOp::Multiply}) {
        const Semiring s = semiring_for(op);
        for (ProblemKind kind : {ProblemKind::SubsetSum, ProblemKind::Knapsack}) {
            for (int trial = 0; trial < 100; ++trial) {
                const std::size_t n = rng() % 5;
                ScalarInstance inst{op, {}, 0};
                for (std::size_t i = 0; i < n; ++i) inst.items.push_back(op == ScalarOp::Add ? rng() % 8 : rng() % 5 + 1);
                inst.target = op == ScalarOp::Add ? rng() % 20 : rng() % 64 + 1;
                const std::size_t k = 1 + trial % 2;
                const auto matrix = reduce_scalar_to_matrix(inst, k);
                const bool ssp = kind == ProblemKind::SubsetSum;
                const auto scalar = solve_scalar_brute(inst, kind);
                const auto dp = ssp ? solve_ssp_dp(matrix) : solve_kp_dp(matrix);
                ASSERT_EQ(scalar.yes, dp.verdict == Verdict::Yes);
                if (dp.certificate) ASSERT_TRUE(verify_certificate(matrix, *dp.certificate, kind));
            }
        }
    }
}

TEST(Property, X3CMatchesExactCover)
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t ground = 3 * (1 + rng() % 3);
        const std::size_t n = 1 + rng() % 5;
        std::vector<X3CInstance::Triple> triples;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> pool(ground);
            std::iota(pool.begin(), pool.end(), 1);
            std::shuffle(pool.begin(), pool.end(), rng);
            triples.push_back({pool[0], pool[1], pool[2]});
        }
        const X3CInstance x(ground, triples);
        const auto want = oracle::exact_cover(ground, triples);
        const auto got = solve_scalar_brute(reduce_x3c_to_kp_product(x), ProblemKind::Knapsack);
        ASSERT_EQ(want.has_value(), got.yes);
        if (got.yes) {
            for (std::size_t i = 0; i < n; ++i) {
                ASSERT_EQ(got.certificate->exponents[2 * i] + got.certificate->exponents[2 * i + 1], 1);
            }
        }
    }
}
