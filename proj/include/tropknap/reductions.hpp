#pragma once

// Instance generators from the classical scalar problems.
//
// embed_constant maps a scalar a to the k x k matrix with every entry a. It is
// a homomorphism for both semirings, so a scalar subset sum / knapsack
// instance and its embedding have the same answer. Exact cover by 3-sets is
// encoded as a multiplicative knapsack instance through distinct primes.

#include "tropknap/instance.hpp"
#include "tropknap/solvers.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tropknap {

enum class ScalarOp { Add, Multiply };

std::string_view to_string(ScalarOp op);
ScalarOp parse_scalar_op(std::string_view name);

/// Semiring whose product is op.
Semiring semiring_for(ScalarOp op);
ScalarOp scalar_op_for(Semiring s);

struct ScalarInstance {
    ScalarOp op = ScalarOp::Add;
    std::vector<Integer> items;
    Integer target;

    friend bool operator==(const ScalarInstance&, const ScalarInstance&) = default;
};

/// Ground set {1..ground_size} (a positive multiple of 3) and a list of
/// 3-element subsets given by their 1-based members.
class X3CInstance {
public:
    using Triple = std::array<std::size_t, 3>;

    X3CInstance(std::size_t ground_size, std::vector<Triple> triples);

    std::size_t ground_size() const noexcept { return ground_size_; }
    const std::vector<Triple>& triples() const noexcept { return triples_; }

private:
    std::size_t ground_size_;
    std::vector<Triple> triples_;
};

Matrix embed_constant(const Integer& a, std::size_t dim, Semiring s);

ProblemInstance reduce_scalar_to_matrix(std::span<const Integer> items, const Integer& target,
                                        std::size_t dim, Semiring s);
ProblemInstance reduce_scalar_to_matrix(const ScalarInstance& scalar, std::size_t dim);

/// The first count primes, by trial division.
std::vector<Integer> first_primes(std::size_t count);

/// Items (p_i1 p_i2 p_i3 q_i, q_i) per triple, target p_1..p_3m q_1..q_n,
/// where p are the first 3m primes and q the next n.
ScalarInstance reduce_x3c_to_kp_product(const X3CInstance& x3c);

struct ScalarVerdict {
    bool yes = false;
    std::optional<Certificate> certificate;
};

/// Exhaustive scan in lexicographic order; the all-zero vector is excluded
/// as in the matrix problems. Knapsack exponents are bounded by
/// target / w (addition, w > 0), by log2(target) (multiplication, w >= 2),
/// and by 1 for neutral items.
ScalarVerdict solve_scalar_brute(const ScalarInstance& scalar, ProblemKind kind);

}  // namespace tropknap
