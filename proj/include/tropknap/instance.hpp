#pragma once

#include "tropknap/tropical_core.hpp"

#include <string_view>
#include <vector>

namespace tropknap {

/// Subset sum (binary exponents) or knapsack (non-negative exponents).
enum class ProblemKind { SubsetSum, Knapsack };

std::string_view to_string(ProblemKind kind);
ProblemKind parse_problem_kind(std::string_view name);

/// Witnesses W_1..W_n and target C, all sharing one semiring and dimension.
/// n may be zero.
class ProblemInstance {
public:
    ProblemInstance(Semiring semiring, std::size_t dim, std::vector<Matrix> witnesses,
                    Matrix target);

    Semiring semiring() const noexcept { return semiring_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return witnesses_.size(); }
    const std::vector<Matrix>& witnesses() const noexcept { return witnesses_; }
    const Matrix& witness(std::size_t i) const { return witnesses_.at(i); }
    const Matrix& target() const noexcept { return target_; }

    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

private:
    Semiring semiring_;
    std::size_t dim_;
    std::vector<Matrix> witnesses_;
    Matrix target_;
};

/// Sum of witness sizes, target size and n.
Integer size_of_instance(const ProblemInstance& instance, SizeMode mode);

}  // namespace tropknap
