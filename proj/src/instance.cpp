#include "tropknap/instance.hpp"

#include <string>

namespace tropknap {

std::string_view to_string(ProblemKind kind)
{
    return kind == ProblemKind::SubsetSum ? "ssp" : "kp";
}

ProblemKind parse_problem_kind(std::string_view name)
{
    if (name == "ssp") return ProblemKind::SubsetSum;
    if (name == "kp") return ProblemKind::Knapsack;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected ssp or kp)");
}

ProblemInstance::ProblemInstance(Semiring semiring, std::size_t dim,
                                 std::vector<Matrix> witnesses, Matrix target)
    : semiring_(semiring), dim_(dim), witnesses_(std::move(witnesses)), target_(std::move(target))
{
    auto check = [&](const Matrix& m, const std::string& what) {
        if (m.dim() != dim_) {
            throw ShapeError(what + " has dimension " + std::to_string(m.dim()) +
                             ", instance has " + std::to_string(dim_));
        }
        if (m.semiring() != semiring_) throw ShapeError(what + " has the wrong semiring");
    };
    check(target_, "target");
    for (std::size_t i = 0; i < witnesses_.size(); ++i) {
        check(witnesses_[i], "witness " + std::to_string(i + 1));
    }
}

Integer size_of_instance(const ProblemInstance& instance, SizeMode mode)
{
    Integer total = size_of_matrix(instance.target(), mode) + instance.size();
    for (const auto& w : instance.witnesses()) total += size_of_matrix(w, mode);
    return total;
}

}  // namespace tropknap
