#pragma once

// Residuation for one-sided systems A (x) X = B.
//
// The principal solution X* has x*_ij = min_l (b_lj "divided by" a_li), the
// tropical quotient being b - a in max-plus and the exact fraction b / a in
// max-times. An integer matrix X solves the system iff X <= X* and the
// positions where X is tight (x_ij = x*_ij) jointly cover every (l, j):
// position (i, j) covers (l, j) when row l attains the minimum for x*_ij.
// Since the cover sets of column j only mention column j, the system splits
// into k independent column systems.

#include "tropknap/tropical_core.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropknap {

/// Exact value num / den with den > 0. Not reduced; comparisons
/// cross-multiply.
struct Quotient {
    Integer num;
    Integer den{1};

    bool is_integer() const { return den == 1 || num % den == 0; }
    Integer floor() const;
};

bool operator<(const Quotient& a, const Quotient& b);
bool operator==(const Quotient& a, const Quotient& b);
bool operator<=(const Integer& x, const Quotient& q);
bool operator==(const Integer& x, const Quotient& q);

class PrincipalSolution {
public:
    PrincipalSolution(const Matrix& a, const Matrix& b);

    std::size_t dim() const noexcept { return dim_; }
    Semiring semiring() const noexcept { return semiring_; }

    const Quotient& value(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }

    /// Entrywise largest domain matrix below X*, or nullopt when some entry
    /// of X* lies below the domain minimum.
    const std::optional<Matrix>& feasible_floor() const noexcept { return floor_; }

    /// Whether position (i, j) can be tight over the integers: the floor
    /// exists and equals the exact principal value there.
    bool tightable(std::size_t i, std::size_t j) const { return tightable_[i * dim_ + j] != 0; }

    /// Rows l with (l, j) in M_ij, ascending.
    const std::vector<std::size_t>& cover(std::size_t i, std::size_t j) const
    {
        return covers_[i * dim_ + j];
    }

private:
    Semiring semiring_;
    std::size_t dim_;
    std::vector<Quotient> values_;
    std::optional<Matrix> floor_;
    std::vector<char> tightable_;
    std::vector<std::vector<std::size_t>> covers_;
};

PrincipalSolution principal_solution(const Matrix& a, const Matrix& b);

/// A (x) floor(X*) = B. Products are monotone and every domain solution is
/// below the floor, so this decides solvability.
bool has_solution(const Matrix& a, const Matrix& b);

/// Membership test through the covering criterion instead of a product.
bool check_solution_lemma(const Matrix& a, const Matrix& x, const Matrix& b);

/// Cursor over every domain solution of A (x) X = B in lexicographic order of
/// the row-major entries. Partial assignments are extended only while each
/// column can still be covered by its unassigned tightable positions, so the
/// search never backtracks out of a dead end and the cost is proportional to
/// the output.
class SolutionEnumerator {
public:
    SolutionEnumerator(const Matrix& a, const Matrix& b);

    std::optional<Matrix> next();

    const PrincipalSolution& principal() const noexcept { return principal_; }

private:
    bool column_feasible(std::size_t pos) const;
    void set_value(std::size_t pos, Integer value);
    void clear(std::size_t pos);
    bool advance(std::size_t pos);
    void fill_from(std::size_t pos);
    Matrix current() const;

    PrincipalSolution principal_;
    std::size_t dim_;
    Integer low_;
    std::vector<Integer> upper_;
    std::vector<Integer> values_;
    std::vector<char> tight_;
    // cover_count_[l * k + j]: tight assigned positions of column j covering row l.
    std::vector<std::size_t> cover_count_;
    // reachable_[(j * (k + 1) + r) * k + l]: some tightable (i, j) with i >= r covers l.
    std::vector<char> reachable_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Matrix> enumerate_solutions(const Matrix& a, const Matrix& b,
                                        std::optional<std::size_t> limit = std::nullopt);

/// Number of solutions, counting stops once it reaches limit.
std::size_t count_solutions(const Matrix& a, const Matrix& b, std::size_t limit);

/// Exact number of solutions without enumerating them: per column, sum over
/// the subsets of tightable rows whose cover sets span the column, with every
/// other row free to take any slack value. Exponential in k only.
Integer solution_count(const Matrix& a, const Matrix& b);

}  // namespace tropknap
