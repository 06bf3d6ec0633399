#include "tropknap/linear_systems.hpp"

#include <cassert>

namespace tropknap {

Integer Quotient::floor() const
{
    // den > 0; round toward negative infinity for negative max-plus values.
    Integer q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

bool operator<(const Quotient& a, const Quotient& b) { return a.num * b.den < b.num * a.den; }

bool operator==(const Quotient& a, const Quotient& b) { return a.num * b.den == b.num * a.den; }

bool operator<=(const Integer& x, const Quotient& q) { return x * q.den <= q.num; }

bool operator==(const Integer& x, const Quotient& q) { return x * q.den == q.num; }

namespace {

Quotient residual(const Integer& b, const Integer& a, Semiring s)
{
    if (s == Semiring::MaxPlus) return Quotient{b - a, 1};
    return Quotient{b, a};
}

}  // namespace

PrincipalSolution::PrincipalSolution(const Matrix& a, const Matrix& b)
    : semiring_(a.semiring()), dim_(a.dim())
{
    require_compatible(a, b, "principal_solution");
    const std::size_t k = dim_;
    values_.resize(k * k);
    covers_.resize(k * k);
    tightable_.assign(k * k, 0);

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Quotient best = residual(b(0, j), a(0, i), semiring_);
            std::vector<std::size_t> rows{0};
            for (std::size_t l = 1; l < k; ++l) {
                Quotient cand = residual(b(l, j), a(l, i), semiring_);
                if (cand < best) {
                    best = std::move(cand);
                    rows.assign(1, l);
                } else if (cand == best) {
                    rows.push_back(l);
                }
            }
            values_[i * k + j] = std::move(best);
            covers_[i * k + j] = std::move(rows);
        }
    }

    const Integer low = domain_min(semiring_);
    std::vector<Integer> floors;
    floors.reserve(k * k);
    for (const auto& v : values_) {
        Integer f = v.floor();
        if (f < low) return;  // no domain matrix lies below X*
        floors.push_back(std::move(f));
    }
    for (std::size_t p = 0; p < k * k; ++p) tightable_[p] = values_[p].is_integer() ? 1 : 0;
    floor_.emplace(semiring_, k, std::move(floors));
}

PrincipalSolution principal_solution(const Matrix& a, const Matrix& b)
{
    return PrincipalSolution(a, b);
}

bool has_solution(const Matrix& a, const Matrix& b)
{
    const PrincipalSolution ps(a, b);
    return ps.feasible_floor() && mat_mul(a, *ps.feasible_floor()) == b;
}

bool check_solution_lemma(const Matrix& a, const Matrix& x, const Matrix& b)
{
    require_compatible(a, x, "check_solution_lemma");
    const PrincipalSolution ps(a, b);
    const std::size_t k = a.dim();
    std::vector<char> covered(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Quotient& star = ps.value(i, j);
            if (!(x(i, j) <= star)) return false;
            if (x(i, j) == star) {
                for (std::size_t l : ps.cover(i, j)) covered[l * k + j] = 1;
            }
        }
    }
    for (char c : covered) {
        if (!c) return false;
    }
    return true;
}

SolutionEnumerator::SolutionEnumerator(const Matrix& a, const Matrix& b)
    : principal_(a, b), dim_(a.dim()), low_(domain_min(a.semiring()))
{
    const std::size_t k = dim_;
    if (!principal_.feasible_floor()) {
        done_ = true;
        return;
    }
    const auto floor_entries = principal_.feasible_floor()->entries();
    upper_.assign(floor_entries.begin(), floor_entries.end());
    values_.assign(k * k, low_);
    tight_.assign(k * k, 0);
    cover_count_.assign(k * k, 0);
    reachable_.assign(k * (k + 1) * k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t r = k; r-- > 0;) {
            char* here = &reachable_[(j * (k + 1) + r) * k];
            const char* below = &reachable_[(j * (k + 1) + r + 1) * k];
            for (std::size_t l = 0; l < k; ++l) here[l] = below[l];
            if (principal_.tightable(r, j)) {
                for (std::size_t l : principal_.cover(r, j)) here[l] = 1;
            }
        }
    }
    // Solvable iff every column is coverable using all of its tightable positions.
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < k; ++l) {
            if (!reachable_[(j * (k + 1)) * k + l]) {
                done_ = true;
                return;
            }
        }
    }
}

bool SolutionEnumerator::column_feasible(std::size_t pos) const
{
    const std::size_t k = dim_;
    const std::size_t i = pos / k;
    const std::size_t j = pos % k;
    const char* rest = &reachable_[(j * (k + 1) + i + 1) * k];
    for (std::size_t l = 0; l < k; ++l) {
        if (cover_count_[l * k + j] == 0 && !rest[l]) return false;
    }
    return true;
}

void SolutionEnumerator::set_value(std::size_t pos, Integer value)
{
    const std::size_t k = dim_;
    const std::size_t i = pos / k;
    const std::size_t j = pos % k;
    const bool tight = principal_.tightable(i, j) && value == upper_[pos];
    values_[pos] = std::move(value);
    tight_[pos] = tight ? 1 : 0;
    if (tight) {
        for (std::size_t l : principal_.cover(i, j)) ++cover_count_[l * k + j];
    }
}

void SolutionEnumerator::clear(std::size_t pos)
{
    if (!tight_[pos]) return;
    const std::size_t k = dim_;
    const std::size_t i = pos / k;
    const std::size_t j = pos % k;
    for (std::size_t l : principal_.cover(i, j)) --cover_count_[l * k + j];
    tight_[pos] = 0;
}

// Moves position pos to its next feasible value. Every value below the upper
// bound is slack and shares one feasibility status, so only the step onto
// the upper bound can change it.
bool SolutionEnumerator::advance(std::size_t pos)
{
    if (values_[pos] >= upper_[pos]) return false;
    // Current value is slack and feasible, so any larger slack value is too.
    Integer next = values_[pos] + 1;
    clear(pos);
    set_value(pos, std::move(next));
    if (column_feasible(pos)) return true;
    clear(pos);
    return false;
}

void SolutionEnumerator::fill_from(std::size_t pos)
{
    for (std::size_t p = pos; p < values_.size(); ++p) {
        set_value(p, low_);
        if (column_feasible(p)) continue;
        clear(p);
        // Only the tight value can keep the column coverable.
        set_value(p, upper_[p]);
        assert(column_feasible(p));
    }
}

Matrix SolutionEnumerator::current() const
{
    return Matrix(principal_.semiring(), dim_, values_);
}

std::optional<Matrix> SolutionEnumerator::next()
{
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        fill_from(0);
        return current();
    }
    for (std::size_t p = values_.size(); p-- > 0;) {
        if (advance(p)) {
            fill_from(p + 1);
            return current();
        }
        clear(p);
    }
    done_ = true;
    return std::nullopt;
}

std::vector<Matrix> enumerate_solutions(const Matrix& a, const Matrix& b,
                                        std::optional<std::size_t> limit)
{
    std::vector<Matrix> out;
    if (limit && *limit == 0) return out;
    SolutionEnumerator it(a, b);
    while (auto x = it.next()) {
        out.push_back(std::move(*x));
        if (limit && out.size() >= *limit) break;
    }
    return out;
}

std::size_t count_solutions(const Matrix& a, const Matrix& b, std::size_t limit)
{
    std::size_t count = 0;
    SolutionEnumerator it(a, b);
    while (count < limit && it.next()) ++count;
    return count;
}

Integer solution_count(const Matrix& a, const Matrix& b)
{
    const PrincipalSolution ps(a, b);
    if (!ps.feasible_floor()) return 0;
    const Matrix& upper = *ps.feasible_floor();
    const Integer low = domain_min(a.semiring());
    const std::size_t k = a.dim();
    Integer total = 1;
    for (std::size_t j = 0; j < k; ++j) {
        Integer column = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<char> covered(k, 0);
            Integer ways = 1;
            bool valid = true;
            for (std::size_t i = 0; i < k && valid; ++i) {
                const bool tight = ps.tightable(i, j);
                if (mask >> i & 1) {
                    if (!tight) valid = false;
                    for (std::size_t l : ps.cover(i, j)) covered[l] = 1;
                } else {
                    ways *= upper(i, j) - low + 1 - (tight ? 1 : 0);
                }
            }
            if (!valid) continue;
            bool spans = true;
            for (char c : covered) spans = spans && c;
            if (spans) column += ways;
        }
        total *= column;
        if (total == 0) break;
    }
    return total;
}

}  // namespace tropknap
