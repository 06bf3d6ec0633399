#include "tropknap/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tropknap {

std::string_view to_string(ScalarOp op) { return op == ScalarOp::Add ? "add" : "multiply"; }

ScalarOp parse_scalar_op(std::string_view name)
{
    if (name == "add") return ScalarOp::Add;
    if (name == "multiply") return ScalarOp::Multiply;
    throw std::invalid_argument("unknown scalar op '" + std::string(name) +
                                "' (expected add or multiply)");
}

Semiring semiring_for(ScalarOp op)
{
    return op == ScalarOp::Add ? Semiring::MaxPlus : Semiring::MaxTimes;
}

ScalarOp scalar_op_for(Semiring s) { return s == Semiring::MaxPlus ? ScalarOp::Add : ScalarOp::Multiply; }

X3CInstance::X3CInstance(std::size_t ground_size, std::vector<Triple> triples)
    : ground_size_(ground_size), triples_(std::move(triples))
{
    if (ground_size_ == 0 || ground_size_ % 3 != 0) {
        throw std::invalid_argument("X3C ground set size must be a positive multiple of 3, got " +
                                    std::to_string(ground_size_));
    }
    for (std::size_t t = 0; t < triples_.size(); ++t) {
        const auto& tr = triples_[t];
        for (std::size_t e : tr) {
            if (e < 1 || e > ground_size_) {
                throw std::invalid_argument("triple " + std::to_string(t + 1) + " has member " +
                                            std::to_string(e) + " outside 1.." +
                                            std::to_string(ground_size_));
            }
        }
        if (tr[0] == tr[1] || tr[0] == tr[2] || tr[1] == tr[2]) {
            throw std::invalid_argument("triple " + std::to_string(t + 1) +
                                        " does not have 3 distinct members");
        }
    }
}

Matrix embed_constant(const Integer& a, std::size_t dim, Semiring s)
{
    return Matrix::constant(s, dim, a);
}

ProblemInstance reduce_scalar_to_matrix(std::span<const Integer> items, const Integer& target,
                                        std::size_t dim, Semiring s)
{
    std::vector<Matrix> witnesses;
    witnesses.reserve(items.size());
    for (const auto& w : items) witnesses.push_back(embed_constant(w, dim, s));
    return ProblemInstance(s, dim, std::move(witnesses), embed_constant(target, dim, s));
}

ProblemInstance reduce_scalar_to_matrix(const ScalarInstance& scalar, std::size_t dim)
{
    return reduce_scalar_to_matrix(scalar.items, scalar.target, dim, semiring_for(scalar.op));
}

std::vector<Integer> first_primes(std::size_t count)
{
    if (count == 0) throw std::invalid_argument("first_primes: count must be positive");
    std::vector<Integer> primes;
    primes.reserve(count);
    for (std::uint64_t candidate = 2; primes.size() < count; ++candidate) {
        bool prime = true;
        for (const auto& p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.emplace_back(candidate);
    }
    return primes;
}

ScalarInstance reduce_x3c_to_kp_product(const X3CInstance& x3c)
{
    const std::size_t ground = x3c.ground_size();
    const std::size_t n = x3c.triples().size();
    const auto primes = first_primes(ground + n);

    ScalarInstance out;
    out.op = ScalarOp::Multiply;
    out.target = 1;
    for (const auto& p : primes) out.target *= p;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& tr = x3c.triples()[i];
        const Integer& q = primes[ground + i];
        out.items.push_back(primes[tr[0] - 1] * primes[tr[1] - 1] * primes[tr[2] - 1] * q);
        out.items.push_back(q);
    }
    return out;
}

namespace {

class ScalarScan {
public:
    ScalarScan(const ScalarInstance& scalar, ProblemKind kind) : scalar_(scalar)
    {
        const bool add = scalar.op == ScalarOp::Add;
        if (add ? scalar.target < 0 : scalar.target < 1) {
            throw DomainError("scalar target " + scalar.target.str() + " outside the domain of " +
                              std::string(to_string(scalar.op)));
        }
        for (const auto& w : scalar.items) {
            if (add ? w < 0 : w < 1) {
                throw DomainError("scalar item " + w.str() + " outside the domain of " +
                                  std::string(to_string(scalar.op)));
            }
            Integer bound = 1;
            if (kind == ProblemKind::Knapsack) {
                if (add && w > 0) bound = scalar.target / w;
                if (!add && w >= 2) bound = Integer(bit_size(scalar.target)) - 1;  // floor(log2)
            }
            bounds_.push_back(std::max<Integer>(bound, 0));
        }
        exponents_.assign(scalar.items.size(), 0);
    }

    bool run() { return scan(0, scalar_.op == ScalarOp::Add ? 0 : 1, false); }

    Certificate certificate() const { return Certificate{exponents_}; }

private:
    bool scan(std::size_t i, const Integer& acc, bool used)
    {
        if (i == scalar_.items.size()) return used && acc == scalar_.target;
        exponents_[i] = 0;
        if (scan(i + 1, acc, used)) return true;
        Integer current = acc;
        const Integer& w = scalar_.items[i];
        for (Integer x = 1; x <= bounds_[i]; ++x) {
            if (scalar_.op == ScalarOp::Add)
                current += w;
            else
                current *= w;
            if (current > scalar_.target) break;
            exponents_[i] = x;
            if (scan(i + 1, current, true)) return true;
        }
        exponents_[i] = 0;
        return false;
    }

    const ScalarInstance& scalar_;
    std::vector<Integer> bounds_;
    std::vector<Integer> exponents_;
};

}  // namespace

ScalarVerdict solve_scalar_brute(const ScalarInstance& scalar, ProblemKind kind)
{
    ScalarScan scan(scalar, kind);
    ScalarVerdict out;
    if (scan.run()) {
        out.yes = true;
        out.certificate = scan.certificate();
    }
    return out;
}

}  // namespace tropknap
