#include "tropknap/solvers.hpp"

#include "tropknap/linear_systems.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>
#include <string>

namespace tropknap {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<Matrix> evaluate_certificate(const ProblemInstance& instance,
                                           const Certificate& cert)
{
    if (cert.exponents.size() != instance.size()) {
        throw std::invalid_argument("certificate has " + std::to_string(cert.exponents.size()) +
                                    " exponents, instance has " +
                                    std::to_string(instance.size()) + " witnesses");
    }
    std::optional<Matrix> product;
    for (std::size_t i = 0; i < instance.size(); ++i) {
        const Integer& x = cert.exponents[i];
        if (x < 0) throw std::invalid_argument("certificate exponents must be non-negative");
        if (x == 0) continue;
        Matrix factor = mat_pow(instance.witness(i), x);
        product = product ? mat_mul(*product, factor) : std::move(factor);
    }
    return product;
}

bool verify_certificate(const ProblemInstance& instance, const Certificate& cert,
                        ProblemKind kind)
{
    if (kind == ProblemKind::SubsetSum) {
        for (const auto& x : cert.exponents) {
            if (x != 0 && x != 1) {
                throw std::invalid_argument("subset sum certificates must be binary, got " +
                                            x.str());
            }
        }
    }
    const auto product = evaluate_certificate(instance, cert);
    return product && *product == instance.target();
}

Integer kp_exponent_bound(const Matrix& w, const Matrix& target)
{
    if (w.is_domain_minimum()) return 1;
    return 2 * target.max_entry();
}

SolveOutcome brute_force_ssp(const ProblemInstance& instance)
{
    const std::size_t n = instance.size();
    SolveOutcome out;
    if (n == 0) return out;
    if (n >= 63) throw std::invalid_argument("brute_force_ssp: too many witnesses");
    // Counting upward with x_1 as the most significant bit visits vectors in
    // lexicographic order.
    const std::uint64_t last = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t v = 1; v <= last; ++v) {
        ++out.stats.recursive_calls;
        std::optional<Matrix> product;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(v >> (n - 1 - i) & 1)) continue;
            product = product ? mat_mul(*product, instance.witness(i)) : instance.witness(i);
        }
        if (*product == instance.target()) {
            Certificate cert;
            for (std::size_t i = 0; i < n; ++i) cert.exponents.emplace_back((v >> (n - 1 - i)) & 1);
            out.verdict = Verdict::Yes;
            out.certificate = std::move(cert);
            return out;
        }
    }
    return out;
}

namespace {

class KnapsackScan {
public:
    explicit KnapsackScan(const ProblemInstance& instance) : instance_(instance)
    {
        exponents_.assign(instance.size(), 0);
        for (const auto& w : instance.witnesses()) {
            bounds_.push_back(kp_exponent_bound(w, instance.target()));
        }
    }

    bool run(std::size_t& nodes)
    {
        nodes_ = &nodes;
        return scan(0, std::nullopt);
    }

    Certificate certificate() const { return Certificate{exponents_}; }

private:
    bool scan(std::size_t i, const std::optional<Matrix>& prefix)
    {
        ++*nodes_;
        const Matrix& target = instance_.target();
        if (i == instance_.size()) return prefix && *prefix == target;
        const Matrix& w = instance_.witness(i);
        exponents_[i] = 0;
        if (scan(i + 1, prefix)) return true;
        std::optional<Matrix> current = prefix;
        for (Integer x = 1; x <= bounds_[i]; ++x) {
            current = current ? mat_mul(*current, w) : w;
            // Later factors can only increase the product.
            if (!mat_leq(*current, target)) break;
            exponents_[i] = x;
            if (scan(i + 1, current)) return true;
        }
        exponents_[i] = 0;
        return false;
    }

    const ProblemInstance& instance_;
    std::vector<Integer> bounds_;
    std::vector<Integer> exponents_;
    std::size_t* nodes_ = nullptr;
};

}  // namespace

SolveOutcome brute_force_kp(const ProblemInstance& instance)
{
    SolveOutcome out;
    if (instance.size() == 0) return out;
    KnapsackScan scan(instance);
    if (scan.run(out.stats.recursive_calls)) {
        out.verdict = Verdict::Yes;
        out.certificate = scan.certificate();
    }
    return out;
}

Integer memo_key_bound(const ProblemInstance& instance)
{
    const auto k2 = static_cast<unsigned>(instance.dim() * instance.dim());
    return Integer(instance.size() + 1) *
           boost::multiprecision::pow(instance.target().max_entry() + 1, k2);
}

unsigned default_cap_exponent(std::size_t dim) { return static_cast<unsigned>(dim * dim + 3); }

Integer generic_key_cap(const ProblemInstance& instance, unsigned exponent)
{
    // A max-plus instance can have size 0; the cap never drops below one key.
    const Integer m = std::max<Integer>(size_of_instance(instance, SizeMode::Binary), 1);
    return boost::multiprecision::pow(m, exponent);
}

MemoizedSolver::MemoizedSolver(const ProblemInstance& instance, ProblemKind kind,
                               std::optional<Integer> key_cap)
    : instance_(instance), kind_(kind)
{
    if (key_cap) {
        constexpr auto max = std::numeric_limits<std::size_t>::max();
        key_cap_ = *key_cap > max ? max : static_cast<std::size_t>(*key_cap);
    }
}

SolveOutcome MemoizedSolver::solve()
{
    memo_.clear();
    calls_ = 0;
    const Result r = visit(0, instance_.target());
    SolveOutcome out;
    out.stats.memo_entries = memo_.size();
    out.stats.recursive_calls = calls_;
    switch (r) {
    case Result::True:
        out.verdict = Verdict::Yes;
        out.certificate = reconstruct();
        break;
    case Result::False: out.verdict = Verdict::No; break;
    case Result::Abort: out.verdict = Verdict::Unknown; break;
    }
    return out;
}

std::vector<Matrix> MemoizedSolver::visited_targets() const
{
    std::vector<Matrix> out;
    out.reserve(memo_.size());
    for (const auto& [key, entry] : memo_) out.push_back(key.target);
    return out;
}

MemoizedSolver::Result MemoizedSolver::visit(std::size_t index, const Matrix& target)
{
    ++calls_;
    auto [it, inserted] = memo_.try_emplace(Key{index, target});
    Entry& entry = it->second;  // node references survive rehashing
    if (!inserted) {
        // Keys along one call path strictly decrease, so no key is revisited
        // while still open.
        assert(entry.state != State::Open);
        return entry.state == State::True ? Result::True : Result::False;
    }
    if (key_cap_ && memo_.size() > *key_cap_) return Result::Abort;

    auto succeed = [&](Step step, std::optional<Matrix> next) {
        entry.state = State::True;
        entry.step = step;
        entry.next = std::move(next);
        return Result::True;
    };

    if (index == instance_.size()) {
        entry.state = State::False;
        return Result::False;
    }
    const Matrix& w = instance_.witness(index);
    if (w == target) return succeed(Step::Match, std::nullopt);

    Result r = visit(index + 1, target);
    if (r == Result::Abort) return r;
    if (r == Result::True) return succeed(Step::Skip, std::nullopt);

    SolutionEnumerator solutions(w, target);
    while (auto x = solutions.next()) {
        r = visit(index + 1, *x);
        if (r == Result::Abort) return r;
        if (r == Result::True) return succeed(Step::Descend, std::move(*x));
        if (kind_ == ProblemKind::Knapsack && !(*x == target)) {
            r = visit(index, *x);
            if (r == Result::Abort) return r;
            if (r == Result::True) return succeed(Step::Reuse, std::move(*x));
        }
    }
    entry.state = State::False;
    return Result::False;
}

Certificate MemoizedSolver::reconstruct() const
{
    Certificate cert;
    cert.exponents.assign(instance_.size(), 0);
    Key key{0, instance_.target()};
    for (;;) {
        const Entry& entry = memo_.at(key);
        assert(entry.state == State::True);
        switch (entry.step) {
        case Step::Match: ++cert.exponents[key.index]; return cert;
        case Step::Skip: ++key.index; break;
        case Step::Descend:
            ++cert.exponents[key.index];
            ++key.index;
            key.target = *entry.next;
            break;
        case Step::Reuse:
            ++cert.exponents[key.index];
            key.target = *entry.next;
            break;
        case Step::None: throw std::logic_error("memo entry without a recorded step");
        }
    }
}

SolveOutcome solve_ssp_dp(const ProblemInstance& instance)
{
    return MemoizedSolver(instance, ProblemKind::SubsetSum).solve();
}

SolveOutcome solve_kp_dp(const ProblemInstance& instance)
{
    return MemoizedSolver(instance, ProblemKind::Knapsack).solve();
}

SolveOutcome solve_ssp_generic(const ProblemInstance& instance,
                               std::optional<unsigned> cap_exponent)
{
    const unsigned e = cap_exponent.value_or(default_cap_exponent(instance.dim()));
    return MemoizedSolver(instance, ProblemKind::SubsetSum, generic_key_cap(instance, e)).solve();
}

SolveOutcome solve_kp_generic(const ProblemInstance& instance,
                              std::optional<unsigned> cap_exponent)
{
    const unsigned e = cap_exponent.value_or(default_cap_exponent(instance.dim()));
    return MemoizedSolver(instance, ProblemKind::Knapsack, generic_key_cap(instance, e)).solve();
}

}  // namespace tropknap
