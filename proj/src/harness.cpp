#include "tropknap/harness.hpp"

#include "tropknap/reductions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace tropknap {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body)
{
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    }
}

namespace {

Integer uniform_in(const Integer& lo, const Integer& hi, Rng& rng)
{
    return lo + uniform_below(hi - lo + 1, rng);
}

Matrix random_matrix(Semiring s, std::size_t k, const Integer& lo, const Integer& hi, Rng& rng)
{
    std::vector<Integer> entries;
    entries.reserve(k * k);
    for (std::size_t p = 0; p < k * k; ++p) entries.push_back(uniform_in(lo, hi, rng));
    return Matrix(s, k, std::move(entries));
}

}  // namespace

ProblemInstance random_instance(const RandomInstanceSpec& spec, Rng& rng)
{
    const Semiring s = spec.semiring;
    const Integer low = domain_min(s);
    const Integer high = std::max<Integer>(low, spec.max_entry);
    const std::size_t k = 1 + uniform_u64(spec.max_dim, rng);
    const std::size_t n = uniform_u64(spec.max_witnesses + 1, rng);
    const Integer ceiling = uniform_in(low, high, rng);

    std::vector<Matrix> witnesses;
    for (std::size_t i = 0; i < n; ++i) witnesses.push_back(random_matrix(s, k, low, ceiling, rng));

    const std::uint64_t style = uniform_u64(3, rng);
    std::optional<Matrix> target;
    if (style != 0 && n > 0) {
        const std::uint64_t max_exp = spec.kind == ProblemKind::SubsetSum ? 1 : 3;
        std::optional<Matrix> product;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t x = uniform_u64(max_exp + 1, rng);
            for (std::uint64_t r = 0; r < x; ++r) {
                product = product ? mat_mul(*product, witnesses[i]) : witnesses[i];
            }
        }
        if (!product) product = witnesses[uniform_u64(n, rng)];
        if (product->max_entry() <= high) {
            if (style == 2) {
                std::vector<Integer> entries(product->entries().begin(), product->entries().end());
                Integer& e = entries[uniform_u64(entries.size(), rng)];
                if (e == low || (e < high && (rng() & 1)))
                    ++e;
                else
                    --e;
                target.emplace(s, k, std::move(entries));
            } else {
                target = std::move(product);
            }
        }
    }
    if (!target) target = random_matrix(s, k, low, high, rng);
    return ProblemInstance(s, k, std::move(witnesses), std::move(*target));
}

OracleSuiteResult run_oracle_suite(const RandomInstanceSpec& spec, std::size_t count,
                                   std::uint64_t seed, unsigned jobs)
{
    struct Row {
        bool agree = false;
        bool yes = false;
        bool cert_ok = true;
        bool bound_ok = true;
        bool generic_ok = true;
        std::size_t memo = 0;
    };
    std::vector<Row> rows(count);
    const bool ssp = spec.kind == ProblemKind::SubsetSum;
    parallel_for(count, jobs, [&](std::size_t i) {
        Rng rng(split_seed(seed, i));
        const ProblemInstance instance = random_instance(spec, rng);
        const SolveOutcome oracle = ssp ? brute_force_ssp(instance) : brute_force_kp(instance);
        const SolveOutcome dp = ssp ? solve_ssp_dp(instance) : solve_kp_dp(instance);
        const SolveOutcome generic = ssp ? solve_ssp_generic(instance) : solve_kp_generic(instance);
        Row& row = rows[i];
        row.agree = oracle.verdict == dp.verdict;
        row.yes = dp.verdict == Verdict::Yes;
        for (const SolveOutcome* o : {&oracle, &dp, &generic}) {
            if (o->verdict == Verdict::Yes &&
                !(o->certificate && verify_certificate(instance, *o->certificate, spec.kind))) {
                row.cert_ok = false;
            }
        }
        row.memo = dp.stats.memo_entries;
        row.bound_ok = Integer(dp.stats.memo_entries) <= memo_key_bound(instance);
        row.generic_ok = generic.verdict == dp.verdict;
    });

    OracleSuiteResult out;
    out.semiring = spec.semiring;
    out.kind = spec.kind;
    out.instances = count;
    for (const Row& row : rows) {
        out.agreements += row.agree;
        out.yes_instances += row.yes;
        out.certificate_failures += !row.cert_ok;
        out.memo_bound_violations += !row.bound_ok;
        out.generic_mismatches += !row.generic_ok;
        out.max_memo_entries = std::max(out.max_memo_entries, row.memo);
    }
    return out;
}

double fitted_exponent(const std::vector<ScalingPoint>& points)
{
    if (points.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(points.size());
    for (const auto& p : points) {
        const double x = std::log(p.target_max.convert_to<double>());
        const double y = std::log(double(std::max<std::size_t>(p.memo_entries, 1)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

ScalingSeries run_scaling_series(std::string label, Semiring semiring, ProblemKind kind,
                                 const std::vector<Integer>& witnesses,
                                 const std::vector<Integer>& targets)
{
    ScalingSeries series;
    series.label = std::move(label);
    series.kind = kind;
    for (const auto& m : targets) {
        const ProblemInstance instance = reduce_scalar_to_matrix(witnesses, m, 1, semiring);
        const SolveOutcome o =
            kind == ProblemKind::SubsetSum ? solve_ssp_dp(instance) : solve_kp_dp(instance);
        series.points.push_back({m, o.stats.memo_entries});
    }
    series.fitted_exponent = fitted_exponent(series.points);
    return series;
}

std::vector<ScalingSeries> run_default_scaling_suite()
{
    const std::vector<Integer> targets{8, 16, 32, 64};
    std::vector<ScalingSeries> out;
    out.push_back(run_scaling_series("max_plus kp w=(3,5,7)", Semiring::MaxPlus,
                                     ProblemKind::Knapsack, {3, 5, 7}, targets));
    out.push_back(run_scaling_series("max_plus kp w=(1,2)", Semiring::MaxPlus,
                                     ProblemKind::Knapsack, {1, 2}, targets));
    out.push_back(run_scaling_series("max_plus ssp w=(1,2,3,4,5)", Semiring::MaxPlus,
                                     ProblemKind::SubsetSum, {1, 2, 3, 4, 5}, targets));
    out.push_back(run_scaling_series("max_times kp w=(2,3)", Semiring::MaxTimes,
                                     ProblemKind::Knapsack, {2, 3}, targets));
    out.push_back(run_scaling_series("max_times ssp w=(2,3,4)", Semiring::MaxTimes,
                                     ProblemKind::SubsetSum, {2, 3, 4}, targets));
    return out;
}

}  // namespace tropknap
