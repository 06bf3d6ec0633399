#pragma once

// Seeded random instances and the oracle/scaling suites shared by the bench
// command and the acceptance tests.

#include "tropknap/census.hpp"
#include "tropknap/solvers.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tropknap {

/// splitmix64 of seed combined with stream: independent per-item seeds, so
/// results do not depend on how items are spread over workers.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

/// Runs body(i) for i in [0, count) on up to jobs threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

struct RandomInstanceSpec {
    Semiring semiring = Semiring::MaxPlus;
    ProblemKind kind = ProblemKind::SubsetSum;
    std::size_t max_dim = 3;
    std::size_t max_witnesses = 4;
    // Bound on every witness and target entry.
    unsigned max_entry = 8;
};

/// Dimension and witness count are uniform. Each instance draws its own
/// entry ceiling in [domain min, max_entry] for the witnesses, and the
/// target is, with equal probability, uniformly random, a planted product of
/// the witnesses, or a planted product with one entry moved by one. Planted
/// targets with an entry above max_entry fall back to a random target.
ProblemInstance random_instance(const RandomInstanceSpec& spec, Rng& rng);

struct OracleSuiteResult {
    Semiring semiring = Semiring::MaxPlus;
    ProblemKind kind = ProblemKind::SubsetSum;
    std::size_t instances = 0;
    std::size_t agreements = 0;
    std::size_t yes_instances = 0;
    std::size_t certificate_failures = 0;
    std::size_t memo_bound_violations = 0;
    std::size_t generic_mismatches = 0;
    std::size_t max_memo_entries = 0;

    bool passed() const
    {
        return agreements == instances && certificate_failures == 0 &&
               memo_bound_violations == 0 && generic_mismatches == 0;
    }
};

/// Compares the memoized solver with the brute force on count instances and
/// checks certificates, the memo-key bound and the default-cap generic solver.
OracleSuiteResult run_oracle_suite(const RandomInstanceSpec& spec, std::size_t count,
                                   std::uint64_t seed, unsigned jobs);

struct ScalingPoint {
    Integer target_max;
    std::size_t memo_entries = 0;
};

struct ScalingSeries {
    std::string label;
    ProblemKind kind = ProblemKind::Knapsack;
    std::vector<ScalingPoint> points;
    double fitted_exponent = 0.0;
};

/// Least-squares slope of log(memo entries) against log(target max).
double fitted_exponent(const std::vector<ScalingPoint>& points);

/// Memo growth for fixed 1 x 1 witnesses and targets M in targets.
ScalingSeries run_scaling_series(std::string label, Semiring semiring, ProblemKind kind,
                                 const std::vector<Integer>& witnesses,
                                 const std::vector<Integer>& targets);

std::vector<ScalingSeries> run_default_scaling_suite();

}  // namespace tropknap
