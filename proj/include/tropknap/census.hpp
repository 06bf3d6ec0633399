#pragma once

// Counting and uniform sampling over the strata U_m of max-times instances
// of binary size m.
//
// A matrix of size l has k^2 entries of bit lengths s_1..s_{k^2} >= 1 with
// sum l - k^2 + 1. The lengths form a composition (stars and bars) and each
// entry then has s - 1 free bits below its leading one, giving
//   |M_l| = 2^(l - 2k^2 + 1) * C(l - k^2, k^2 - 1).
// Witness tuples of total size s (sizes plus one per witness) satisfy
//   |Q_0| = 1,  |Q_s| = sum_l |M_l| |Q_(s - l - 1)|,
// and |U_m| = sum_l |Q_(m - l)| |M_l|.

#include "tropknap/instance.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace tropknap {

using Rng = std::mt19937_64;

struct CensusCount {
    std::uint64_t parameter = 0;
    std::size_t k = 0;
    Integer value;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyStratum : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Integer binomial(std::uint64_t n, std::uint64_t r);

/// Smallest binary size of a k x k max-times matrix (all ones): 2k^2 - 1.
std::uint64_t min_matrix_size(std::size_t k);

CensusCount count_matrices_closed(std::uint64_t l, std::size_t k);

/// Enumerates every matrix whose entries could fit in size l and counts
/// those of size exactly l. Throws CapExceeded when that search space holds
/// more than cap matrices.
CensusCount count_matrices_exhaustive(std::uint64_t l, std::size_t k, std::uint64_t cap);

/// Tables of |M_l| and |Q_s| for all l, s <= m.
class StratumCounts {
public:
    StratumCounts(std::uint64_t m, std::size_t k);

    std::uint64_t m() const noexcept { return m_; }
    std::size_t k() const noexcept { return k_; }
    const Integer& matrices(std::uint64_t l) const { return matrices_.at(l); }
    const Integer& tuples(std::uint64_t s) const { return tuples_.at(s); }
    const Integer& instances() const noexcept { return instances_; }

private:
    std::uint64_t m_;
    std::size_t k_;
    std::vector<Integer> matrices_;
    std::vector<Integer> tuples_;
    Integer instances_;
};

CensusCount count_witness_tuples(std::uint64_t s, std::size_t k);
CensusCount count_instances(std::uint64_t m, std::size_t k);

/// Uniform integer in [0, bound) by rejection on whole 64-bit words, so the
/// stream of draws depends only on the generator.
std::uint64_t uniform_u64(std::uint64_t bound, Rng& rng);
Integer uniform_below(const Integer& bound, Rng& rng);

/// Uniform over M_l.
Matrix sample_matrix(std::uint64_t l, std::size_t k, Rng& rng);

/// Uniform over U_m; throws EmptyStratum when |U_m| = 0.
ProblemInstance sample_instance(const StratumCounts& counts, Rng& rng);
ProblemInstance sample_instance(std::uint64_t m, std::size_t k, std::uint64_t seed);

/// |V(X (x) Y = C)|, the number of pairs (X, Y) of domain matrices with
/// product C. Counting stops as soon as the running total exceeds limit, so
/// any result above limit only certifies "more than limit".
Integer count_factorizations(const Matrix& c, const Integer& limit);

struct DensityEstimate {
    std::uint64_t m = 0;
    std::size_t k = 0;
    std::size_t samples = 0;
    std::size_t hits = 0;
    unsigned threshold_exponent = 0;

    double fraction() const { return samples ? double(hits) / double(samples) : 0.0; }
    double standard_error() const;
    /// m^(k^2 + 1) / m^threshold_exponent.
    double density_bound() const;
};

/// Fraction of uniform samples from U_m whose target has more than
/// m^threshold_exponent factorizations X (x) Y = C.
DensityEstimate estimate_hard_density(std::uint64_t m, std::size_t k, std::size_t samples,
                                      unsigned threshold_exponent, std::uint64_t seed);

}  // namespace tropknap
