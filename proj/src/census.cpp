#include "tropknap/census.hpp"

#include "tropknap/linear_systems.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <string>

namespace tropknap {

Integer binomial(std::uint64_t n, std::uint64_t r)
{
    if (r > n) return 0;
    r = std::min(r, n - r);
    Integer out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

std::uint64_t min_matrix_size(std::size_t k) { return 2 * k * k - 1; }

CensusCount count_matrices_closed(std::uint64_t l, std::size_t k)
{
    CensusCount out{l, k, 0};
    const std::uint64_t k2 = k * k;
    if (k == 0 || l < min_matrix_size(k)) return out;
    out.value = (Integer(1) << static_cast<unsigned>(l - 2 * k2 + 1)) * binomial(l - k2, k2 - 1);
    return out;
}

CensusCount count_matrices_exhaustive(std::uint64_t l, std::size_t k, std::uint64_t cap)
{
    CensusCount out{l, k, 0};
    const std::uint64_t k2 = k * k;
    if (k == 0 || l < min_matrix_size(k)) return out;
    // One entry can use at most the bits left after all others take one bit.
    const std::uint64_t max_bits = l - 2 * k2 + 2;
    if (max_bits >= 63) throw CapExceeded("exhaustive census: entries too wide");
    const std::uint64_t top = (std::uint64_t{1} << max_bits) - 1;
    Integer space = boost::multiprecision::pow(Integer(top), static_cast<unsigned>(k2));
    if (space > cap) {
        throw CapExceeded("exhaustive census over " + space.str() + " matrices exceeds cap " +
                          std::to_string(cap));
    }
    std::vector<std::uint64_t> entries(k2, 1);
    std::uint64_t hits = 0;
    for (;;) {
        std::uint64_t size = k2 - 1;
        for (std::uint64_t e : entries) size += std::bit_width(e);
        if (size == l) ++hits;
        std::size_t p = 0;
        while (p < k2 && entries[p] == top) entries[p++] = 1;
        if (p == k2) break;
        ++entries[p];
    }
    out.value = hits;
    return out;
}

StratumCounts::StratumCounts(std::uint64_t m, std::size_t k)
    : m_(m), k_(k), matrices_(m + 1), tuples_(m + 1)
{
    if (k == 0) throw std::invalid_argument("census: dimension must be positive");
    for (std::uint64_t l = 0; l <= m; ++l) matrices_[l] = count_matrices_closed(l, k).value;
    tuples_[0] = 1;
    const std::uint64_t lo = min_matrix_size(k);
    for (std::uint64_t s = 1; s <= m; ++s) {
        Integer total = 0;
        for (std::uint64_t l = lo; l + 1 <= s; ++l) total += matrices_[l] * tuples_[s - l - 1];
        tuples_[s] = std::move(total);
    }
    instances_ = 0;
    for (std::uint64_t l = lo; l <= m; ++l) instances_ += tuples_[m - l] * matrices_[l];
}

CensusCount count_witness_tuples(std::uint64_t s, std::size_t k)
{
    return CensusCount{s, k, StratumCounts(s, k).tuples(s)};
}

CensusCount count_instances(std::uint64_t m, std::size_t k)
{
    return CensusCount{m, k, StratumCounts(m, k).instances()};
}

std::uint64_t uniform_u64(std::uint64_t bound, Rng& rng)
{
    if (bound == 0) throw std::invalid_argument("uniform_u64: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t v = rng();
        if (v < limit) return v % bound;
    }
}

Integer uniform_below(const Integer& bound, Rng& rng)
{
    if (bound <= 0) throw std::invalid_argument("uniform_below: empty range");
    if (bound <= std::numeric_limits<std::uint64_t>::max()) {
        return uniform_u64(static_cast<std::uint64_t>(bound), rng);
    }
    const std::uint64_t bits = bit_size(bound);
    for (;;) {
        Integer v = 0;
        std::uint64_t have = 0;
        while (have < bits) {
            v = (v << 64) | Integer(rng());
            have += 64;
        }
        v >>= static_cast<unsigned>(have - bits);
        if (v < bound) return v;
    }
}

namespace {

// Picks one index with probability weight[i] / sum(weights).
std::size_t pick_weighted(const std::vector<Integer>& weights, Rng& rng)
{
    Integer total = 0;
    for (const auto& w : weights) total += w;
    Integer r = uniform_below(total, rng);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (r < weights[i]) return i;
        r -= weights[i];
    }
    throw std::logic_error("pick_weighted: fell off the end");
}

// Uniform choice of r distinct elements of {1..n}, sorted (Floyd).
std::vector<std::uint64_t> choose_sorted(std::uint64_t n, std::uint64_t r, Rng& rng)
{
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = n - r + 1; j <= n; ++j) {
        const std::uint64_t t = 1 + uniform_u64(j, rng);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

}  // namespace

Matrix sample_matrix(std::uint64_t l, std::size_t k, Rng& rng)
{
    const std::uint64_t k2 = k * k;
    if (k == 0 || l < min_matrix_size(k)) {
        throw EmptyStratum("no " + std::to_string(k) + "x" + std::to_string(k) +
                           " matrix has size " + std::to_string(l));
    }
    // k^2 entry lengths summing to l - k^2 + 1: bars in k^2 - 1 of the l - k^2 gaps.
    const std::uint64_t stars = l - k2 + 1;
    const auto bars = choose_sorted(stars - 1, k2 - 1, rng);
    std::vector<Integer> entries;
    entries.reserve(k2);
    std::uint64_t prev = 0;
    for (std::uint64_t p = 0; p < k2; ++p) {
        const std::uint64_t edge = p + 1 < k2 ? bars[p] : stars;
        const std::uint64_t bits = edge - prev;
        prev = edge;
        Integer v = 1;
        for (std::uint64_t b = 1; b < bits; ++b) v = (v << 1) | Integer(rng() & 1);
        entries.push_back(std::move(v));
    }
    return Matrix(Semiring::MaxTimes, k, std::move(entries));
}

ProblemInstance sample_instance(const StratumCounts& counts, Rng& rng)
{
    const std::uint64_t m = counts.m();
    const std::size_t k = counts.k();
    if (counts.instances() == 0) {
        throw EmptyStratum("stratum U_" + std::to_string(m) + " is empty for k = " +
                           std::to_string(k));
    }
    const std::uint64_t lo = min_matrix_size(k);

    std::vector<Integer> weights;
    for (std::uint64_t l = lo; l <= m; ++l) weights.push_back(counts.tuples(m - l) * counts.matrices(l));
    const std::uint64_t target_size = lo + pick_weighted(weights, rng);
    Matrix target = sample_matrix(target_size, k, rng);

    std::vector<Matrix> witnesses;
    std::uint64_t rest = m - target_size;
    while (rest > 0) {
        // First witness of a tuple in Q_rest, then the remaining tuple.
        weights.clear();
        for (std::uint64_t l = lo; l + 1 <= rest; ++l) {
            weights.push_back(counts.matrices(l) * counts.tuples(rest - l - 1));
        }
        const std::uint64_t size = lo + pick_weighted(weights, rng);
        witnesses.push_back(sample_matrix(size, k, rng));
        rest -= size + 1;
    }
    return ProblemInstance(Semiring::MaxTimes, k, std::move(witnesses), std::move(target));
}

ProblemInstance sample_instance(std::uint64_t m, std::size_t k, std::uint64_t seed)
{
    const StratumCounts counts(m, k);
    Rng rng(seed);
    return sample_instance(counts, rng);
}

Integer count_factorizations(const Matrix& c, const Integer& limit)
{
    const std::size_t k = c.dim();
    const Semiring s = c.semiring();
    const Integer low = domain_min(s);
    // x_il (x) y_lj <= c_ij with y_lj >= low bounds row i of X by row i of C.
    std::vector<Integer> upper(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        Integer row_min = c(i, 0);
        for (std::size_t j = 1; j < k; ++j) row_min = std::min(row_min, c(i, j));
        for (std::size_t l = 0; l < k; ++l) upper[i * k + l] = row_min;
    }
    std::vector<Integer> x(k * k, low);
    Integer total = 0;
    for (;;) {
        total += solution_count(Matrix(s, k, x), c);
        if (total > limit) return total;
        std::size_t p = 0;
        while (p < x.size() && x[p] == upper[p]) x[p++] = low;
        if (p == x.size()) return total;
        ++x[p];
    }
}

double DensityEstimate::standard_error() const
{
    if (samples == 0) return 0.0;
    const double f = fraction();
    return std::sqrt(f * (1.0 - f) / double(samples));
}

double DensityEstimate::density_bound() const
{
    const double mm = double(m);
    return std::pow(mm, double(k * k + 1)) / std::pow(mm, double(threshold_exponent));
}

DensityEstimate estimate_hard_density(std::uint64_t m, std::size_t k, std::size_t samples,
                                      unsigned threshold_exponent, std::uint64_t seed)
{
    const StratumCounts counts(m, k);
    Rng rng(seed);
    const Integer threshold = boost::multiprecision::pow(Integer(m), threshold_exponent);
    DensityEstimate out;
    out.m = m;
    out.k = k;
    out.samples = samples;
    out.threshold_exponent = threshold_exponent;
    for (std::size_t i = 0; i < samples; ++i) {
        const ProblemInstance instance = sample_instance(counts, rng);
        if (count_factorizations(instance.target(), threshold) > threshold) ++out.hits;
    }
    return out;
}

}  // namespace tropknap
