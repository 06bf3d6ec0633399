#pragma once

// Decision procedures for W_1^x_1 (x) ... (x) W_n^x_n = C.
//
// A zero exponent means the factor is absent; the all-zero vector is never
// a solution because the semigroups have no identity. Products only grow
// (A (x) B >= A and A (x) B >= B entrywise), which gives both the brute-force
// cutoffs and the memo-key bound below.

#include "tropknap/instance.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace tropknap {

struct Certificate {
    std::vector<Integer> exponents;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class Verdict { Yes, No, Unknown };

std::string_view to_string(Verdict v);

struct SolveStats {
    std::size_t memo_entries = 0;
    std::size_t recursive_calls = 0;
};

struct SolveOutcome {
    Verdict verdict = Verdict::No;
    std::optional<Certificate> certificate;
    SolveStats stats;
};

/// The product selected by cert, or nullopt for the all-zero vector.
/// Throws std::invalid_argument on a length mismatch or a negative exponent.
std::optional<Matrix> evaluate_certificate(const ProblemInstance& instance,
                                           const Certificate& cert);

/// Throws std::invalid_argument on a length mismatch, and in subset sum mode
/// when an exponent is not 0 or 1.
bool verify_certificate(const ProblemInstance& instance, const Certificate& cert,
                        ProblemKind kind);

/// Largest exponent the knapsack brute force tries for witness w: 1 when w
/// is idempotent (all entries at the domain minimum), else 2 * max(target).
Integer kp_exponent_bound(const Matrix& w, const Matrix& target);

/// Exhaustive scans. Both return the lexicographically smallest certificate.
SolveOutcome brute_force_ssp(const ProblemInstance& instance);
SolveOutcome brute_force_kp(const ProblemInstance& instance);

/// (n + 1) * (max(C) + 1)^(k^2): the number of distinct (suffix, target)
/// keys the memoized solvers can ever create.
Integer memo_key_bound(const ProblemInstance& instance);

unsigned default_cap_exponent(std::size_t dim);

/// max(size_2(I), 1)^exponent.
Integer generic_key_cap(const ProblemInstance& instance, unsigned exponent);

/// Memoized recursion on (suffix start i, current target Y).
///
/// At each key it tries, in order: W_i = Y; skipping W_i; and for every
/// solution X of W_i (x) X = Y (lexicographic order) the key (i + 1, X), plus
/// in knapsack mode the key (i, X) when X != Y. Each key is registered on
/// first visit; with a key cap set, the solve aborts with Unknown as soon as
/// the number of registered keys exceeds the cap.
class MemoizedSolver {
public:
    MemoizedSolver(const ProblemInstance& instance, ProblemKind kind,
                   std::optional<Integer> key_cap = std::nullopt);

    SolveOutcome solve();

    /// Targets of every key created by the last solve.
    std::vector<Matrix> visited_targets() const;

private:
    enum class Result { False, True, Abort };
    enum class Step { None, Match, Skip, Descend, Reuse };
    enum class State { Open, False, True };

    struct Key {
        std::size_t index;
        Matrix target;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& key) const noexcept
        {
            return key.target.hash() ^ (key.index * 0x9e3779b97f4a7c15ULL);
        }
    };
    struct Entry {
        State state = State::Open;
        Step step = Step::None;
        std::optional<Matrix> next;
    };

    Result visit(std::size_t index, const Matrix& target);
    Certificate reconstruct() const;

    const ProblemInstance& instance_;
    ProblemKind kind_;
    std::optional<std::size_t> key_cap_;
    std::unordered_map<Key, Entry, KeyHash> memo_;
    std::size_t calls_ = 0;
};

SolveOutcome solve_ssp_dp(const ProblemInstance& instance);
SolveOutcome solve_kp_dp(const ProblemInstance& instance);

/// Memoized solvers with the key cap size_2(I)^cap_exponent; the exponent
/// defaults to k^2 + 3.
SolveOutcome solve_ssp_generic(const ProblemInstance& instance,
                               std::optional<unsigned> cap_exponent = std::nullopt);
SolveOutcome solve_kp_generic(const ProblemInstance& instance,
                              std::optional<unsigned> cap_exponent = std::nullopt);

}  // namespace tropknap
