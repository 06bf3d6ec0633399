#pragma once

// Exact scalar and matrix arithmetic over the max-plus semiring on the
// non-negative integers and the max-times semiring on the positive integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropknap {

using Integer = boost::multiprecision::cpp_int;

enum class Semiring { MaxPlus, MaxTimes };

enum class SizeMode { Unary, Binary };

/// Thrown when a scalar falls outside the semiring's domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown on dimension or semiring mismatch between operands.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string_view to_string(Semiring s);
Semiring parse_semiring(std::string_view name);

/// 0 for max-plus, 1 for max-times. This is also the neutral element of the
/// scalar product, which is why diagonal entries never shrink a product.
Integer domain_min(Semiring s);
bool in_domain(const Integer& a, Semiring s);

Integer scalar_mul(const Integer& a, const Integer& b, Semiring s);

/// k x k matrix with entries in the domain of its semiring. Entries are
/// validated on construction and immutable afterwards.
class Matrix {
public:
    Matrix(Semiring semiring, std::size_t dim, std::vector<Integer> entries);

    static Matrix constant(Semiring semiring, std::size_t dim, const Integer& value);
    static Matrix from_rows(Semiring semiring,
                            std::initializer_list<std::initializer_list<long long>> rows);

    Semiring semiring() const noexcept { return semiring_; }
    std::size_t dim() const noexcept { return dim_; }

    const Integer& operator()(std::size_t row, std::size_t col) const
    {
        return entries_[row * dim_ + col];
    }

    /// Row-major entries.
    std::span<const Integer> entries() const noexcept { return entries_; }

    const Integer& max_entry() const;

    /// True when every entry equals the domain minimum (the zero matrix for
    /// max-plus, the all-ones matrix for max-times). Such a matrix is
    /// idempotent under the product.
    bool is_domain_minimum() const;

    std::size_t hash() const noexcept { return hash_; }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.hash_ == b.hash_ && a.dim_ == b.dim_ && a.semiring_ == b.semiring_ &&
               a.entries_ == b.entries_;
    }

    /// Lexicographic order on the flattened entries (same dim and semiring).
    friend bool lex_less(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    Semiring semiring_;
    std::size_t dim_;
    std::vector<Integer> entries_;
    std::size_t hash_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// a raised to the exponent-th tropical power. Exponent 0 is rejected: the
/// semigroups have no identity element.
Matrix mat_pow(const Matrix& a, const Integer& exponent);

/// Entrywise partial order.
bool mat_leq(const Matrix& a, const Matrix& b);

/// Bit length of a non-negative integer, 0 for 0.
std::uint64_t bit_size(const Integer& a);

Integer size_of_number(const Integer& a, SizeMode mode);
Integer size_of_matrix(const Matrix& a, SizeMode mode);

void require_compatible(const Matrix& a, const Matrix& b, std::string_view what);

}  // namespace tropknap

template <>
struct std::hash<tropknap::Matrix> {
    std::size_t operator()(const tropknap::Matrix& m) const noexcept { return m.hash(); }
};
