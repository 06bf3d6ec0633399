#include "tropknap/tropical_core.hpp"

#include <algorithm>
#include <sstream>

namespace tropknap {

std::string_view to_string(Semiring s)
{
    return s == Semiring::MaxPlus ? "max_plus" : "max_times";
}

Semiring parse_semiring(std::string_view name)
{
    if (name == "max_plus") return Semiring::MaxPlus;
    if (name == "max_times") return Semiring::MaxTimes;
    throw std::invalid_argument("unknown semiring '" + std::string(name) +
                                "' (expected max_plus or max_times)");
}

Integer domain_min(Semiring s) { return s == Semiring::MaxPlus ? 0 : 1; }

bool in_domain(const Integer& a, Semiring s)
{
    return s == Semiring::MaxPlus ? a >= 0 : a >= 1;
}

Integer scalar_mul(const Integer& a, const Integer& b, Semiring s)
{
    if (!in_domain(a, s) || !in_domain(b, s)) {
        throw DomainError("scalar_mul: operand outside the domain of " + std::string(to_string(s)));
    }
    if (s == Semiring::MaxPlus) return a + b;
    return a * b;
}

namespace {

std::size_t hash_entries(Semiring s, std::size_t dim, const std::vector<Integer>& entries)
{
    std::size_t h = std::hash<std::size_t>{}(dim * 2 + (s == Semiring::MaxTimes ? 1 : 0));
    for (const auto& e : entries) {
        // boost::hash_combine mixing
        h ^= std::hash<Integer>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace

Matrix::Matrix(Semiring semiring, std::size_t dim, std::vector<Integer> entries)
    : semiring_(semiring), dim_(dim), entries_(std::move(entries))
{
    if (dim_ == 0) throw ShapeError("matrix dimension must be at least 1");
    if (entries_.size() != dim_ * dim_) {
        throw ShapeError("matrix of dimension " + std::to_string(dim_) + " needs " +
                         std::to_string(dim_ * dim_) + " entries, got " +
                         std::to_string(entries_.size()));
    }
    for (std::size_t p = 0; p < entries_.size(); ++p) {
        if (!in_domain(entries_[p], semiring_)) {
            throw DomainError("entry (" + std::to_string(p / dim_ + 1) + "," +
                              std::to_string(p % dim_ + 1) + ") = " + entries_[p].str() +
                              " is outside the " + std::string(tropknap::to_string(semiring_)) +
                              " domain");
        }
    }
    hash_ = hash_entries(semiring_, dim_, entries_);
}

Matrix Matrix::constant(Semiring semiring, std::size_t dim, const Integer& value)
{
    return Matrix(semiring, dim, std::vector<Integer>(dim * dim, value));
}

Matrix Matrix::from_rows(Semiring semiring,
                         std::initializer_list<std::initializer_list<long long>> rows)
{
    const std::size_t dim = rows.size();
    std::vector<Integer> entries;
    entries.reserve(dim * dim);
    for (const auto& row : rows) {
        if (row.size() != dim) throw ShapeError("matrix rows must form a square");
        for (long long v : row) entries.emplace_back(v);
    }
    return Matrix(semiring, dim, std::move(entries));
}

const Integer& Matrix::max_entry() const
{
    return *std::max_element(entries_.begin(), entries_.end());
}

bool Matrix::is_domain_minimum() const
{
    const Integer lo = domain_min(semiring_);
    return std::all_of(entries_.begin(), entries_.end(), [&](const Integer& e) { return e == lo; });
}

bool lex_less(const Matrix& a, const Matrix& b)
{
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                        b.entries_.end());
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

void require_compatible(const Matrix& a, const Matrix& b, std::string_view what)
{
    if (a.dim() != b.dim()) {
        throw ShapeError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
    }
    if (a.semiring() != b.semiring()) {
        throw ShapeError(std::string(what) + ": semiring mismatch");
    }
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    require_compatible(a, b, "mat_mul");
    const std::size_t k = a.dim();
    const bool plus = a.semiring() == Semiring::MaxPlus;
    std::vector<Integer> out(k * k);
    Integer term;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            Integer& best = out[i * k + j];
            for (std::size_t l = 0; l < k; ++l) {
                if (plus)
                    term = a(i, l) + b(l, j);
                else
                    term = a(i, l) * b(l, j);
                if (l == 0 || term > best) best = term;
            }
        }
    }
    return Matrix(a.semiring(), k, std::move(out));
}

Matrix mat_pow(const Matrix& a, const Integer& exponent)
{
    if (exponent < 1) {
        throw std::invalid_argument("mat_pow: exponent must be at least 1 (no identity matrix)");
    }
    // Left-to-right binary exponentiation starting from the top bit, so no
    // identity element is ever needed.
    const std::uint64_t bits = bit_size(exponent);
    Matrix result = a;
    for (std::uint64_t b = bits - 1; b-- > 0;) {
        result = mat_mul(result, result);
        if (boost::multiprecision::bit_test(exponent, static_cast<unsigned>(b))) {
            result = mat_mul(result, a);
        }
    }
    return result;
}

bool mat_leq(const Matrix& a, const Matrix& b)
{
    require_compatible(a, b, "mat_leq");
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t p = 0; p < ea.size(); ++p) {
        if (ea[p] > eb[p]) return false;
    }
    return true;
}

std::uint64_t bit_size(const Integer& a)
{
    if (a <= 0) return 0;
    return boost::multiprecision::msb(a) + 1;
}

Integer size_of_number(const Integer& a, SizeMode mode)
{
    if (a < 0) throw DomainError("size_of_number: negative argument");
    if (mode == SizeMode::Unary) return a;
    return Integer(bit_size(a));
}

Integer size_of_matrix(const Matrix& a, SizeMode mode)
{
    Integer total = a.dim() * a.dim() - 1;
    for (const auto& e : a.entries()) total += size_of_number(e, mode);
    return total;
}

}  // namespace tropknap
