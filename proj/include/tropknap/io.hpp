#pragma once

// File formats.
//
// Instances are one JSON document:
//   {"semiring": "max_plus" | "max_times", "k": <int>,
//    "witnesses": [<matrix>, ...], "target": <matrix>}
// where a matrix is k rows of k decimal integer strings. Certificates are a
// JSON array of decimal integer strings. Scalar and exact-cover inputs are
// line-oriented text; see parse_scalar and parse_x3c.

#include "tropknap/instance.hpp"
#include "tropknap/reductions.hpp"
#include "tropknap/solvers.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropknap {

/// Malformed input. what() carries the location (JSON pointer, byte offset
/// or line number) followed by the problem.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string serialize_instance(const ProblemInstance& instance);
ProblemInstance parse_instance(std::string_view text);

std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

/// Text form of a scalar instance:
///   # comment
///   op: add | multiply      (optional, defaults to add)
///   items: 2 3 5
///   target: 5
std::string serialize_scalar(const ScalarInstance& scalar);
ScalarInstance parse_scalar(std::string_view text);

/// Text form of an exact-cover instance:
///   ground: 6
///   triples: 1 2 3, 4 5 6
///   triples: 1 2 4
/// Triples are separated by ',' or ';' and may be spread over several
/// triples: lines.
std::string serialize_x3c(const X3CInstance& x3c);
X3CInstance parse_x3c(std::string_view text);

/// Strict decimal: one or more ASCII digits.
Integer parse_decimal(std::string_view text);

}  // namespace tropknap
