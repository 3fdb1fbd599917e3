#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hpt {

/// Signed arbitrary-precision integer. Recurrence coefficients may be negative.
using BigInt = boost::multiprecision::cpp_int;

/// A vertex label: the number of shortest paths from the base vertex.
/// Same representation as BigInt; non-negativity is checked where labels
/// enter the library.
using Label = BigInt;

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed decimal integer. Throws ValidationError.
BigInt parse_decimal(std::string_view text);

/// Parses a decimal integer that must be >= 1.
Label parse_positive(std::string_view text, std::string_view what);

std::vector<std::string> to_decimal(const std::vector<BigInt>& values);

}  // namespace hpt
