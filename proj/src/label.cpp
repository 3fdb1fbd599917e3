#include "hpt/label.hpp"

#include <cctype>

#include "hpt/errors.hpp"

namespace hpt {

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw ValidationError("expected a decimal integer, got '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ValidationError("expected a decimal integer, got '" + std::string(text) + "'");
    }
    value *= 10;
    value += c - '0';
  }
  return negative ? BigInt(-value) : value;
}

Label parse_positive(std::string_view text, std::string_view what) {
  Label value = parse_decimal(text);
  if (value < 1) {
    throw ValidationError(std::string(what) + " must be a positive integer");
  }
  return value;
}

std::vector<std::string> to_decimal(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

}  // namespace hpt
