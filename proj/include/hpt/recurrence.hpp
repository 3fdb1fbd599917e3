#pragma once

// Binary recurrences f_i = alpha*f_{i-1} - f_{i-2} and f_i = eta*f_{i-1} + f_{i-2},
// and the reduction of a coupled first-order system to a single second-order
// recurrence.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hpt/label.hpp"

namespace hpt {

/// Strict enforces every hypothesis of the minus recurrence
/// (f0 < f1, gcd(f0, f1) = 1). Exploratory keeps only positivity and alpha >= 2.
enum class Checks { Strict, Exploratory };

struct MinusRecurrence {
  std::int64_t alpha = 2;
  Label f0 = 1;
  Label f1 = 2;
};

struct PlusRecurrence {
  std::int64_t eta = 1;
  Label f0 = 1;
  Label f1 = 2;
};

MinusRecurrence make_minus(std::int64_t alpha, Label f0, Label f1, Checks checks = Checks::Strict);
PlusRecurrence make_plus(std::int64_t eta, Label f0, Label f1);

/// f_0 .. f_{count-1}. Throws SequenceDegenerate if a term would be <= 0.
std::vector<Label> gen_minus(const MinusRecurrence& rec, std::size_t count);
std::vector<Label> gen_plus(const PlusRecurrence& rec, std::size_t count);

/// z_{i+2} = p*z_{i+1} + s*z_i
struct LinearRelation {
  BigInt p;
  BigInt s;

  friend bool operator==(const LinearRelation&, const LinearRelation&) = default;
};

/// x_{i+1} = a1*x_i + b1*y_i,  y_{i+1} = a2*x_i + b2*y_i
struct CoupledSystem {
  BigInt a1, b1, a2, b2;
  BigInt x0, y0;
};

/// The relation both x and y obey: p = a1 + b2, s = a2*b1 - a1*b2.
/// Requires a2*b1 != 0.
LinearRelation lemma_combine(const CoupledSystem& sys);

/// x_0..x_steps and y_0..y_steps.
std::pair<std::vector<BigInt>, std::vector<BigInt>> iterate(const CoupledSystem& sys,
                                                            std::size_t steps);

/// True iff seq[i] = p*seq[i-1] + s*seq[i-2] for every i >= 2.
bool check_linear(std::span<const BigInt> seq, const BigInt& p, const BigInt& s);
inline bool check_linear(std::span<const BigInt> seq, const LinearRelation& rel) {
  return check_linear(seq, rel.p, rel.s);
}

}  // namespace hpt
