#include "hpt/recurrence.hpp"

#include <boost/multiprecision/integer.hpp>

#include "hpt/errors.hpp"

namespace hpt {

MinusRecurrence make_minus(std::int64_t alpha, Label f0, Label f1, Checks checks) {
  if (alpha < 2) throw ValidationError("alpha must be >= 2");
  if (f0 < 1 || f1 < 1) throw ValidationError("f0 and f1 must be positive");
  if (checks == Checks::Strict) {
    if (f0 >= f1) throw ValidationError("need f0 < f1");
    if (boost::multiprecision::gcd(f0, f1) != 1) {
      throw ValidationError("need gcd(f0, f1) = 1");
    }
  }
  return {alpha, std::move(f0), std::move(f1)};
}

PlusRecurrence make_plus(std::int64_t eta, Label f0, Label f1) {
  if (eta < 1) throw ValidationError("eta must be >= 1");
  if (f0 < 1) throw ValidationError("f0 must be positive");
  if (f0 >= f1) throw ValidationError("need f0 < f1");
  return {eta, std::move(f0), std::move(f1)};
}

std::vector<Label> gen_minus(const MinusRecurrence& rec, std::size_t count) {
  if (count < 2) throw ValidationError("count must be >= 2");
  std::vector<Label> out{rec.f0, rec.f1};
  out.reserve(count);
  while (out.size() < count) {
    const std::size_t i = out.size();
    BigInt next = BigInt(rec.alpha) * out[i - 1] - out[i - 2];
    if (next <= 0) {
      throw SequenceDegenerate("term f_" + std::to_string(i) + " = " + next.str() +
                               " is not positive");
    }
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Label> gen_plus(const PlusRecurrence& rec, std::size_t count) {
  if (count < 2) throw ValidationError("count must be >= 2");
  std::vector<Label> out{rec.f0, rec.f1};
  out.reserve(count);
  while (out.size() < count) {
    const std::size_t i = out.size();
    out.push_back(BigInt(rec.eta) * out[i - 1] + out[i - 2]);
  }
  return out;
}

LinearRelation lemma_combine(const CoupledSystem& sys) {
  if (sys.a2 * sys.b1 == 0) throw ValidationError("coupled system needs a2*b1 != 0");
  return {sys.a1 + sys.b2, sys.a2 * sys.b1 - sys.a1 * sys.b2};
}

std::pair<std::vector<BigInt>, std::vector<BigInt>> iterate(const CoupledSystem& sys,
                                                            std::size_t steps) {
  std::vector<BigInt> xs{sys.x0};
  std::vector<BigInt> ys{sys.y0};
  xs.reserve(steps + 1);
  ys.reserve(steps + 1);
  for (std::size_t i = 0; i < steps; ++i) {
    BigInt x = sys.a1 * xs.back() + sys.b1 * ys.back();
    BigInt y = sys.a2 * xs.back() + sys.b2 * ys.back();
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }
  return {std::move(xs), std::move(ys)};
}

bool check_linear(std::span<const BigInt> seq, const BigInt& p, const BigInt& s) {
  for (std::size_t i = 2; i < seq.size(); ++i) {
    if (seq[i] != p * seq[i - 1] + s * seq[i - 2]) return false;
  }
  return true;
}

}  // namespace hpt
