#include "hpt/planner.hpp"

#include <string>

#include "hpt/errors.hpp"

namespace hpt {

std::string_view extraction_name(Extraction e) {
  return e == Extraction::EveryCorner ? "EveryCorner" : "EverySecondCorner";
}

Extraction parse_extraction(std::string_view name) {
  if (name == "EveryCorner") return Extraction::EveryCorner;
  if (name == "EverySecondCorner") return Extraction::EverySecondCorner;
  throw ValidationError("unknown extraction '" + std::string(name) + "'");
}

RepresentationPlan canonical_minus_plan(const MinusRecurrence& rec) {
  const auto r = static_cast<std::size_t>(rec.alpha - 2);
  return {StepPattern::left_right(1, r), make_state(rec.f1, rec.f1 - rec.f0),
          Extraction::EverySecondCorner, 1, rec.f1 - rec.f0};
}

bool extendable_to_f0(const MinusRecurrence& rec) {
  return BigInt(rec.alpha - 1) * rec.f0 < rec.f1 && rec.f1 < BigInt(rec.alpha) * rec.f0;
}

std::vector<PatternChoice> enumerate_patterns(std::int64_t alpha) {
  std::vector<PatternChoice> small;
  std::vector<PatternChoice> large;
  if (alpha < 3) return small;
  const std::int64_t n = alpha - 2;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back({d, n / d});
    if (d != n / d) large.push_back({n / d, d});
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

// Runs the walk and throws if the plan disagrees with the sequence it was
// solved from.
template <typename Rec>
void require_verified(const RepresentationPlan& plan, const Rec& rec) {
  if (!verify_plan(plan, rec, kPlanVerificationTerms)) {
    throw VerificationMismatch("plan " + plan.pattern.to_string() + " from (" +
                               plan.start.w().str() + "," + plan.start.a().str() +
                               ") does not reproduce the sequence");
  }
}

Label solve_neighbor(const BigInt& numerator, const BigInt& denominator, const Label& f_j,
                     std::size_t j) {
  if (denominator == 0 || numerator % denominator != 0) {
    throw NotRepresentable("m = " + numerator.str() + "/" + denominator.str() +
                           " is not an integer at j=" + std::to_string(j));
  }
  Label m = numerator / denominator;
  if (m < 1 || m >= f_j) {
    throw NeighborBoundViolated("m = " + m.str() + " violates 1 <= m < f_j = " + f_j.str());
  }
  return m;
}

}  // namespace

RepresentationPlan represent_minus(const MinusRecurrence& rec, PatternChoice choice,
                                   std::size_t j) {
  if (j < 1) throw ValidationError("j must be >= 1");
  if (choice.ell < 1 || choice.r < 1 || choice.ell * choice.r != rec.alpha - 2) {
    throw ValidationError("pattern choice needs ell, r >= 1 and ell*r = alpha-2");
  }
  const auto f = gen_minus(rec, j + 2);
  const BigInt ell = choice.ell;
  const BigInt r = choice.r;
  const BigInt numerator = f[j + 1] - (r + 1) * f[j];
  const BigInt denominator = ell + r * (ell - 1);
  Label m = solve_neighbor(numerator, denominator, f[j], j);

  RepresentationPlan plan{
      StepPattern::left_right(static_cast<std::size_t>(choice.ell),
                              static_cast<std::size_t>(choice.r)),
      make_state(f[j], m), Extraction::EverySecondCorner, j, m};
  require_verified(plan, rec);
  return plan;
}

RepresentationPlan represent_plus(const PlusRecurrence& rec, std::size_t j) {
  if (j < 1) throw ValidationError("j must be >= 1");
  const auto f = gen_plus(rec, j + 2);
  Label m = solve_neighbor(f[j + 1] - f[j], BigInt(rec.eta), f[j], j);

  const auto ell = static_cast<std::size_t>(rec.eta);
  RepresentationPlan plan{StepPattern::left_right(ell, ell), make_state(f[j], m),
                          Extraction::EveryCorner, j, m};
  require_verified(plan, rec);
  return plan;
}

std::vector<Label> plan_labels(const RepresentationPlan& plan, std::size_t terms) {
  if (terms == 0) return {};
  if (plan.extraction == Extraction::EverySecondCorner) {
    const auto trace = run_cycles(plan.start, plan.pattern, terms > 1 ? terms - 1 : 1);
    auto labels = cycle_boundaries(trace);
    labels.resize(terms);
    return labels;
  }
  const std::size_t runs = plan.pattern.runs().size();
  const std::size_t cycles = (terms - 1 + runs - 1) / runs;
  const auto trace = run_cycles(plan.start, plan.pattern, cycles > 0 ? cycles : 1);
  auto labels = corners(trace);
  labels.resize(terms);
  return labels;
}

namespace {

bool matches(const std::vector<Label>& labels, const std::vector<Label>& seq, std::size_t j) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != seq[j + i]) return false;
  }
  return true;
}

}  // namespace

bool verify_plan(const RepresentationPlan& plan, const MinusRecurrence& rec, std::size_t terms) {
  if (terms < 3) throw ValidationError("verify_plan needs terms >= 3");
  return matches(plan_labels(plan, terms), gen_minus(rec, plan.j + terms), plan.j);
}

bool verify_plan(const RepresentationPlan& plan, const PlusRecurrence& rec, std::size_t terms) {
  if (terms < 3) throw ValidationError("verify_plan needs terms >= 3");
  return matches(plan_labels(plan, terms), gen_plus(rec, plan.j + terms), plan.j);
}

}  // namespace hpt
