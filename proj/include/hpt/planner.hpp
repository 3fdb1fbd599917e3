#pragma once

// Turning a recurrence into a walk: which pattern, which start vertex, and
// which labels along the walk reproduce the sequence.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hpt/label.hpp"
#include "hpt/recurrence.hpp"
#include "hpt/walker.hpp"

namespace hpt {

enum class Extraction {
  EveryCorner,        ///< U_1, U_2, ...
  EverySecondCorner,  ///< labels at cycle boundaries, u_i = U_{2i-1}
};

std::string_view extraction_name(Extraction e);
Extraction parse_extraction(std::string_view name);

/// L^ell R^r with ell * r = alpha - 2.
struct PatternChoice {
  std::int64_t ell = 1;
  std::int64_t r = 1;

  friend bool operator==(const PatternChoice&, const PatternChoice&) = default;
};

struct RepresentationPlan {
  StepPattern pattern;
  WalkerState start;
  Extraction extraction;
  /// The start vertex carries f_j.
  std::size_t j = 1;
  /// Left-neighbour label of the start vertex.
  Label m;
};

/// Terms checked by simulation before a plan is returned.
inline constexpr std::size_t kPlanVerificationTerms = 10;

/// Start at f_1 with left neighbour f_1 - f_0 and repeat L R^{alpha-2}
/// (just L when alpha = 2). Cycle boundaries carry f_1, f_2, ...
RepresentationPlan canonical_minus_plan(const MinusRecurrence& rec);

/// (alpha-1) f_0 < f_1 < alpha f_0: the canonical walk can be traced back to f_0.
bool extendable_to_f0(const MinusRecurrence& rec);

/// Every (ell, r) with ell*r = alpha-2, ordered by ell. Empty for alpha < 3.
std::vector<PatternChoice> enumerate_patterns(std::int64_t alpha);

/// Solves m = (f_{j+1} - (r+1) f_j) / (ell + r(ell-1)) and starts at f_j.
/// Throws NotRepresentable (m not integral) or NeighborBoundViolated
/// (m outside [1, f_j)).
RepresentationPlan represent_minus(const MinusRecurrence& rec, PatternChoice choice,
                                   std::size_t j);

/// Plus recurrence with pattern L^eta R^eta and m = (f_{j+1} - f_j) / eta;
/// every corner carries the next term. Errors as represent_minus.
RepresentationPlan represent_plus(const PlusRecurrence& rec, std::size_t j);

/// The first `terms` labels the plan extracts from its walk.
std::vector<Label> plan_labels(const RepresentationPlan& plan, std::size_t terms);

/// True iff the plan's labels equal f_j .. f_{j+terms-1}.
bool verify_plan(const RepresentationPlan& plan, const MinusRecurrence& rec, std::size_t terms);
bool verify_plan(const RepresentationPlan& plan, const PlusRecurrence& rec, std::size_t terms);

}  // namespace hpt
