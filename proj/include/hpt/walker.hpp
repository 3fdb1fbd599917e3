#pragma once

// Label-space walks along type-A vertices.
//
// A type-A vertex w with row-neighbours a (left) and b (right) always has
// w = a + b. Its left type-A descendant is the child it shares with a, whose
// neighbours are copies of a and w; symmetrically on the right:
//
//   L: (w, a, b) -> (w + a, a, w)
//   R: (w, a, b) -> (w + b, w, b)

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hpt/label.hpp"

namespace hpt {

enum class Direction : std::uint8_t { Left, Right };

inline Direction opposite(Direction d) {
  return d == Direction::Left ? Direction::Right : Direction::Left;
}

class WalkerState {
 public:
  /// (w, a, b) with a, b >= 1 and w = a + b. Throws ValidationError.
  static WalkerState from_triple(Label w, Label a, Label b);

  const Label& w() const { return w_; }
  const Label& a() const { return a_; }
  const Label& b() const { return b_; }

  /// The same vertex seen in the mirrored triangle: (w, b, a).
  WalkerState mirrored() const { return WalkerState(w_, b_, a_); }

  friend bool operator==(const WalkerState&, const WalkerState&) = default;

 private:
  friend WalkerState step(const WalkerState& s, Direction d);
  WalkerState(Label w, Label a, Label b) : w_(std::move(w)), a_(std::move(a)), b_(std::move(b)) {}

  Label w_;
  Label a_;
  Label b_;
};

/// State of a type-A vertex w whose left neighbour is a. Requires 1 <= a < w.
WalkerState make_state(const Label& w, const Label& a);

WalkerState step(const WalkerState& s, Direction d);

struct Run {
  Direction direction;
  std::size_t count;

  friend bool operator==(const Run&, const Run&) = default;
};

/// One cycle of a repeating step pattern such as L^2 R.
///
/// Adjacent runs in the same direction are merged. A pattern with more than
/// one run must alternate cyclically, so its first and last runs point in
/// different directions.
class StepPattern {
 public:
  explicit StepPattern(std::vector<Run> runs);

  /// Grammar: (("L"|"R") digits?)+, e.g. "LR2", "L3R3". Missing digits mean 1.
  static StepPattern parse(std::string_view text);
  /// L^ell R^r; r == 0 gives the single-run pattern L^ell.
  static StepPattern left_right(std::size_t ell, std::size_t r);

  std::span<const Run> runs() const { return runs_; }
  std::size_t cycle_length() const;
  /// True when the pattern turns at least once per cycle.
  bool has_corners() const { return runs_.size() >= 2; }
  StepPattern mirrored() const;
  std::string to_string() const;

  friend bool operator==(const StepPattern&, const StepPattern&) = default;

 private:
  std::vector<Run> runs_;
};

struct PathTrace {
  StepPattern pattern;
  /// states[0] is the start; states[t] is the state after t steps.
  std::vector<WalkerState> states;
  /// Indices into states: 0, then the end of every completed run.
  std::vector<std::size_t> corner_indices;
};

PathTrace run_cycles(const WalkerState& start, const StepPattern& pattern, std::size_t cycles);

/// w-labels of every state in the trace.
std::vector<Label> path_labels(const PathTrace& trace);

/// U_1, U_2, ...: the start and every vertex where the direction changes.
/// Throws ValidationError for single-direction patterns.
std::vector<Label> corners(const PathTrace& trace);

/// u_i = U_{2i-1}. Requires a two-run pattern.
std::vector<Label> every_second_corners(const PathTrace& trace);

/// Labels at the start and after every full cycle.
std::vector<Label> cycle_boundaries(const PathTrace& trace);

/// Labels at distance offset + t * cycle_length from the start, t < cycles.
/// The pattern must consist of exactly two runs.
std::vector<Label> offset_sequence(const WalkerState& start, const StepPattern& pattern,
                                   std::size_t offset, std::size_t cycles);

/// For a balanced pattern L^l R^l: labels at distance offset + t*l from the
/// start (0 <= offset < l), t < count. These are the W_j = U_j + offset*V_j.
std::vector<Label> half_cycle_sequence(const WalkerState& start, const StepPattern& pattern,
                                       std::size_t offset, std::size_t count);

}  // namespace hpt
