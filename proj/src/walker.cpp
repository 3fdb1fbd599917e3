#include "hpt/walker.hpp"

#include <cctype>
#include <limits>

#include "hpt/errors.hpp"

namespace hpt {

WalkerState WalkerState::from_triple(Label w, Label a, Label b) {
  if (a < 1 || b < 1) throw ValidationError("walker state needs neighbours a, b >= 1");
  if (w != a + b) throw ValidationError("walker state needs w = a + b");
  return WalkerState(std::move(w), std::move(a), std::move(b));
}

WalkerState make_state(const Label& w, const Label& a) {
  if (a < 1 || a >= w) {
    throw ValidationError("invalid neighbour: need 1 <= a < w (w=" + w.str() + ", a=" + a.str() +
                          ")");
  }
  return WalkerState::from_triple(w, a, w - a);
}

WalkerState step(const WalkerState& s, Direction d) {
  if (d == Direction::Left) return WalkerState(s.w_ + s.a_, s.a_, s.w_);
  return WalkerState(s.w_ + s.b_, s.w_, s.b_);
}

StepPattern::StepPattern(std::vector<Run> runs) {
  for (const Run& run : runs) {
    if (run.count == 0) throw ValidationError("pattern run counts must be >= 1");
    if (!runs_.empty() && runs_.back().direction == run.direction) {
      runs_.back().count += run.count;
    } else {
      runs_.push_back(run);
    }
  }
  if (runs_.empty()) throw ValidationError("pattern must contain at least one step");
  if (runs_.size() > 1 && runs_.front().direction == runs_.back().direction) {
    throw ValidationError("pattern must alternate cyclically (first and last run differ)");
  }
}

StepPattern StepPattern::parse(std::string_view text) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i++];
    Direction d;
    if (c == 'L') {
      d = Direction::Left;
    } else if (c == 'R') {
      d = Direction::Right;
    } else {
      throw ValidationError("bad pattern '" + std::string(text) + "': expected L or R");
    }
    std::size_t count = 0;
    bool has_digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (count > std::numeric_limits<std::size_t>::max() / 10 - 10) {
        throw ValidationError("pattern run count too large");
      }
      count = count * 10 + static_cast<std::size_t>(text[i++] - '0');
      has_digits = true;
    }
    runs.push_back({d, has_digits ? count : 1});
  }
  return StepPattern(std::move(runs));
}

StepPattern StepPattern::left_right(std::size_t ell, std::size_t r) {
  if (r == 0) return StepPattern({{Direction::Left, ell}});
  return StepPattern({{Direction::Left, ell}, {Direction::Right, r}});
}

std::size_t StepPattern::cycle_length() const {
  std::size_t total = 0;
  for (const Run& run : runs_) total += run.count;
  return total;
}

StepPattern StepPattern::mirrored() const {
  std::vector<Run> runs = runs_;
  for (Run& run : runs) run.direction = opposite(run.direction);
  return StepPattern(std::move(runs));
}

std::string StepPattern::to_string() const {
  std::string out;
  for (const Run& run : runs_) {
    out += run.direction == Direction::Left ? 'L' : 'R';
    if (run.count != 1) out += std::to_string(run.count);
  }
  return out;
}

PathTrace run_cycles(const WalkerState& start, const StepPattern& pattern, std::size_t cycles) {
  if (cycles < 1) throw ValidationError("cycles must be >= 1");
  PathTrace trace{pattern, {start}, {0}};
  trace.states.reserve(cycles * pattern.cycle_length() + 1);
  for (std::size_t c = 0; c < cycles; ++c) {
    for (const Run& run : pattern.runs()) {
      for (std::size_t s = 0; s < run.count; ++s) {
        trace.states.push_back(step(trace.states.back(), run.direction));
      }
      trace.corner_indices.push_back(trace.states.size() - 1);
    }
  }
  return trace;
}

std::vector<Label> path_labels(const PathTrace& trace) {
  std::vector<Label> out;
  out.reserve(trace.states.size());
  for (const auto& s : trace.states) out.push_back(s.w());
  return out;
}

std::vector<Label> corners(const PathTrace& trace) {
  if (!trace.pattern.has_corners()) {
    throw ValidationError("pattern " + trace.pattern.to_string() + " never changes direction");
  }
  std::vector<Label> out;
  out.reserve(trace.corner_indices.size());
  for (std::size_t idx : trace.corner_indices) out.push_back(trace.states[idx].w());
  return out;
}

std::vector<Label> every_second_corners(const PathTrace& trace) {
  if (trace.pattern.runs().size() != 2) {
    throw ValidationError("every-second-corner extraction needs a two-run pattern");
  }
  auto all = corners(trace);
  std::vector<Label> out;
  for (std::size_t i = 0; i < all.size(); i += 2) out.push_back(all[i]);
  return out;
}

std::vector<Label> cycle_boundaries(const PathTrace& trace) {
  const std::size_t len = trace.pattern.cycle_length();
  std::vector<Label> out;
  for (std::size_t t = 0; t < trace.states.size(); t += len) out.push_back(trace.states[t].w());
  return out;
}

std::vector<Label> offset_sequence(const WalkerState& start, const StepPattern& pattern,
                                   std::size_t offset, std::size_t cycles) {
  if (pattern.runs().size() != 2) {
    throw ValidationError("offset sequences need a pattern of one L-run and one R-run");
  }
  const std::size_t len = pattern.cycle_length();
  if (offset >= len) {
    throw ValidationError("offset " + std::to_string(offset) + " out of range for pattern " +
                          pattern.to_string());
  }
  if (cycles < 1) throw ValidationError("cycles must be >= 1");
  const auto trace = run_cycles(start, pattern, cycles);
  std::vector<Label> out;
  out.reserve(cycles);
  for (std::size_t t = 0; t < cycles; ++t) out.push_back(trace.states[offset + t * len].w());
  return out;
}

std::vector<Label> half_cycle_sequence(const WalkerState& start, const StepPattern& pattern,
                                       std::size_t offset, std::size_t count) {
  const auto runs = pattern.runs();
  if (runs.size() != 2 || runs[0].count != runs[1].count) {
    throw ValidationError("half-cycle sequences need a balanced pattern L^l R^l");
  }
  const std::size_t half = runs[0].count;
  if (offset >= half) {
    throw ValidationError("offset " + std::to_string(offset) + " must be below the run length " +
                          std::to_string(half));
  }
  if (count < 1) throw ValidationError("count must be >= 1");
  const std::size_t last = offset + (count - 1) * half;
  const std::size_t cycles = last / (2 * half) + 1;
  const auto trace = run_cycles(start, pattern, cycles);
  std::vector<Label> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) out.push_back(trace.states[offset + t * half].w());
  return out;
}

}  // namespace hpt
