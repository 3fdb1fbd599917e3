#pragma once

// Witnesses that two positive integers sit next to each other in some row.
//
// Adjacent labels (x, y) in row n produce the adjacent pairs (x, x+y) and
// (x+y, y) in row n+1: the shared type-A child x+y is flanked by copies of x
// and y. Running the subtractive Euclidean algorithm backwards from (1, 1)
// therefore reaches any coprime pair. Pairs (g*u, g*v) additionally need an
// adjacent (g, g), which is found below a type-A vertex labelled g.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hpt/label.hpp"
#include "hpt/triangle.hpp"

namespace hpt {

enum class Move {
  KeepLeft,    ///< (x, y) -> (x, x+y)
  KeepRight,   ///< (x, y) -> (x+y, y)
  DupDescend,  ///< (x, y), x != y -> (g, g) with g = max(x, y), below the type-A member
};

/// "KL", "KR", "DD".
std::string_view move_code(Move m);
Move parse_move(std::string_view code);

/// Replayable from the row-1 pair (1, 1).
struct PairWitness {
  int q = 5;
  std::vector<Move> script;

  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

struct ReductionTrace {
  /// From (u, v) down to the terminal (g, g).
  std::vector<std::pair<Label, Label>> pairs;
};

struct ReplayResult {
  Label left;
  Label right;
  std::size_t row = 1;

  friend bool operator==(const ReplayResult&, const ReplayResult&) = default;
};

/// Subtract the smaller member from the larger until both are equal.
ReductionTrace reduce(const Label& u, const Label& v);

/// Witness for the ordered adjacent pair (u, v); u, v >= 1.
PairWitness locate(const TriangleParams& params, const Label& u, const Label& v);

/// Rows added by one DupDescend move.
std::size_t dup_descend_rows(int q);

/// Throws ValidationError for scripts that cannot be replayed.
ReplayResult replay(const PairWitness& witness);

/// Leftmost position of the witnessed pair in its row, or nullopt when the
/// row is deeper than row_limit.
std::optional<Position> resolve_index(const TriangleParams& params, const PairWitness& witness,
                                      std::optional<std::size_t> row_limit = std::nullopt);

/// Where the reversed pair sits by vertical symmetry.
Position mirror_position(const Position& pos, std::size_t row_length);

}  // namespace hpt
