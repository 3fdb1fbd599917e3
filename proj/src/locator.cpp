#include "hpt/locator.hpp"

#include <algorithm>
#include <string>

#include "hpt/errors.hpp"

namespace hpt {

std::string_view move_code(Move m) {
  switch (m) {
    case Move::KeepLeft: return "KL";
    case Move::KeepRight: return "KR";
    case Move::DupDescend: return "DD";
  }
  return "?";
}

Move parse_move(std::string_view code) {
  if (code == "KL") return Move::KeepLeft;
  if (code == "KR") return Move::KeepRight;
  if (code == "DD") return Move::DupDescend;
  throw ValidationError("unknown witness move '" + std::string(code) + "'");
}

ReductionTrace reduce(const Label& u, const Label& v) {
  if (u < 1 || v < 1) throw ValidationError("pair members must be positive");
  ReductionTrace trace;
  Label x = u;
  Label y = v;
  trace.pairs.emplace_back(x, y);
  while (x != y) {
    if (x < y) {
      y -= x;
    } else {
      x -= y;
    }
    trace.pairs.emplace_back(x, y);
  }
  return trace;
}

namespace {

// Moves that rebuild trace.pairs.front() from trace.pairs.back().
void append_keep_moves(const ReductionTrace& trace, std::vector<Move>& script) {
  for (std::size_t i = trace.pairs.size() - 1; i > 0; --i) {
    const auto& below = trace.pairs[i];
    const auto& above = trace.pairs[i - 1];
    script.push_back(above.first == below.first ? Move::KeepLeft : Move::KeepRight);
  }
}

}  // namespace

PairWitness locate(const TriangleParams& params, const Label& u, const Label& v) {
  const auto trace = reduce(u, v);
  PairWitness witness{params.q(), {}};
  const Label g = trace.pairs.back().first;
  if (g > 1) {
    // (1, g-1) -> (g, g-1) puts a type-A vertex labelled g on the left.
    witness.script = locate(params, 1, g - 1).script;
    witness.script.push_back(Move::KeepRight);
    witness.script.push_back(Move::DupDescend);
  }
  append_keep_moves(trace, witness.script);
  return witness;
}

std::size_t dup_descend_rows(int q) {
  // q = 5: A(g) has a single own child B(g), whose two own children are
  // adjacent. q >= 6: A(g) already has q-4 >= 2 adjacent own children.
  return q == 5 ? 2 : 1;
}

ReplayResult replay(const PairWitness& witness) {
  const TriangleParams params(witness.q);
  ReplayResult state{1, 1, 1};
  for (std::size_t i = 0; i < witness.script.size(); ++i) {
    switch (witness.script[i]) {
      case Move::KeepLeft:
        state.right += state.left;
        state.row += 1;
        break;
      case Move::KeepRight:
        state.left += state.right;
        state.row += 1;
        break;
      case Move::DupDescend:
        if (state.left == state.right) {
          throw ValidationError("malformed witness: DD at move " + std::to_string(i) +
                                " applied to an equal pair has no type-A member");
        }
        state.left = state.right = std::max(state.left, state.right);
        state.row += dup_descend_rows(params.q());
        break;
    }
  }
  return state;
}

std::optional<Position> resolve_index(const TriangleParams& params, const PairWitness& witness,
                                      std::optional<std::size_t> row_limit) {
  if (witness.q != params.q()) throw ValidationError("witness was built for a different q");
  const auto result = replay(witness);
  const std::size_t limit = row_limit.value_or(default_row_limit(params.q()));
  if (result.row > limit) return std::nullopt;
  const auto rows = build_rows(params, result.row, limit);
  const auto k = find_adjacent(rows.back(), result.left, result.right);
  if (!k) {
    throw VerificationMismatch("witnessed pair (" + result.left.str() + "," +
                               result.right.str() + ") missing from row " +
                               std::to_string(result.row));
  }
  return Position{result.row, *k};
}

Position mirror_position(const Position& pos, std::size_t row_length) {
  return {pos.n, row_length - 2 - pos.k};
}

}  // namespace hpt
