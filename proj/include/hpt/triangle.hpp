#pragma once

// Rows of the hyperbolic Pascal triangle built on the mosaic {4,q}.
//
// Row 0 is the base vertex. Every later row starts and ends with a winger
// (label 1). Each pair of neighbouring parents shares one type-A child whose
// label is the sum of the parents; every other child is a type-B copy of its
// single parent. A type-A parent has q-4 own children, a type-B parent q-3.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hpt/label.hpp"

namespace hpt {

enum class VertexKind : std::uint8_t { Base, WingerLeft, WingerRight, TypeA, TypeB };

/// "Base", "WL", "WR", "A" or "B".
std::string_view kind_code(VertexKind kind);
VertexKind parse_kind(std::string_view code);

inline bool is_winger(VertexKind kind) {
  return kind == VertexKind::WingerLeft || kind == VertexKind::WingerRight;
}

/// Schläfli parameter q of the mosaic {4,q}; hyperbolic iff q >= 5.
class TriangleParams {
 public:
  explicit TriangleParams(int q);

  int q() const { return q_; }
  /// Own (non-shared) children of a type-A vertex.
  int own_children_a() const { return q_ - 4; }
  /// Own (non-shared) children of a type-B vertex.
  int own_children_b() const { return q_ - 3; }

 private:
  int q_;
};

struct Entry {
  Label label;
  VertexKind kind;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Zero-based (row, index-in-row) coordinate.
struct Position {
  std::size_t n = 0;
  std::size_t k = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

/// One immutable layer of the triangle.
class Row {
 public:
  Row(std::size_t n, std::vector<Entry> entries);

  std::size_t index() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const Entry> entries() const { return entries_; }
  const Entry& operator[](std::size_t k) const { return entries_[k]; }
  /// Throws IndexError when k is out of range.
  const Entry& at(std::size_t k) const;
  std::vector<Label> labels() const;

  friend bool operator==(const Row&, const Row&) = default;

 private:
  std::size_t n_;
  std::vector<Entry> entries_;
};

std::pair<Row, Row> initial_rows();

/// Builds row n+1 from row n (n >= 1).
Row next_row(const TriangleParams& params, const Row& row);

/// Deepest row build_rows will materialize unless told otherwise.
std::size_t default_row_limit(int q);

/// Rows 0..max_row inclusive. Throws LimitError when max_row exceeds
/// row_limit (default_row_limit(q) when not given).
std::vector<Row> build_rows(const TriangleParams& params, std::size_t max_row,
                            std::optional<std::size_t> row_limit = std::nullopt);

Entry entry(const TriangleParams& params, std::size_t n, std::size_t k,
            std::optional<std::size_t> row_limit = std::nullopt);

struct RowStats {
  std::size_t length = 0;
  Label label_sum = 0;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  Label max_label = 0;
};

RowStats row_stats(const Row& row);

/// Leftmost k with row[k], row[k+1] == (left, right), if any.
std::optional<std::size_t> find_adjacent(const Row& row, const Label& left, const Label& right);

}  // namespace hpt
