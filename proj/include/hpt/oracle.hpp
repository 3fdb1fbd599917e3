#pragma once

// Independent check of the triangle builder.
//
// The graph is drawn structurally: each vertex sends 2 (base, winger),
// q-2 (type A) or q-1 (type B) edges downward, and the facing edges of
// neighbouring vertices meet in a common child. Kinds in the next row follow
// from in-degree alone. Labels are then counted as shortest paths from the
// base with a breadth-first search, without using the builder's sum/copy rule.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hpt/label.hpp"
#include "hpt/triangle.hpp"

namespace hpt {

class LayeredGraph {
 public:
  using VertexId = std::uint32_t;

  int q() const { return q_; }
  std::size_t rows() const { return layer_start_.size() - 1; }
  std::size_t vertex_count() const { return kinds_.size(); }
  std::size_t edge_count() const { return targets_.size(); }

  /// Vertices of row n, left to right.
  std::size_t layer_begin(std::size_t n) const { return layer_start_[n]; }
  std::size_t layer_size(std::size_t n) const { return layer_start_[n + 1] - layer_start_[n]; }

  VertexKind kind(VertexId v) const { return kinds_[v]; }
  std::size_t row_of(VertexId v) const;
  /// Children of v, left to right.
  std::span<const VertexId> children(VertexId v) const;
  std::vector<std::size_t> in_degrees() const;

 private:
  friend LayeredGraph build_graph(const TriangleParams&, std::size_t, std::optional<std::size_t>);

  int q_ = 5;
  std::vector<VertexKind> kinds_;
  std::vector<std::size_t> layer_start_;
  // CSR adjacency: children of v are targets_[edge_start_[v] .. edge_start_[v+1]).
  std::vector<std::size_t> edge_start_;
  std::vector<VertexId> targets_;
};

std::size_t default_oracle_limit(int q);

LayeredGraph build_graph(const TriangleParams& params, std::size_t max_row,
                         std::optional<std::size_t> oracle_limit = std::nullopt);

/// Number of shortest base-to-vertex paths, indexed by VertexId.
/// Throws VerificationMismatch if a vertex's BFS distance differs from its row.
std::vector<Label> count_paths(const LayeredGraph& graph);

struct Mismatch {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string field;  // "label", "kind" or "length"
  std::string builder;
  std::string oracle;
};

struct DiffReport {
  int q = 5;
  std::size_t rows_compared = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

DiffReport compare_rows(const LayeredGraph& graph, std::span<const Label> labels,
                        std::span<const Row> rows);

/// Builds rows 0..max_row both ways and diffs them.
DiffReport compare(const TriangleParams& params, std::size_t max_row,
                   std::optional<std::size_t> row_limit = std::nullopt,
                   std::optional<std::size_t> oracle_limit = std::nullopt);

}  // namespace hpt
