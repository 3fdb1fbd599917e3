#include "hpt/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "hpt/errors.hpp"

namespace hpt {

std::size_t LayeredGraph::row_of(VertexId v) const {
  auto it = std::upper_bound(layer_start_.begin(), layer_start_.end(), std::size_t{v});
  return static_cast<std::size_t>(it - layer_start_.begin()) - 1;
}

std::span<const LayeredGraph::VertexId> LayeredGraph::children(VertexId v) const {
  return std::span<const VertexId>(targets_).subspan(edge_start_[v],
                                                     edge_start_[v + 1] - edge_start_[v]);
}

std::vector<std::size_t> LayeredGraph::in_degrees() const {
  std::vector<std::size_t> deg(vertex_count(), 0);
  for (VertexId t : targets_) ++deg[t];
  return deg;
}

std::size_t default_oracle_limit(int q) { return q == 5 ? 12 : 9; }

namespace {

std::size_t out_degree(VertexKind kind, int q) {
  switch (kind) {
    case VertexKind::Base:
    case VertexKind::WingerLeft:
    case VertexKind::WingerRight:
      return 2;
    case VertexKind::TypeA:
      return static_cast<std::size_t>(q - 2);
    case VertexKind::TypeB:
      return static_cast<std::size_t>(q - 1);
  }
  return 0;
}

}  // namespace

LayeredGraph build_graph(const TriangleParams& params, std::size_t max_row,
                         std::optional<std::size_t> oracle_limit) {
  const std::size_t limit = oracle_limit.value_or(default_oracle_limit(params.q()));
  if (max_row > limit) {
    throw LimitError("row " + std::to_string(max_row) + " exceeds the oracle limit " +
                     std::to_string(limit) + " for q=" + std::to_string(params.q()));
  }
  LayeredGraph g;
  g.q_ = params.q();
  g.kinds_.push_back(VertexKind::Base);
  g.layer_start_ = {0, 1};
  g.edge_start_.push_back(0);

  std::vector<std::size_t> in_degree;
  for (std::size_t n = 0; n < max_row; ++n) {
    const std::size_t begin = g.layer_start_[n];
    const std::size_t end = g.layer_start_[n + 1];
    const std::size_t first_child = end;
    std::size_t next_child = first_child;
    in_degree.clear();

    auto new_child = [&]() {
      in_degree.push_back(0);
      return next_child++;
    };
    for (std::size_t v = begin; v < end; ++v) {
      const std::size_t degree = out_degree(g.kinds_[v], g.q_);
      for (std::size_t e = 0; e < degree; ++e) {
        // The first edge meets the last edge of the left neighbour.
        const std::size_t child = (e == 0 && v > begin) ? next_child - 1 : new_child();
        if (child >= std::numeric_limits<LayeredGraph::VertexId>::max()) {
          throw LimitError("graph too large for 32-bit vertex ids");
        }
        g.targets_.push_back(static_cast<LayeredGraph::VertexId>(child));
        ++in_degree[child - first_child];
      }
      g.edge_start_.push_back(g.targets_.size());
    }

    const std::size_t width = next_child - first_child;
    for (std::size_t i = 0; i < width; ++i) {
      VertexKind kind;
      if (i == 0) {
        kind = VertexKind::WingerLeft;
      } else if (i + 1 == width) {
        kind = VertexKind::WingerRight;
      } else {
        kind = in_degree[i] == 2 ? VertexKind::TypeA : VertexKind::TypeB;
      }
      g.kinds_.push_back(kind);
    }
    g.layer_start_.push_back(next_child);
  }
  // Last row has no children.
  while (g.edge_start_.size() < g.kinds_.size() + 1) g.edge_start_.push_back(g.targets_.size());
  return g;
}

std::vector<Label> count_paths(const LayeredGraph& graph) {
  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(graph.vertex_count(), unseen);
  std::vector<Label> paths(graph.vertex_count(), 0);
  std::deque<LayeredGraph::VertexId> queue;
  dist[0] = 0;
  paths[0] = 1;
  queue.push_back(0);
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto c : graph.children(v)) {
      if (dist[c] == unseen) {
        dist[c] = dist[v] + 1;
        queue.push_back(c);
      }
      if (dist[c] == dist[v] + 1) paths[c] += paths[v];
    }
  }
  for (std::size_t n = 0; n < graph.rows(); ++n) {
    for (std::size_t i = 0; i < graph.layer_size(n); ++i) {
      if (dist[graph.layer_begin(n) + i] != n) {
        throw VerificationMismatch("vertex " + std::to_string(i) + " of layer " +
                                   std::to_string(n) + " is not at distance " +
                                   std::to_string(n));
      }
    }
  }
  return paths;
}

DiffReport compare_rows(const LayeredGraph& graph, std::span<const Label> labels,
                        std::span<const Row> rows) {
  DiffReport report;
  report.q = graph.q();
  report.rows_compared = std::min(rows.size(), graph.rows());
  for (std::size_t n = 0; n < report.rows_compared; ++n) {
    const Row& row = rows[n];
    const std::size_t width = graph.layer_size(n);
    if (row.size() != width) {
      report.mismatches.push_back(
          {n, 0, "length", std::to_string(row.size()), std::to_string(width)});
    }
    for (std::size_t k = 0; k < std::min(width, row.size()); ++k) {
      const std::size_t v = graph.layer_begin(n) + k;
      if (row[k].label != labels[v]) {
        report.mismatches.push_back({n, k, "label", row[k].label.str(), labels[v].str()});
      }
      const auto vk = graph.kind(static_cast<LayeredGraph::VertexId>(v));
      if (row[k].kind != vk) {
        report.mismatches.push_back(
            {n, k, "kind", std::string(kind_code(row[k].kind)), std::string(kind_code(vk))});
      }
    }
  }
  return report;
}

DiffReport compare(const TriangleParams& params, std::size_t max_row,
                   std::optional<std::size_t> row_limit, std::optional<std::size_t> oracle_limit) {
  const auto rows = build_rows(params, max_row, row_limit);
  const auto graph = build_graph(params, max_row, oracle_limit);
  const auto labels = count_paths(graph);
  return compare_rows(graph, labels, rows);
}

}  // namespace hpt
