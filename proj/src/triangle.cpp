#include "hpt/triangle.hpp"

#include <algorithm>
#include <string>

#include "hpt/errors.hpp"

namespace hpt {

std::string_view kind_code(VertexKind kind) {
  switch (kind) {
    case VertexKind::Base: return "Base";
    case VertexKind::WingerLeft: return "WL";
    case VertexKind::WingerRight: return "WR";
    case VertexKind::TypeA: return "A";
    case VertexKind::TypeB: return "B";
  }
  return "?";
}

VertexKind parse_kind(std::string_view code) {
  if (code == "Base") return VertexKind::Base;
  if (code == "WL") return VertexKind::WingerLeft;
  if (code == "WR") return VertexKind::WingerRight;
  if (code == "A") return VertexKind::TypeA;
  if (code == "B") return VertexKind::TypeB;
  throw ValidationError("unknown vertex kind '" + std::string(code) + "'");
}

TriangleParams::TriangleParams(int q) : q_(q) {
  // (p-2)(q-2) > 4 with p = 4
  if (q < 5) throw ValidationError("q must be ≥ 5");
}

Row::Row(std::size_t n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {}

const Entry& Row::at(std::size_t k) const {
  if (k >= entries_.size()) {
    throw IndexError("k=" + std::to_string(k) + " out of range for row " + std::to_string(n_) +
                     " of length " + std::to_string(entries_.size()));
  }
  return entries_[k];
}

std::vector<Label> Row::labels() const {
  std::vector<Label> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.label);
  return out;
}

std::pair<Row, Row> initial_rows() {
  return {Row(0, {{1, VertexKind::Base}}),
          Row(1, {{1, VertexKind::WingerLeft}, {1, VertexKind::WingerRight}})};
}

Row next_row(const TriangleParams& params, const Row& row) {
  if (row.index() < 1 || row.size() < 2) {
    throw ValidationError("next_row expects a row with index >= 1");
  }
  const auto parents = row.entries();

  std::size_t own_total = 0;
  for (const auto& p : parents) {
    if (p.kind == VertexKind::TypeA) own_total += params.own_children_a();
    if (p.kind == VertexKind::TypeB) own_total += params.own_children_b();
  }
  std::vector<Entry> children;
  children.reserve(2 + (parents.size() - 1) + own_total);

  for (std::size_t i = 0; i < parents.size(); ++i) {
    const Entry& p = parents[i];
    if (i > 0) {
      children.push_back({parents[i - 1].label + p.label, VertexKind::TypeA});
    }
    switch (p.kind) {
      case VertexKind::WingerLeft:
        children.push_back({1, VertexKind::WingerLeft});
        break;
      case VertexKind::WingerRight:
        children.push_back({1, VertexKind::WingerRight});
        break;
      case VertexKind::TypeA:
        children.insert(children.end(), static_cast<std::size_t>(params.own_children_a()), {p.label, VertexKind::TypeB});
        break;
      case VertexKind::TypeB:
        children.insert(children.end(), static_cast<std::size_t>(params.own_children_b()), {p.label, VertexKind::TypeB});
        break;
      case VertexKind::Base:
        throw ValidationError("base vertex outside row 0");
    }
  }
  return Row(row.index() + 1, std::move(children));
}

std::size_t default_row_limit(int q) { return q == 5 ? 20 : 12; }

std::vector<Row> build_rows(const TriangleParams& params, std::size_t max_row,
                            std::optional<std::size_t> row_limit) {
  const std::size_t limit = row_limit.value_or(default_row_limit(params.q()));
  if (max_row > limit) {
    throw LimitError("row " + std::to_string(max_row) + " exceeds the row limit " +
                     std::to_string(limit) + " for q=" + std::to_string(params.q()));
  }
  auto [row0, row1] = initial_rows();
  std::vector<Row> rows;
  rows.reserve(max_row + 1);
  rows.push_back(std::move(row0));
  if (max_row >= 1) rows.push_back(std::move(row1));
  while (rows.size() <= max_row) rows.push_back(next_row(params, rows.back()));
  return rows;
}

Entry entry(const TriangleParams& params, std::size_t n, std::size_t k,
            std::optional<std::size_t> row_limit) {
  auto rows = build_rows(params, n, row_limit);
  return rows.back().at(k);
}

RowStats row_stats(const Row& row) {
  RowStats stats;
  stats.length = row.size();
  for (const auto& e : row.entries()) {
    stats.label_sum += e.label;
    stats.max_label = std::max(stats.max_label, e.label);
    if (e.kind == VertexKind::TypeA) ++stats.count_a;
    if (e.kind == VertexKind::TypeB) ++stats.count_b;
  }
  return stats;
}

std::optional<std::size_t> find_adjacent(const Row& row, const Label& left, const Label& right) {
  for (std::size_t k = 0; k + 1 < row.size(); ++k) {
    if (row[k].label == left && row[k + 1].label == right) return k;
  }
  return std::nullopt;
}

}  // namespace hpt
