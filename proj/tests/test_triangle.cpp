#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hpt/errors.hpp"
#include "hpt/triangle.hpp"

using namespace hpt;

namespace {

std::vector<Label> L(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

std::vector<std::size_t> lengths(const std::vector<Row>& rows) {
  std::vector<std::size_t> out;
  for (const auto& r : rows) out.push_back(r.size());
  return out;
}

}  // namespace

TEST_CASE("initial rows") {
  auto [row0, row1] = initial_rows();
  CHECK(row0.index() == 0);
  CHECK(row0.labels() == L({1}));
  CHECK(row0[0].kind == VertexKind::Base);
  CHECK(row1.labels() == L({1, 1}));
  CHECK(row1[0].kind == VertexKind::WingerLeft);
  CHECK(row1[1].kind == VertexKind::WingerRight);
  CHECK(row_stats(row0).label_sum == 1);
  CHECK(row_stats(row1).label_sum == 2);
}

TEST_CASE("next_row for q=5 reproduces rows 2 to 4") {
  const TriangleParams p(5);
  auto [row0, row1] = initial_rows();
  const Row row2 = next_row(p, row1);
  CHECK(row2.labels() == L({1, 2, 1}));
  CHECK(row2[1].kind == VertexKind::TypeA);

  const Row row3 = next_row(p, row2);
  CHECK(row3.index() == 3);
  CHECK(row3.labels() == L({1, 3, 2, 3, 1}));

  const Row row4 = next_row(p, row3);
  CHECK(row4.labels() == L({1, 4, 3, 5, 2, 2, 5, 3, 4, 1}));
  using K = VertexKind;
  const std::vector<K> kinds{K::WingerLeft, K::TypeA, K::TypeB, K::TypeA, K::TypeB,
                             K::TypeB,      K::TypeA, K::TypeB, K::TypeA, K::WingerRight};
  for (std::size_t k = 0; k < kinds.size(); ++k) CHECK(row4[k].kind == kinds[k]);
}

TEST_CASE("next_row rejects the base row") {
  auto [row0, row1] = initial_rows();
  CHECK_THROWS_AS(next_row(TriangleParams(5), row0), ValidationError);
}

TEST_CASE("q below 5 is rejected") {
  CHECK_THROWS_AS(TriangleParams(4), ValidationError);
  CHECK_THROWS_WITH(TriangleParams(3), "q must be ≥ 5");
  CHECK_NOTHROW(TriangleParams(5));
}

TEST_CASE("build_rows") {
  const TriangleParams p(5);
  CHECK(build_rows(p, 0).size() == 1);
  const auto rows = build_rows(p, 4);
  REQUIRE(rows.size() == 5);
  CHECK(rows[4].labels() == L({1, 4, 3, 5, 2, 2, 5, 3, 4, 1}));
  // Counted by the child rule: 22 shared + 2 wingers + 9*1 + 12*2 own children in row 6.
  CHECK(lengths(build_rows(p, 6)) == std::vector<std::size_t>{1, 2, 3, 5, 10, 23, 57});
  CHECK(lengths(build_rows(TriangleParams(6), 3)) == std::vector<std::size_t>{1, 2, 3, 6});
}

TEST_CASE("build_rows guards depth") {
  CHECK(default_row_limit(5) == 20);
  CHECK(default_row_limit(6) == 12);
  CHECK_THROWS_AS(build_rows(TriangleParams(5), 21), LimitError);
  CHECK_THROWS_AS(build_rows(TriangleParams(7), 13), LimitError);
  CHECK_THROWS_AS(build_rows(TriangleParams(5), 5, 4), LimitError);
  CHECK(build_rows(TriangleParams(5), 4, 4).size() == 5);
}

TEST_CASE("entry") {
  const TriangleParams p(5);
  CHECK(entry(p, 4, 6) == Entry{5, VertexKind::TypeA});
  CHECK(entry(p, 4, 5) == Entry{2, VertexKind::TypeB});
  CHECK(entry(p, 3, 2) == Entry{2, VertexKind::TypeB});
  CHECK(entry(p, 3, 3) == Entry{3, VertexKind::TypeA});
  CHECK(entry(p, 0, 0) == Entry{1, VertexKind::Base});
  CHECK_THROWS_AS(entry(p, 4, 10), IndexError);
  CHECK_THROWS_AS(entry(p, 25, 0), LimitError);
}

TEST_CASE("row_stats") {
  const auto rows = build_rows(TriangleParams(5), 4);
  auto s4 = row_stats(rows[4]);
  CHECK(s4.length == 10);
  CHECK(s4.label_sum == 30);
  CHECK(s4.count_a == 4);
  CHECK(s4.count_b == 4);
  CHECK(s4.max_label == 5);

  auto s1 = row_stats(rows[1]);
  CHECK(s1.length == 2);
  CHECK(s1.label_sum == 2);
  CHECK(s1.count_a == 0);
  CHECK(s1.count_b == 0);

  auto s3 = row_stats(rows[3]);
  CHECK(s3.length == 5);
  CHECK(s3.label_sum == 10);
  CHECK(s3.count_a == 2);
  CHECK(s3.count_b == 1);
}

TEST_CASE("find_adjacent") {
  const auto rows = build_rows(TriangleParams(5), 4);
  CHECK(find_adjacent(rows[4], 2, 5) == std::optional<std::size_t>(5));
  CHECK(find_adjacent(rows[4], 2, 2) == std::optional<std::size_t>(4));
  CHECK(find_adjacent(rows[4], 5, 2) == std::optional<std::size_t>(3));
  CHECK_FALSE(find_adjacent(rows[4], 7, 1).has_value());
}

TEST_CASE("row invariants hold for q = 5..8") {
  for (int q = 5; q <= 8; ++q) {
    CAPTURE(q);
    const TriangleParams p(q);
    const std::size_t depth = q == 5 ? 12 : 7;
    const auto rows = build_rows(p, depth);
    for (std::size_t n = 1; n < rows.size(); ++n) {
      CAPTURE(n);
      const Row& row = rows[n];
      const auto labels = row.labels();
      CHECK(std::equal(labels.begin(), labels.end(), labels.rbegin()));
      CHECK(row[0].kind == VertexKind::WingerLeft);
      CHECK(row[row.size() - 1].kind == VertexKind::WingerRight);
      CHECK(row[0].label == 1);
      CHECK(row[row.size() - 1].label == 1);
      for (std::size_t k = 1; k + 1 < row.size(); ++k) {
        CHECK(row[k].kind != VertexKind::Base);
        CHECK_FALSE(is_winger(row[k].kind));
        if (row[k].kind == VertexKind::TypeA) {
          CHECK(row[k].label == row[k - 1].label + row[k + 1].label);
          CHECK(row[k - 1].kind != VertexKind::TypeA);
          CHECK(row[k + 1].kind != VertexKind::TypeA);
        }
      }
      if (n + 1 < rows.size()) {
        const auto now = row_stats(row);
        const auto next = row_stats(rows[n + 1]);
        CHECK(next.count_a == now.length - 1);
        CHECK(next.count_b == static_cast<std::size_t>(q - 4) * now.count_a +
                                  static_cast<std::size_t>(q - 3) * now.count_b);
      }
    }
  }
}
