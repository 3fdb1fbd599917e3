// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hpt/errors.hpp"
#include "hpt/locator.hpp"
#include "hpt/oracle.hpp"
#include "hpt/planner.hpp"
#include "hpt/recurrence.hpp"
#include "hpt/triangle.hpp"
#include "hpt/walker.hpp"

using namespace hpt;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<Label> labels_of(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

std::vector<Label> slice(const std::vector<Label>& v, std::size_t from, std::size_t count) {
  return {v.begin() + static_cast<std::ptrdiff_t>(from),
          v.begin() + static_cast<std::ptrdiff_t>(from + count)};
}

struct RandomCase {
  std::size_t ell;
  std::size_t r;
  int u;
  int v;
};

// ell, r in [1,5]; 1 <= v < u <= 50. Fixed seed.
std::vector<RandomCase> random_cases() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> run(1, 5);
  std::uniform_int_distribution<int> top(2, 50);
  std::vector<RandomCase> cases;
  for (int i = 0; i < 200; ++i) {
    RandomCase c{run(rng), run(rng), top(rng), 0};
    c.v = std::uniform_int_distribution<int>(1, c.u - 1)(rng);
    cases.push_back(c);
  }
  return cases;
}

Outcome figure_one_fixture() {
  Outcome o;
  const TriangleParams p(5);
  const auto rows = build_rows(p, 6);
  const auto graph = build_graph(p, 6);
  const auto counted = count_paths(graph);
  auto oracle_row = [&](std::size_t n) {
    return slice(counted, graph.layer_begin(n), graph.layer_size(n));
  };
  o.expect(rows[3].labels() == labels_of({1, 3, 2, 3, 1}), "row 3 differs from [1,3,2,3,1]");
  o.expect(rows[4].labels() == labels_of({1, 4, 3, 5, 2, 2, 5, 3, 4, 1}),
           "row 4 differs from [1,4,3,5,2,2,5,3,4,1]");
  o.expect(oracle_row(3) == rows[3].labels(), "row 3 differs from path counts");
  o.expect(oracle_row(4) == rows[4].labels(), "row 4 differs from path counts");
  o.expect(rows[3].at(2).label == 2, "binom(3,2) != 2");
  o.expect(rows[3].at(3).label == 3, "binom(3,3) != 3");
  o.expect(rows[4].at(5).label == 2, "binom(4,5) != 2");
  o.expect(rows[4].at(6).label == 5, "binom(4,6) != 5");
  o.expect(rows[4].at(6).label == rows[3].at(2).label + rows[3].at(3).label, "5 != 2 + 3");
  o.expect(rows[4].at(6).kind == VertexKind::TypeA && rows[4].at(5).kind == VertexKind::TypeB,
           "kinds at row 4, k=5,6");
  o.detail = o.pass ? "rows 3-4 exact; binom(3,2)=2 binom(3,3)=3 binom(4,5)=2 binom(4,6)=5"
                    : o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t rows = 0;
  std::size_t vertices = 0;
  for (auto [q, depth] : {std::pair{5, 12}, std::pair{6, 9}, std::pair{7, 9}}) {
    const auto report = compare(TriangleParams(q), static_cast<std::size_t>(depth));
    o.expect(report.ok(), "q=" + std::to_string(q) + ": " +
                              std::to_string(report.mismatches.size()) + " mismatches");
    rows += report.rows_compared;
    vertices += build_graph(TriangleParams(q), static_cast<std::size_t>(depth)).vertex_count();
  }
  if (o.pass) {
    o.detail = std::to_string(rows) + " rows, " + std::to_string(vertices) + " vertices, 0 diffs";
  }
  return o;
}

Outcome canonical_paths() {
  Outcome o;
  std::size_t sequences = 0;
  for (std::int64_t alpha = 2; alpha <= 10; ++alpha) {
    for (int f1 = 2; f1 <= 20; ++f1) {
      for (int f0 = 1; f0 < f1; ++f0) {
        if (std::gcd(f0, f1) != 1) continue;
        const auto rec = make_minus(alpha, f0, f1);
        const auto plan = canonical_minus_plan(rec);
        const auto expected = slice(gen_minus(rec, 16), 1, 15);
        o.expect(plan_labels(plan, 15) == expected,
                 "alpha=" + std::to_string(alpha) + " f0=" + std::to_string(f0) +
                     " f1=" + std::to_string(f1));
        ++sequences;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(sequences) + " sequences x 15 terms";
  return o;
}

Outcome corner_recurrences(const std::vector<RandomCase>& cases) {
  Outcome o;
  std::size_t balanced = 0;
  for (const auto& c : cases) {
    const auto pattern = StepPattern::left_right(c.ell, c.r);
    const auto trace = run_cycles(make_state(c.u, c.v), pattern, 11);
    const auto u = every_second_corners(trace);
    const BigInt p = BigInt(c.ell * c.r + 2);
    const std::string tag = "l=" + std::to_string(c.ell) + " r=" + std::to_string(c.r) +
                            " u=" + std::to_string(c.u) + " v=" + std::to_string(c.v);
    o.expect(u.size() == 12, tag + ": expected 12 terms");
    o.expect(check_linear(u, p, -1), tag + ": u_i recurrence");
    if (c.ell == c.r) {
      ++balanced;
      o.expect(check_linear(corners(trace), BigInt(c.ell), 1), tag + ": U_i recurrence");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(cases.size()) + " cases (" + std::to_string(balanced) +
               " with l=r), 12 terms each";
  }
  return o;
}

Outcome intermediate_sequences(const std::vector<RandomCase>& cases) {
  Outcome o;
  std::size_t sequences = 0;
  for (const auto& c : cases) {
    const auto pattern = StepPattern::left_right(c.ell, c.r);
    const auto start = make_state(c.u, c.v);
    const BigInt p = BigInt(c.ell * c.r + 2);
    const std::string tag = "l=" + std::to_string(c.ell) + " r=" + std::to_string(c.r) +
                            " u=" + std::to_string(c.u) + " v=" + std::to_string(c.v);
    for (std::size_t d = 0; d < c.ell + c.r; ++d) {
      o.expect(check_linear(offset_sequence(start, pattern, d, 12), p, -1),
               tag + " d=" + std::to_string(d));
      ++sequences;
    }
    if (c.ell == c.r) {
      for (std::size_t m = 0; m < c.ell; ++m) {
        o.expect(check_linear(half_cycle_sequence(start, pattern, m, 12), BigInt(c.ell), 1),
                 tag + " W m=" + std::to_string(m));
        ++sequences;
      }
    }
  }
  const auto fibre = slice(gen_plus(make_plus(3, 1, 2), 5), 2, 3);
  o.expect(fibre == labels_of({7, 23, 76}), "gen_plus(3;1,2) terms 2..4");
  const auto l3r3 = StepPattern::parse("L3R3");
  const auto a = half_cycle_sequence(make_state(3, 2), l3r3, 2, 3);
  const auto b = half_cycle_sequence(make_state(4, 3), l3r3, 1, 3);
  o.expect(a == fibre, "(u1,v1,m)=(3,2,2) does not give 7,23,76");
  o.expect(b == fibre, "(u1,v1,m)=(4,3,1) does not give 7,23,76");
  // Same walks drawn with the mirrored pattern R3L3.
  const auto a_mirror =
      half_cycle_sequence(make_state(3, 2).mirrored(), StepPattern::parse("R3L3"), 2, 3);
  o.expect(a_mirror == fibre, "R3L3 mirror of (3,2,2)");
  if (o.pass) {
    o.detail = std::to_string(sequences) + " offset sequences; fixture 7 23 76 from (3,2,2) and "
                                           "(4,3,1)";
  }
  return o;
}

Outcome inverse_minus() {
  Outcome o;
  const auto rec = make_minus(4, 1, 2);
  const auto a = represent_minus(rec, {2, 1}, 2);
  const auto b = represent_minus(rec, {1, 2}, 2);
  o.expect(a.m == 4, "m for L2R is " + a.m.str());
  o.expect(b.m == 5, "m for LR2 is " + b.m.str());
  o.expect(verify_plan(a, rec, 10), "L2R plan fails simulation");
  o.expect(verify_plan(b, rec, 10), "LR2 plan fails simulation");
  if (o.pass) o.detail = "m=4 (L2R), m=5 (LR2); both verified for 10 terms";
  return o;
}

Outcome inverse_plus() {
  Outcome o;
  const auto rec = make_plus(3, 1, 4);
  const auto plan = represent_plus(rec, 1);
  o.expect(plan.m == 3, "m=" + plan.m.str());
  const auto corners4 = plan_labels(plan, 4);
  o.expect(corners4 == labels_of({4, 13, 43, 142}), "corners differ from 4,13,43,142");
  o.expect(corners4 == slice(gen_plus(rec, 5), 1, 4), "corners differ from gen_plus");
  o.expect(verify_plan(plan, rec, 10), "eta=3 plan fails simulation");

  const auto fib = make_plus(1, 1, 2);
  o.expect(verify_plan(represent_plus(fib, 2), fib, 10), "Fibonacci plan fails simulation");

  bool rejected = false;
  try {
    represent_plus(make_plus(3, 1, 2), 2);
  } catch (const NotRepresentable&) {
    rejected = true;
  }
  o.expect(rejected, "(eta=3, f_j=7, f_{j+1}=23) was not rejected");
  if (o.pass) o.detail = "m=3, corners 4 13 43 142; Fibonacci verified; 16/3 rejected";
  return o;
}

Outcome pair_locator() {
  Outcome o;
  const TriangleParams p(5);
  const auto rows = build_rows(p, 12);
  std::size_t resolved = 0;
  for (int u = 1; u <= 40; ++u) {
    for (int v = 1; v <= 40; ++v) {
      const std::string tag = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
      const auto witness = locate(p, u, v);
      const auto result = replay(witness);
      o.expect(result.left == u && result.right == v, tag + " replay mismatch");
      if (result.row > 12) continue;
      const auto pos = resolve_index(p, witness, 12);
      o.expect(pos.has_value(), tag + " not resolved");
      if (!pos) continue;
      ++resolved;
      const Row& row = rows[pos->n];
      o.expect(row[pos->k].label == u && row[pos->k + 1].label == v, tag + " wrong position");
      if (u == v) {
        o.expect(row[pos->k].kind != VertexKind::TypeA && row[pos->k + 1].kind != VertexKind::TypeA,
                 tag + " equal pair contains a type-A vertex");
      } else {
        const std::size_t a = u < v ? pos->k + 1 : pos->k;
        o.expect(row[a].kind == VertexKind::TypeA, tag + " larger member is not type A");
        o.expect(row[a - 1].kind != VertexKind::TypeA && row[a + 1].kind != VertexKind::TypeA,
                 tag + " type-A member has a type-A neighbour");
        const std::size_t far = u < v ? a + 1 : a - 1;
        o.expect(row[far].label == (u < v ? v - u : u - v), tag + " difference neighbour");
      }
    }
  }
  if (o.pass) {
    o.detail = "1600 pairs replayed; " + std::to_string(resolved) + " resolved in rows <= 12";
  }
  return o;
}

Outcome coupled_systems() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> start(0, 50);
  int systems = 0;
  while (systems < 500) {
    CoupledSystem sys{coef(rng), coef(rng), coef(rng), coef(rng), start(rng), start(rng)};
    if (sys.a2 * sys.b1 == 0) continue;
    ++systems;
    const auto rel = lemma_combine(sys);
    const auto [xs, ys] = iterate(sys, 20);
    o.expect(check_linear(xs, rel) && check_linear(ys, rel),
             "system a1=" + sys.a1.str() + " b1=" + sys.b1.str() + " a2=" + sys.a2.str() +
                 " b2=" + sys.b2.str());
  }
  if (o.pass) o.detail = "500 systems x 20 steps";
  return o;
}

}  // namespace

int main() {
  const auto cases = random_cases();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 figure-1 fixture", figure_one_fixture},
      {"AC2 oracle equivalence", oracle_equivalence},
      {"AC3 canonical path L R^(alpha-2)", canonical_paths},
      {"AC4 corner recurrences", [&] { return corner_recurrences(cases); }},
      {"AC5 intermediate sequences", [&] { return intermediate_sequences(cases); }},
      {"AC6 inverse representation (minus)", inverse_minus},
      {"AC7 inverse representation (plus, l=r=eta)", inverse_plus},
      {"AC8 adjacent-pair witnesses", pair_locator},
      {"AC9 coupled-system combination", coupled_systems},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
