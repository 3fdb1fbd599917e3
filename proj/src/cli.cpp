#include "hpt/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hpt/errors.hpp"
#include "hpt/locator.hpp"
#include "hpt/oracle.hpp"
#include "hpt/planner.hpp"
#include "hpt/recurrence.hpp"
#include "hpt/serialize.hpp"
#include "hpt/triangle.hpp"
#include "hpt/walker.hpp"

namespace hpt::cli {

namespace {

struct CliConfig {
  int q = 5;
  std::optional<std::size_t> row_limit;
  std::optional<std::size_t> oracle_limit;
  std::string format = "text";
  std::string output;
};

// Thrown when the rendered output reports a verification failure; the
// output is still emitted.
struct MismatchExit {
  std::string rendered;
};

std::size_t parse_limit(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw ValidationError(what + " must be a positive integer, got '" + text + "'");
  }
  return value;
}

void require_format(const CliConfig& cfg, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end()) {
    std::string list;
    for (auto f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
    throw ValidationError("format '" + cfg.format + "' not supported here (use " + list + ")");
  }
}

std::string join(const std::vector<Label>& labels) {
  std::string out;
  for (const auto& v : labels) {
    if (!out.empty()) out += ' ';
    out += v.str();
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string state_text(const WalkerState& s) {
  return s.w().str() + "," + s.a().str() + "," + s.b().str();
}

WalkerState parse_start(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ValidationError("--start expects W,A (e.g. 2,1)");
  return make_state(parse_decimal(text.substr(0, comma)), parse_decimal(text.substr(comma + 1)));
}

std::string render_rows(const CliConfig& cfg, std::size_t max_row) {
  require_format(cfg, {"text", "json", "csv", "tikz"});
  const TriangleParams params(cfg.q);
  const auto rows = build_rows(params, max_row, cfg.row_limit);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(row_to_json(cfg.q, row));
    return dump(arr);
  }
  if (cfg.format == "csv") return rows_to_csv(rows);
  if (cfg.format == "tikz") return rows_to_tikz(cfg.q, rows);
  std::string out;
  for (const auto& row : rows) out += std::to_string(row.index()) + ": " + join(row.labels()) + "\n";
  return out;
}

std::string render_entry(const CliConfig& cfg, std::size_t n, std::size_t k) {
  require_format(cfg, {"text", "json"});
  const auto e = entry(TriangleParams(cfg.q), n, k, cfg.row_limit);
  if (cfg.format == "json") {
    return dump(Json{{"q", cfg.q}, {"n", n}, {"k", k}, {"label", e.label.str()},
                     {"kind", std::string(kind_code(e.kind))}});
  }
  return e.label.str() + " " + std::string(kind_code(e.kind)) + "\n";
}

std::string render_walk(const CliConfig& cfg, const std::string& start_text,
                        const std::string& pattern_text, std::size_t cycles,
                        const std::string& emit) {
  require_format(cfg, {"text", "json"});
  const auto start = parse_start(start_text);
  const auto pattern = StepPattern::parse(pattern_text);
  const auto trace = run_cycles(start, pattern, cycles);
  if (emit == "all" && cfg.format == "json") return dump(trace_to_json(trace));
  std::vector<Label> labels;
  if (emit == "all") {
    labels = path_labels(trace);
  } else if (emit == "corners") {
    labels = corners(trace);
  } else {
    labels = every_second_corners(trace);
  }
  if (cfg.format == "json") return dump(sequence_to_json(labels));
  return join(labels) + "\n";
}

std::string render_plan_text(const RepresentationPlan& plan, const std::vector<Label>& labels) {
  std::string out;
  out += "m=" + plan.m.str() + "\n";
  out += "j=" + std::to_string(plan.j) + "\n";
  out += "pattern " + plan.pattern.to_string() + "\n";
  out += "start " + state_text(plan.start) + "\n";
  out += "extraction " + std::string(extraction_name(plan.extraction)) + "\n";
  out += "labels " + join(labels) + "\n";
  return out;
}

Json plan_with_labels(const RepresentationPlan& plan, const std::vector<Label>& labels) {
  return {{"plan", plan_to_json(plan)}, {"labels", sequence_to_json(labels)}};
}

std::string render_plan(const CliConfig& cfg, std::int64_t alpha, const std::string& f0,
                        const std::string& f1, std::size_t terms, bool exploratory) {
  require_format(cfg, {"text", "json"});
  const auto rec = make_minus(alpha, parse_positive(f0, "f0"), parse_positive(f1, "f1"),
                              exploratory ? Checks::Exploratory : Checks::Strict);
  const auto plan = canonical_minus_plan(rec);
  const auto labels = plan_labels(plan, terms);
  if (!verify_plan(plan, rec, std::max<std::size_t>(terms, 3))) {
    throw VerificationMismatch("canonical plan does not reproduce the sequence");
  }
  const bool extendable = extendable_to_f0(rec);
  const auto choices = enumerate_patterns(alpha);
  if (cfg.format == "json") {
    Json j = plan_with_labels(plan, labels);
    j["extendable_to_f0"] = extendable;
    Json patterns = Json::array();
    for (const auto& c : choices) patterns.push_back({c.ell, c.r});
    j["patterns"] = std::move(patterns);
    return dump(j);
  }
  std::string out = render_plan_text(plan, labels);
  out += std::string("extendable_to_f0 ") + (extendable ? "true" : "false") + "\n";
  out += "patterns";
  for (const auto& c : choices) {
    out += " " + StepPattern::left_right(static_cast<std::size_t>(c.ell),
                                         static_cast<std::size_t>(c.r))
                     .to_string();
  }
  out += "\n";
  return out;
}

std::string render_represent(const CliConfig& cfg, std::int64_t alpha, const std::string& f0,
                             const std::string& f1, std::size_t j, std::int64_t ell,
                             std::int64_t r, std::size_t terms, bool exploratory) {
  require_format(cfg, {"text", "json"});
  const auto rec = make_minus(alpha, parse_positive(f0, "f0"), parse_positive(f1, "f1"),
                              exploratory ? Checks::Exploratory : Checks::Strict);
  const auto plan = represent_minus(rec, {ell, r}, j);
  const auto labels = plan_labels(plan, terms);
  if (cfg.format == "json") return dump(plan_with_labels(plan, labels));
  return render_plan_text(plan, labels);
}

std::string render_represent_plus(const CliConfig& cfg, std::int64_t eta, const std::string& f0,
                                  const std::string& f1, std::size_t j, std::size_t terms) {
  require_format(cfg, {"text", "json"});
  const auto rec = make_plus(eta, parse_positive(f0, "f0"), parse_positive(f1, "f1"));
  const auto plan = represent_plus(rec, j);
  const auto labels = plan_labels(plan, terms);
  if (cfg.format == "json") return dump(plan_with_labels(plan, labels));
  return render_plan_text(plan, labels);
}

std::string render_locate(const CliConfig& cfg, const std::string& u_text,
                          const std::string& v_text, bool resolve) {
  require_format(cfg, {"text", "json"});
  const TriangleParams params(cfg.q);
  const Label u = parse_positive(u_text, "u");
  const Label v = parse_positive(v_text, "v");
  const auto witness = locate(params, u, v);
  const auto result = replay(witness);
  const auto trace = reduce(u, v);
  std::optional<Position> pos;
  std::optional<Position> mirror;
  if (resolve) {
    pos = resolve_index(params, witness, cfg.row_limit);
    if (pos) {
      const auto rows = build_rows(params, pos->n, cfg.row_limit);
      mirror = mirror_position(*pos, rows.back().size());
    }
  }
  const std::string gcd = trace.pairs.back().first.str();

  if (cfg.format == "json") {
    Json j = {{"witness", witness_to_json(witness)},
              {"pair", {result.left.str(), result.right.str()}},
              {"row", result.row},
              {"gcd", gcd}};
    if (resolve) {
      if (pos) {
        j["position"] = {{"n", pos->n}, {"k", pos->k}};
        j["mirror_position"] = {{"n", mirror->n}, {"k", mirror->k}};
      } else {
        j["position"] = "unresolved";
      }
    }
    return dump(j);
  }
  std::string script;
  for (Move m : witness.script) script += " " + std::string(move_code(m));
  std::string out;
  out += "pair " + result.left.str() + " " + result.right.str() + "\n";
  out += "gcd " + gcd + "\n";
  out += "script" + script + "\n";
  out += "row " + std::to_string(result.row) + "\n";
  if (resolve) {
    if (pos) {
      out += "k " + std::to_string(pos->k) + "\n";
      out += "mirror k " + std::to_string(mirror->k) + "\n";
    } else {
      out += "k unresolved\n";
    }
  }
  return out;
}

std::string render_verify(const CliConfig& cfg, std::size_t max_row) {
  require_format(cfg, {"text", "json", "dot"});
  const TriangleParams params(cfg.q);
  const auto rows = build_rows(params, max_row, cfg.row_limit);
  const auto graph = build_graph(params, max_row, cfg.oracle_limit);
  const auto labels = count_paths(graph);
  const auto report = compare_rows(graph, labels, rows);

  std::string out;
  if (cfg.format == "json") {
    out = dump(diff_to_json(report));
  } else if (cfg.format == "dot") {
    out = graph_to_dot(graph, labels);
  } else if (report.ok()) {
    out = "OK " + std::to_string(report.rows_compared) + " rows\n";
  } else {
    out = "MISMATCH " + std::to_string(report.mismatches.size()) + " differences\n";
    for (const auto& m : report.mismatches) {
      out += "  n=" + std::to_string(m.n) + " k=" + std::to_string(m.k) + " " + m.field +
             ": builder " + m.builder + " oracle " + m.oracle + "\n";
    }
  }
  if (!report.ok()) throw MismatchExit{out};
  return out;
}

std::string render_stats(const CliConfig& cfg, std::size_t max_row) {
  require_format(cfg, {"text", "json", "csv"});
  const auto rows = build_rows(TriangleParams(cfg.q), max_row, cfg.row_limit);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) {
      const auto s = row_stats(row);
      arr.push_back({{"n", row.index()},
                     {"length", s.length},
                     {"label_sum", s.label_sum.str()},
                     {"count_A", s.count_a},
                     {"count_B", s.count_b},
                     {"max_label", s.max_label.str()}});
    }
    return dump(arr);
  }
  std::ostringstream out;
  if (cfg.format == "csv") {
    out << "n,length,label_sum,count_A,count_B,max_label\n";
    for (const auto& row : rows) {
      const auto s = row_stats(row);
      out << row.index() << ',' << s.length << ',' << s.label_sum.str() << ',' << s.count_a << ','
          << s.count_b << ',' << s.max_label.str() << '\n';
    }
    return out.str();
  }
  out << std::left << std::setw(4) << "n" << std::setw(10) << "length" << std::setw(16) << "sum"
      << std::setw(10) << "count_A" << std::setw(10) << "count_B" << "max_label\n";
  for (const auto& row : rows) {
    const auto s = row_stats(row);
    out << std::setw(4) << row.index() << std::setw(10) << s.length << std::setw(16)
        << s.label_sum.str() << std::setw(10) << s.count_a << std::setw(10) << s.count_b
        << s.max_label.str() << '\n';
  }
  return out.str();
}

void emit(const CliConfig& cfg, const std::string& rendered, std::ostream& out) {
  if (cfg.output.empty()) {
    out << rendered;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file '" + cfg.output + "'");
  file << rendered;
  if (!file) throw ValidationError("failed writing '" + cfg.output + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
  CliConfig cfg;
  std::string row_limit_text;
  std::string oracle_limit_text;

  CLI::App app{"Hyperbolic Pascal triangles {4,q}: rows, walks, recurrences and pair witnesses",
               "hpt"};
  app.require_subcommand(1);
  app.add_option("--q", cfg.q, "Mosaic parameter q of {4,q}");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot", "tikz"}));
  app.add_option("--output", cfg.output, "Write output to this file instead of stdout");
  app.add_option("--row-limit", row_limit_text, "Deepest row the builder may materialize");
  app.add_option("--oracle-limit", oracle_limit_text, "Deepest row the oracle may build");

  std::function<std::string()> action;

  std::size_t max_row = 0;
  auto* rows = app.add_subcommand("rows", "Emit rows 0..max-row");
  rows->add_option("--max-row", max_row)->required();
  rows->callback([&] { action = [&] { return render_rows(cfg, max_row); }; });

  std::size_t entry_n = 0;
  std::size_t entry_k = 0;
  auto* ent = app.add_subcommand("entry", "One element of a row (zero-based k)");
  ent->add_option("--n", entry_n)->required();
  ent->add_option("--k", entry_k)->required();
  ent->callback([&] { action = [&] { return render_entry(cfg, entry_n, entry_k); }; });

  std::string start;
  std::string pattern;
  std::size_t cycles = 1;
  std::string emit_mode = "all";
  auto* walk = app.add_subcommand("walk", "Walk along type-A vertices");
  walk->add_option("--start", start, "W,A: type-A label and its left neighbour")->required();
  walk->add_option("--pattern", pattern, "Step pattern, e.g. LR2 or L3R3")->required();
  walk->add_option("--cycles", cycles);
  walk->add_option("--emit", emit_mode)->check(CLI::IsMember({"all", "corners", "second"}));
  walk->callback(
      [&] { action = [&] { return render_walk(cfg, start, pattern, cycles, emit_mode); }; });

  std::int64_t alpha = 2;
  std::int64_t eta = 1;
  std::string f0 = "1";
  std::string f1 = "2";
  std::size_t terms = 10;
  std::size_t j = 1;
  std::int64_t ell = 1;
  std::int64_t r = 1;
  bool exploratory = false;

  auto* plan = app.add_subcommand("plan", "Canonical walk for f_i = alpha f_{i-1} - f_{i-2}");
  plan->add_option("--alpha", alpha)->required();
  plan->add_option("--f0", f0)->required();
  plan->add_option("--f1", f1)->required();
  plan->add_option("--terms", terms);
  plan->add_flag("--exploratory", exploratory, "Skip the f0 < f1 and gcd(f0,f1)=1 checks");
  plan->callback(
      [&] { action = [&] { return render_plan(cfg, alpha, f0, f1, terms, exploratory); }; });

  auto* rep = app.add_subcommand("represent", "Walk L^ell R^r starting at f_j (minus recurrence)");
  rep->add_option("--alpha", alpha)->required();
  rep->add_option("--f0", f0)->required();
  rep->add_option("--f1", f1)->required();
  rep->add_option("--j", j)->required();
  rep->add_option("--ell", ell)->required();
  rep->add_option("--r", r)->required();
  rep->add_option("--terms", terms);
  rep->add_flag("--exploratory", exploratory, "Skip the f0 < f1 and gcd(f0,f1)=1 checks");
  rep->callback([&] {
    action = [&] { return render_represent(cfg, alpha, f0, f1, j, ell, r, terms, exploratory); };
  });

  auto* rep_plus =
      app.add_subcommand("represent-plus", "Walk L^eta R^eta starting at f_j (plus recurrence)");
  rep_plus->add_option("--eta", eta)->required();
  rep_plus->add_option("--f0", f0)->required();
  rep_plus->add_option("--f1", f1)->required();
  rep_plus->add_option("--j", j)->required();
  rep_plus->add_option("--terms", terms);
  rep_plus->callback(
      [&] { action = [&] { return render_represent_plus(cfg, eta, f0, f1, j, terms); }; });

  std::string u_text;
  std::string v_text;
  bool resolve = false;
  auto* loc = app.add_subcommand("locate", "Witness that (u, v) are adjacent in some row");
  loc->add_option("--u", u_text)->required();
  loc->add_option("--v", v_text)->required();
  loc->add_flag("--resolve", resolve, "Also find (n, k) in the materialized row");
  loc->callback([&] { action = [&] { return render_locate(cfg, u_text, v_text, resolve); }; });

  auto* verify = app.add_subcommand("verify", "Diff builder rows against shortest-path counts");
  verify->add_option("--max-row", max_row)->required();
  verify->callback([&] { action = [&] { return render_verify(cfg, max_row); }; });

  auto* stats = app.add_subcommand("stats", "Per-row statistics");
  stats->add_option("--max-row", max_row)->required();
  stats->callback([&] { action = [&] { return render_stats(cfg, max_row); }; });

  for (auto* sub : {rows, ent, walk, plan, rep, rep_plus, loc, verify, stats}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (row_limit_text.empty()) {
      if (auto v = env("HPT_ROW_LIMIT")) row_limit_text = *v;
    }
    if (oracle_limit_text.empty()) {
      if (auto v = env("HPT_ORACLE_LIMIT")) oracle_limit_text = *v;
    }
    if (!row_limit_text.empty()) cfg.row_limit = parse_limit(row_limit_text, "row limit");
    if (!oracle_limit_text.empty()) {
      cfg.oracle_limit = parse_limit(oracle_limit_text, "oracle limit");
    }
    TriangleParams check(cfg.q);
    emit(cfg, action(), out);
    return kExitOk;
  } catch (const MismatchExit& m) {
    try {
      emit(cfg, m.rendered, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
    }
    return kExitMismatch;
  } catch (const VerificationMismatch& e) {
    err << "internal verification mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace hpt::cli
