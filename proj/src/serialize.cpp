#include "hpt/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "hpt/errors.hpp"

namespace hpt {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

Label label_field(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw ValidationError(std::string("field '") + key + "' must be a string");
  return parse_decimal(v.get<std::string>());
}

template <typename T>
T int_field(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) {
    throw ValidationError(std::string("field '") + key + "' must be an integer");
  }
  return v.get<T>();
}

}  // namespace

Json row_to_json(int q, const Row& row) {
  Json entries = Json::array();
  for (const auto& e : row.entries()) {
    entries.push_back({{"label", e.label.str()}, {"kind", std::string(kind_code(e.kind))}});
  }
  return {{"q", q}, {"n", row.index()}, {"entries", std::move(entries)}};
}

Row row_from_json(const Json& j) {
  const auto n = int_field<std::size_t>(j, "n");
  const Json& entries = require(j, "entries");
  if (!entries.is_array()) throw ValidationError("'entries' must be an array");
  std::vector<Entry> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    out.push_back({label_field(e, "label"), parse_kind(require(e, "kind").get<std::string>())});
  }
  return Row(n, std::move(out));
}

std::string rows_to_csv(std::span<const Row> rows) {
  std::string out = "n,k,kind,label\n";
  for (const Row& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out += std::to_string(row.index());
      out += ',';
      out += std::to_string(k);
      out += ',';
      out += kind_code(row[k].kind);
      out += ',';
      out += row[k].label.str();
      out += '\n';
    }
  }
  return out;
}

Json sequence_to_json(std::span<const Label> seq) {
  Json out = Json::array();
  for (const auto& v : seq) out.push_back(v.str());
  return out;
}

Json trace_to_json(const PathTrace& trace) {
  Json out = Json::array();
  for (const auto& s : trace.states) out.push_back({s.w().str(), s.a().str(), s.b().str()});
  return out;
}

Json plan_to_json(const RepresentationPlan& plan) {
  return {{"pattern", plan.pattern.to_string()},
          {"start", {{"w", plan.start.w().str()}, {"a", plan.start.a().str()},
                     {"b", plan.start.b().str()}}},
          {"extraction", std::string(extraction_name(plan.extraction))},
          {"j", plan.j},
          {"m", plan.m.str()}};
}

RepresentationPlan plan_from_json(const Json& j) {
  const Json& start = require(j, "start");
  return {StepPattern::parse(require(j, "pattern").get<std::string>()),
          WalkerState::from_triple(label_field(start, "w"), label_field(start, "a"),
                                   label_field(start, "b")),
          parse_extraction(require(j, "extraction").get<std::string>()),
          int_field<std::size_t>(j, "j"), label_field(j, "m")};
}

Json witness_to_json(const PairWitness& witness) {
  Json script = Json::array();
  for (Move m : witness.script) script.push_back(std::string(move_code(m)));
  return {{"q", witness.q}, {"script", std::move(script)}};
}

PairWitness witness_from_json(const Json& j) {
  PairWitness w;
  w.q = int_field<int>(j, "q");
  TriangleParams check(w.q);
  const Json& script = require(j, "script");
  if (!script.is_array()) throw ValidationError("'script' must be an array");
  for (const auto& m : script) {
    if (!m.is_string()) throw ValidationError("script moves must be strings");
    w.script.push_back(parse_move(m.get<std::string>()));
  }
  return w;
}

Json diff_to_json(const DiffReport& report) {
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"n", m.n}, {"k", m.k}, {"field", m.field}, {"builder", m.builder},
                          {"oracle", m.oracle}});
  }
  return {{"q", report.q},
          {"rows", report.rows_compared},
          {"ok", report.ok()},
          {"mismatches", std::move(mismatches)}};
}

std::string graph_to_dot(const LayeredGraph& graph, std::span<const Label> labels) {
  std::ostringstream out;
  out << "digraph hpt_4_" << graph.q() << " {\n";
  out << "  rankdir=TB;\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  for (std::size_t n = 0; n < graph.rows(); ++n) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i < graph.layer_size(n); ++i) out << " v" << graph.layer_begin(n) + i;
    out << " }\n";
  }
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const auto id = static_cast<LayeredGraph::VertexId>(v);
    const auto kind = graph.kind(id);
    const char* shape = kind == VertexKind::TypeA ? "circle" : "diamond";
    const char* color = kind == VertexKind::TypeA   ? "red"
                        : kind == VertexKind::TypeB ? "cyan"
                                                    : "white";
    out << "  v" << v << " [label=\"" << labels[v].str() << "\", kind=\"" << kind_code(kind)
        << "\", row=" << graph.row_of(id) << ", shape=" << shape
        << ", style=filled, fillcolor=" << color << "];\n";
  }
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    for (auto c : graph.children(static_cast<LayeredGraph::VertexId>(v))) {
      out << "  v" << v << " -> v" << c << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string rows_to_tikz(int q, std::span<const Row> rows) {
  std::ostringstream out;
  out << "% hyperbolic Pascal triangle {4," << q << "}\n";
  out << "\\begin{tikzpicture}[x=0.6cm,y=-1cm]\n";
  out << "  \\tikzset{A/.style={circle,draw=red,fill=red!20,inner sep=1pt},\n"
         "           B/.style={diamond,draw=cyan,fill=cyan!20,inner sep=1pt},\n"
         "           W/.style={diamond,draw,fill=white,inner sep=1pt}}\n";
  for (const Row& row : rows) {
    const double center = (static_cast<double>(row.size()) - 1.0) / 2.0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const char* style = row[k].kind == VertexKind::TypeA   ? "A"
                          : row[k].kind == VertexKind::TypeB ? "B"
                                                             : "W";
      char x[32];
      std::snprintf(x, sizeof x, "%.1f", static_cast<double>(k) - center);
      out << "  \\node[" << style << "] (n" << row.index() << "k" << k << ") at (" << x << ","
          << row.index() << ") {" << row[k].label.str() << "};\n";
    }
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace hpt
