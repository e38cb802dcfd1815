#include "ors/json_io.hpp"

#include <utility>

#include "ors/error.hpp"

namespace ors {

using nlohmann::json;

namespace {

std::string pair_key(int i, int j) {
  return std::to_string(i) + "," + std::to_string(j);
}

std::pair<int, int> parse_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) {
    fail(Errc::parse_error, "allowed-set key '" + key + "' is not 'i,j'");
  }
  try {
    return {std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))};
  } catch (const std::exception&) {
    fail(Errc::parse_error, "allowed-set key '" + key + "' is not 'i,j'");
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  fail(Errc::parse_error, "expected a number or 'p/q' string coordinate");
}

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return bigint_from_decimal(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  fail(Errc::parse_error, "expected a decimal string or integer weight");
}

void check_format_version(const json& j) {
  if (!j.contains("format_version")) return;  // written by old hands; accept
  const json& v = j.at("format_version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    fail(Errc::parse_error,
         "unsupported format_version (expected " +
             std::to_string(kFormatVersion) + ")");
  }
}

json base_doc(const char* kind) {
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind;
  return j;
}

PartiteGraph graph_from_json(const json& j) {
  std::vector<std::vector<VertexId>> groups;
  for (const json& group : j.at("groups")) {
    groups.push_back(group.get<std::vector<VertexId>>());
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (j.contains("edges")) {
    for (const json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        fail(Errc::parse_error, "edge entries must be [u,v]");
      }
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
  }
  std::optional<int> m;
  if (j.contains("m")) m = j.at("m").get<int>();
  return PartiteGraph(std::move(groups), edges, m);
}

WeightedPartiteGraph weighted_from_json(const json& j) {
  std::map<std::pair<VertexId, VertexId>, BigInt> weights;
  std::vector<std::pair<VertexId, VertexId>> extra_edges;
  for (const json& entry : j.at("weights")) {
    if (!entry.is_array() || entry.size() != 3) {
      fail(Errc::parse_error, "weight entries must be [u,v,w]");
    }
    VertexId u = entry[0].get<VertexId>();
    VertexId v = entry[1].get<VertexId>();
    if (u > v) std::swap(u, v);
    weights[{u, v}] = bigint_from_json(entry[2]);
    extra_edges.emplace_back(u, v);
  }

  // Weights are authoritative: every weighted pair is an edge of the base.
  json base = j;
  json edges = j.contains("edges") ? j.at("edges") : json::array();
  for (auto [u, v] : extra_edges) edges.push_back(json::array({u, v}));
  base["edges"] = std::move(edges);
  return WeightedPartiteGraph(graph_from_json(base), std::move(weights));
}

CnfFormula cnf_from_json(const json& j) {
  CnfFormula f;
  f.variable_count = j.at("variables").get<int>();
  for (const json& clause : j.at("clauses")) {
    Clause c;
    for (const json& lit : clause) {
      const long long signed_var = lit.get<long long>();
      if (signed_var == 0) {
        fail(Errc::parse_error, "literal 0 is not a valid 1-based literal");
      }
      c.literals.push_back(
          Literal{static_cast<int>(std::abs(signed_var)) - 1, signed_var > 0});
    }
    f.clauses.push_back(std::move(c));
  }
  if (j.contains("weights") && !j.at("weights").is_null()) {
    std::vector<BigInt> ws;
    for (const json& w : j.at("weights")) ws.push_back(bigint_from_json(w));
    f.weights = std::move(ws);
  }
  check_cnf(f);
  return f;
}

ColoringInstance coloring_from_json(const json& j) {
  ColoringInstance c;
  c.vertex_count = j.at("vertices").get<int>();
  c.colors = j.at("colors").get<int>();
  if (j.contains("edges")) {
    for (const json& e : j.at("edges")) {
      c.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
  }
  return c;
}

LineArrangementInstance line_instance_from_json(const json& j) {
  LineArrangementInstance inst;
  inst.n = j.at("n").get<int>();
  if (j.contains("l") && !j.at("l").is_null()) inst.l = j.at("l").get<int>();
  if (j.contains("allowed")) {
    for (const auto& [key, points] : j.at("allowed").items()) {
      auto pair = parse_pair_key(key);
      std::vector<RatPoint> ps;
      for (const json& p : points) {
        if (!p.is_array() || p.size() != 2) {
          fail(Errc::parse_error, "allowed points must be [x,y]");
        }
        ps.push_back(RatPoint{rational_from_json(p[0]),
                              rational_from_json(p[1])});
      }
      inst.allowed[pair] = std::move(ps);
    }
  }
  check_instance(inst);
  return inst;
}

LocalCircleInstance circle_instance_from_json(const json& j) {
  LocalCircleInstance inst;
  inst.n = j.at("n").get<int>();
  if (j.contains("l") && !j.at("l").is_null()) inst.l = j.at("l").get<int>();
  if (j.contains("allowed")) {
    for (const auto& [key, pairs] : j.at("allowed").items()) {
      auto pair = parse_pair_key(key);
      std::vector<std::pair<double, double>> ps;
      for (const json& p : pairs) {
        if (!p.is_array() || p.size() != 2) {
          fail(Errc::parse_error, "allowed angle pairs must be [a_i,a_j]");
        }
        ps.emplace_back(p[0].get<double>(), p[1].get<double>());
      }
      inst.allowed[pair] = std::move(ps);
    }
  }
  check_instance(inst);
  return inst;
}

SolveOutcome outcome_from_json(const json& j) {
  SolveOutcome out;
  const std::string status = j.at("status").get<std::string>();
  if (status == "feasible") {
    out.feasible = true;
  } else if (status != "infeasible") {
    fail(Errc::parse_error, "unknown outcome status '" + status + "'");
  }
  if (j.contains("witness") && !j.at("witness").is_null()) {
    const json& w = j.at("witness");
    if (w.contains("picks")) {
      out.witness = assignment_from_json(w);
    } else if (w.contains("values")) {
      out.truth = truth_from_json(w);
    } else {
      fail(Errc::parse_error, "witness must contain 'picks' or 'values'");
    }
  }
  if (j.contains("objective") && !j.at("objective").is_null()) {
    out.objective = bigint_from_json(j.at("objective"));
  }
  return out;
}

}  // namespace

nlohmann::json graph_to_json(const PartiteGraph& g) {
  json j = base_doc("partite_graph");
  if (g.declared_m()) j["m"] = *g.declared_m();
  j["groups"] = g.groups();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

nlohmann::json weighted_to_json(const WeightedPartiteGraph& g) {
  json j = graph_to_json(g.base());
  j["kind"] = "weighted_partite_graph";
  json weights = json::array();
  for (const auto& [pair, w] : g.weights()) {
    weights.push_back(json::array({pair.first, pair.second, to_decimal(w)}));
  }
  j["weights"] = std::move(weights);
  return j;
}

nlohmann::json cnf_to_json(const CnfFormula& f) {
  json j = base_doc("cnf");
  j["variables"] = f.variable_count;
  json clauses = json::array();
  for (const Clause& c : f.clauses) {
    json clause = json::array();
    for (const Literal& lit : c.literals) {
      clause.push_back((lit.var + 1) * (lit.positive ? 1 : -1));
    }
    clauses.push_back(std::move(clause));
  }
  j["clauses"] = std::move(clauses);
  if (f.weights) {
    json ws = json::array();
    for (const BigInt& w : *f.weights) ws.push_back(to_decimal(w));
    j["weights"] = std::move(ws);
  }
  return j;
}

nlohmann::json coloring_to_json(const ColoringInstance& c) {
  json j = base_doc("coloring");
  j["vertices"] = c.vertex_count;
  j["colors"] = c.colors;
  json edges = json::array();
  for (auto [u, v] : c.edges) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

nlohmann::json line_instance_to_json(const LineArrangementInstance& inst) {
  json j = base_doc("line_instance");
  j["n"] = inst.n;
  if (inst.l) j["l"] = *inst.l;
  json allowed = json::object();
  for (const auto& [pair, points] : inst.allowed) {
    json ps = json::array();
    for (const RatPoint& p : points) {
      ps.push_back(json::array({to_fraction(p.x), to_fraction(p.y)}));
    }
    allowed[pair_key(pair.first, pair.second)] = std::move(ps);
  }
  j["allowed"] = std::move(allowed);
  return j;
}

nlohmann::json circle_instance_to_json(const LocalCircleInstance& inst) {
  json j = base_doc("circle_instance");
  j["n"] = inst.n;
  if (inst.l) j["l"] = *inst.l;
  json allowed = json::object();
  for (const auto& [pair, pairs] : inst.allowed) {
    json ps = json::array();
    for (const auto& [ai, aj] : pairs) ps.push_back(json::array({ai, aj}));
    allowed[pair_key(pair.first, pair.second)] = std::move(ps);
  }
  j["allowed"] = std::move(allowed);
  return j;
}

nlohmann::json lines_to_json(const std::vector<Line>& lines) {
  json j = base_doc("lines");
  json arr = json::array();
  for (const Line& l : lines) arr.push_back(json::array({l.a, l.b, l.c}));
  j["lines"] = std::move(arr);
  return j;
}

nlohmann::json orientations_to_json(const std::vector<Orientation>& orients) {
  json j = base_doc("orientations");
  json arr = json::array();
  for (const Orientation& o : orients) arr.push_back(o.rotation.m);
  j["orientations"] = std::move(arr);
  return j;
}

nlohmann::json assignment_to_json(const Assignment& a) {
  json j = base_doc("assignment");
  json picks = json::object();
  for (auto [gi, v] : a.picks) picks[std::to_string(gi)] = v;
  j["picks"] = std::move(picks);
  return j;
}

nlohmann::json truth_to_json(const std::vector<bool>& truth) {
  json j = base_doc("truth");
  j["values"] = truth;
  return j;
}

nlohmann::json outcome_to_json(const SolveOutcome& out) {
  json j = base_doc("solve_outcome");
  j["status"] = out.feasible ? "feasible" : "infeasible";
  if (out.witness) {
    json w = json::object();
    json picks = json::object();
    for (auto [gi, v] : out.witness->picks) picks[std::to_string(gi)] = v;
    w["picks"] = std::move(picks);
    j["witness"] = std::move(w);
  } else if (out.truth) {
    json w = json::object();
    w["values"] = *out.truth;
    j["witness"] = std::move(w);
  }
  if (out.objective) j["objective"] = to_decimal(*out.objective);
  return j;
}

nlohmann::json points_to_json(const GeneralPositionResult& points) {
  json j = base_doc("points");
  json ps = json::array();
  for (auto [g, h] : points.points) ps.push_back(json::array({g, h}));
  j["points"] = std::move(ps);
  j["scans"] = points.scans;
  json bounds = json::array();
  for (const BigInt& b : points.scan_bounds) bounds.push_back(to_decimal(b));
  j["scan_bounds"] = std::move(bounds);
  return j;
}

namespace {

GeneralPositionResult points_from_json(const json& j) {
  GeneralPositionResult r;
  for (const json& p : j.at("points")) {
    r.points.emplace_back(p.at(0).get<long long>(), p.at(1).get<long long>());
  }
  if (j.contains("scans")) {
    r.scans = j.at("scans").get<std::vector<long long>>();
  }
  if (j.contains("scan_bounds")) {
    for (const json& b : j.at("scan_bounds")) {
      r.scan_bounds.push_back(bigint_from_json(b));
    }
  }
  return r;
}

}  // namespace

Assignment assignment_from_json(const nlohmann::json& j) {
  Assignment a;
  for (const auto& [key, value] : j.at("picks").items()) {
    try {
      a.picks[std::stoi(key)] = value.get<VertexId>();
    } catch (const std::exception&) {
      fail(Errc::parse_error, "pick keys must be group indices");
    }
  }
  return a;
}

std::vector<bool> truth_from_json(const nlohmann::json& j) {
  std::vector<bool> truth;
  for (const json& v : j.at("values")) {
    if (v.is_boolean()) {
      truth.push_back(v.get<bool>());
    } else if (v.is_number_integer()) {
      truth.push_back(v.get<int>() != 0);
    } else {
      fail(Errc::parse_error, "truth values must be booleans or 0/1");
    }
  }
  return truth;
}

std::vector<Orientation> orientations_from_json(const nlohmann::json& j) {
  std::vector<Orientation> orients;
  const json& arr = j.is_array() ? j : j.at("orientations");
  for (const json& entry : arr) {
    if (!entry.is_array() || entry.size() != 9) {
      fail(Errc::parse_error,
           "orientations must be row-major arrays of 9 numbers");
    }
    Orientation o;
    for (int t = 0; t < 9; ++t) o.rotation.m[t] = entry[t].get<double>();
    if (!is_rotation(o.rotation)) {
      fail(Errc::invalid_argument,
           "orientation matrix is not a proper rotation");
    }
    orients.push_back(o);
  }
  return orients;
}

std::vector<Line> lines_from_json(const nlohmann::json& j) {
  std::vector<Line> lines;
  const json& arr = j.is_array() ? j : j.at("lines");
  for (const json& entry : arr) {
    if (!entry.is_array() || entry.size() != 3) {
      fail(Errc::parse_error, "lines must be [a,b,c] arrays");
    }
    lines.push_back(make_line(entry[0].get<double>(), entry[1].get<double>(),
                              entry[2].get<double>()));
  }
  return lines;
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("JSON parse failure: ") + e.what());
  }
  try {
    check_format_version(j);
    if (!j.contains("kind") || !j.at("kind").is_string()) {
      fail(Errc::parse_error, "document is missing its 'kind' field");
    }
    Document doc;
    doc.kind = j.at("kind").get<std::string>();
    if (doc.kind == "partite_graph" && j.contains("weights")) {
      doc.kind = "weighted_partite_graph";
    }
    if (doc.kind == "partite_graph") {
      doc.graph = graph_from_json(j);
    } else if (doc.kind == "weighted_partite_graph") {
      doc.weighted = weighted_from_json(j);
    } else if (doc.kind == "cnf") {
      doc.cnf = cnf_from_json(j);
    } else if (doc.kind == "coloring") {
      doc.coloring = coloring_from_json(j);
    } else if (doc.kind == "line_instance") {
      doc.line_instance = line_instance_from_json(j);
    } else if (doc.kind == "circle_instance") {
      doc.circle_instance = circle_instance_from_json(j);
    } else if (doc.kind == "lines") {
      doc.lines = lines_from_json(j);
    } else if (doc.kind == "orientations") {
      doc.orientations = orientations_from_json(j);
    } else if (doc.kind == "assignment") {
      doc.assignment = assignment_from_json(j);
    } else if (doc.kind == "truth") {
      doc.truth = truth_from_json(j);
    } else if (doc.kind == "solve_outcome") {
      doc.outcome = outcome_from_json(j);
    } else if (doc.kind == "points") {
      doc.points = points_from_json(j);
    } else {
      fail(Errc::parse_error, "unknown document kind '" + doc.kind + "'");
    }
    if (j.contains("ground_truth")) doc.ground_truth = j.at("ground_truth");
    if (j.contains("provenance")) doc.provenance = j.at("provenance");
    if (j.contains("mapping")) doc.mapping = j.at("mapping");
    return doc;
  } catch (const json::exception& e) {
    fail(Errc::parse_error, std::string("malformed document: ") + e.what());
  }
}

nlohmann::json document_to_json(const Document& doc) {
  json j;
  if (doc.graph) {
    j = graph_to_json(*doc.graph);
  } else if (doc.weighted) {
    j = weighted_to_json(*doc.weighted);
  } else if (doc.cnf) {
    j = cnf_to_json(*doc.cnf);
  } else if (doc.coloring) {
    j = coloring_to_json(*doc.coloring);
  } else if (doc.line_instance) {
    j = line_instance_to_json(*doc.line_instance);
  } else if (doc.circle_instance) {
    j = circle_instance_to_json(*doc.circle_instance);
  } else if (doc.lines) {
    j = lines_to_json(*doc.lines);
  } else if (doc.orientations) {
    j = orientations_to_json(*doc.orientations);
  } else if (doc.assignment) {
    j = assignment_to_json(*doc.assignment);
  } else if (doc.truth) {
    j = truth_to_json(*doc.truth);
  } else if (doc.outcome) {
    j = outcome_to_json(*doc.outcome);
  } else if (doc.points) {
    j = points_to_json(*doc.points);
  } else {
    fail(Errc::invalid_argument, "document holds no payload");
  }
  if (!doc.ground_truth.is_null()) j["ground_truth"] = doc.ground_truth;
  if (!doc.provenance.is_null()) j["provenance"] = doc.provenance;
  if (!doc.mapping.is_null()) j["mapping"] = doc.mapping;
  return j;
}

std::string dump_document(const Document& doc) {
  return document_to_json(doc).dump(2);
}

}  // namespace ors
