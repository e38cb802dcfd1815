#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ors/arrangement.hpp"
#include "ors/cnf.hpp"
#include "ors/general_position.hpp"
#include "ors/geometry.hpp"
#include "ors/outcome.hpp"
#include "ors/partite_graph.hpp"
#include "ors/reductions.hpp"

namespace ors {

inline constexpr int kFormatVersion = 1;

// A parsed instance or witness document. `kind` selects which optional is
// engaged. Planted documents carry their ground truth and provenance along
// as raw JSON so round-trips preserve them.
struct Document {
  std::string kind;
  std::optional<PartiteGraph> graph;
  std::optional<WeightedPartiteGraph> weighted;
  std::optional<CnfFormula> cnf;
  std::optional<ColoringInstance> coloring;
  std::optional<LineArrangementInstance> line_instance;
  std::optional<LocalCircleInstance> circle_instance;
  std::optional<std::vector<Line>> lines;
  std::optional<std::vector<Orientation>> orientations;
  std::optional<Assignment> assignment;
  std::optional<std::vector<bool>> truth;
  std::optional<SolveOutcome> outcome;
  std::optional<GeneralPositionResult> points;
  nlohmann::json ground_truth;  // null when absent
  nlohmann::json provenance;    // null when absent
  nlohmann::json mapping;       // witness pull-back info on reduce outputs
};

// Parses any known document kind; rejects unknown kinds and format_version
// majors other than kFormatVersion (a missing field is read as current).
Document parse_document(const std::string& text);
nlohmann::json document_to_json(const Document& doc);
std::string dump_document(const Document& doc);

// Per-type JSON builders (each returns a complete document object with
// format_version and kind).
nlohmann::json graph_to_json(const PartiteGraph& g);
nlohmann::json weighted_to_json(const WeightedPartiteGraph& g);
nlohmann::json cnf_to_json(const CnfFormula& f);
nlohmann::json coloring_to_json(const ColoringInstance& c);
nlohmann::json line_instance_to_json(const LineArrangementInstance& inst);
nlohmann::json circle_instance_to_json(const LocalCircleInstance& inst);
nlohmann::json lines_to_json(const std::vector<Line>& lines);
nlohmann::json orientations_to_json(const std::vector<Orientation>& orients);
nlohmann::json assignment_to_json(const Assignment& a);
nlohmann::json truth_to_json(const std::vector<bool>& truth);
nlohmann::json outcome_to_json(const SolveOutcome& out);
nlohmann::json points_to_json(const GeneralPositionResult& points);

// Inverse readers for embedded sub-objects (witnesses inside outcomes or
// ground_truth blocks).
Assignment assignment_from_json(const nlohmann::json& j);
std::vector<bool> truth_from_json(const nlohmann::json& j);
std::vector<Orientation> orientations_from_json(const nlohmann::json& j);
std::vector<Line> lines_from_json(const nlohmann::json& j);

}  // namespace ors
