#pragma once

#include <string>
#include <vector>

#include "coxfc/coxeter_matrix.hpp"
#include "coxfc/fc_classifier.hpp"
#include "coxfc/root_engine.hpp"

namespace coxfc {

// JSON-shaped graph file: {"nodes": [...], "edges": [{"u","v","m"}...]},
// with m an integer >= 2 or the string "inf".  Unlisted pairs default to 2;
// explicit m=2 edges are accepted on input and normalized away.
struct GraphEdge {
  std::string u, v;
  Label m = Label::finite(2);
};

struct GraphFile {
  std::vector<std::string> nodes;
  std::vector<GraphEdge> edges;
};

GraphFile parse_graph_file(const std::string& text);  // InputError
std::string serialize_graph_file(const GraphFile& g); // canonical form

CoxeterMatrix matrix_from_graph_file(const GraphFile& g);  // validates
GraphFile graph_file_from_matrix(const CoxeterMatrix& m);  // canonical form

// DOT rendering: odd edges solid, even edges dashed, infinite edges bold;
// all edges carry their label.  Output is stable under re-runs.
std::string export_dot(const CoxeterMatrix& m);

struct AnalyzeOptions {
  bool with_oracle = false;
  unsigned max_length = kDefaultMaxLength;
  std::size_t element_cap = kDefaultElementCap;
};

struct OracleComparison {
  Node node = 0;
  std::size_t oracle_count = 0;
  bool complete = true;
  // MATCH: oracle equals the predicted visible subgroup (or, for a
  // not-visible prediction, no visible subgroup matches the oracle set).
  // SUBSET: predicted elements all present but the oracle has not yet
  // shrunk to them.  MISMATCH: the prediction is contradicted.
  std::string status;
};

struct AnalysisReport {
  std::vector<NodeSet> odd_comps;
  std::vector<NodeSet> even_closures;  // parallel to odd_comps
  std::vector<FcResult> fc;            // per node
  RigidityReport rigidity;
  std::vector<OracleComparison> oracle;  // filled when requested
};

AnalysisReport analyze(const CoxeterMatrix& m, const AnalyzeOptions& opts = {});

// Compares the classifier prediction for one node against the brute-force
// oracle.  Requires engine-supported labels.
OracleComparison compare_with_oracle(const CoxeterMatrix& m, Node a,
                                     unsigned max_length,
                                     std::size_t element_cap);

std::string report_to_json(const AnalysisReport& rep, const CoxeterMatrix& m);
std::string report_to_text(const AnalysisReport& rep, const CoxeterMatrix& m);

}  // namespace coxfc
