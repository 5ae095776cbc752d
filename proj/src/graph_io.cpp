#include "coxfc/graph_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace coxfc {

namespace {

using ordered_json = nlohmann::ordered_json;

Label parse_label_field(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return Label::infinity();
    throw InputError(where + ": expected an integer >= 2 or \"inf\"");
  }
  if (v.is_number_integer()) {
    long long n = v.get<long long>();
    if (n < 2) throw InputError(where + ": edge label must be >= 2");
    return Label::finite(static_cast<unsigned>(n));
  }
  throw InputError(where + ": expected an integer >= 2 or \"inf\"");
}

std::string case_name(FcCase c) {
  switch (c) {
    case FcCase::A: return "A";
    case FcCase::B: return "B";
    case FcCase::C: return "C";
    case FcCase::D: return "D";
  }
  return "?";
}

}  // namespace

GraphFile parse_graph_file(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
    throw InputError("graph file must be an object with a \"nodes\" array");
  GraphFile g;
  for (std::size_t i = 0; i < j["nodes"].size(); ++i) {
    const auto& n = j["nodes"][i];
    if (!n.is_string())
      throw InputError("nodes[" + std::to_string(i) + "]: expected a string");
    g.nodes.push_back(n.get<std::string>());
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
      const auto& e = j["edges"][i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!e.is_object() || !e.contains("u") || !e.contains("v") ||
          !e.contains("m"))
        throw InputError(where + ": expected an object with u, v and m");
      if (!e["u"].is_string() || !e["v"].is_string())
        throw InputError(where + ": u and v must be node names");
      GraphEdge edge;
      edge.u = e["u"].get<std::string>();
      edge.v = e["v"].get<std::string>();
      edge.m = parse_label_field(e["m"], where + ".m");
      g.edges.push_back(std::move(edge));
    }
  }
  return g;
}

CoxeterMatrix matrix_from_graph_file(const GraphFile& g) {
  CoxeterMatrix probe = CoxeterMatrix::from_edges(g.nodes, {});
  std::vector<CoxeterMatrix::EdgeSpec> edges;
  for (const auto& e : g.edges) {
    CoxeterMatrix::EdgeSpec spec{probe.index_of(e.u), probe.index_of(e.v), e.m};
    edges.push_back(spec);
  }
  CoxeterMatrix m = CoxeterMatrix::from_edges(g.nodes, edges);
  validate(m);
  return m;
}

GraphFile graph_file_from_matrix(const CoxeterMatrix& m) {
  GraphFile g;
  g.nodes = m.node_names();
  for (Node a = 0; a < m.rank(); ++a) {
    for (Node b = a + 1; b < m.rank(); ++b) {
      Label l = m.label(a, b);
      if (!l.is_infinite() && l.value() == 2) continue;  // normalized away
      g.edges.push_back(GraphEdge{m.name_of(a), m.name_of(b), l});
    }
  }
  return g;
}

std::string serialize_graph_file(const GraphFile& g) {
  ordered_json j;
  j["nodes"] = g.nodes;
  j["edges"] = ordered_json::array();
  for (const auto& e : g.edges) {
    ordered_json je;
    je["u"] = e.u;
    je["v"] = e.v;
    if (e.m.is_infinite())
      je["m"] = "inf";
    else
      je["m"] = e.m.value();
    j["edges"].push_back(je);
  }
  return j.dump(2) + "\n";
}

std::string export_dot(const CoxeterMatrix& m) {
  std::ostringstream os;
  os << "graph coxeter {\n";
  os << "  node [shape=circle];\n";
  for (Node a = 0; a < m.rank(); ++a) os << "  \"" << m.name_of(a) << "\";\n";
  for (Node a = 0; a < m.rank(); ++a) {
    for (Node b = a + 1; b < m.rank(); ++b) {
      Label l = m.label(a, b);
      if (!l.is_infinite() && l.value() == 2) continue;
      os << "  \"" << m.name_of(a) << "\" -- \"" << m.name_of(b) << "\"";
      os << " [label=\"" << l.str() << "\"";
      if (l.is_infinite())
        os << ", style=bold";
      else if (l.is_even())
        os << ", style=dashed";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

OracleComparison compare_with_oracle(const CoxeterMatrix& m, Node a,
                                     unsigned max_length,
                                     std::size_t element_cap) {
  OracleComparison cmp;
  cmp.node = a;
  RootEngine engine(m);
  FcResult fc = finite_continuation(m, a);
  OracleFcOutcome oracle = engine.oracle_fc_outcome(a, max_length, element_cap);
  cmp.oracle_count = oracle.elements.size();
  cmp.complete = oracle.complete;

  auto subgroup_elements = [&](const NodeSet& J) {
    std::vector<GroupElement> elems;
    Enumeration e = engine.enumerate_subgroup(J, ~0u, element_cap);
    for (const auto& item : e.items()) elems.push_back(item.g);
    std::sort(elems.begin(), elems.end(), canonical_less);
    return elems;
  };

  if (fc.visible) {
    std::vector<GroupElement> predicted = subgroup_elements(fc.J);
    if (predicted == oracle.elements) {
      cmp.status = "MATCH";
    } else {
      bool subset = std::includes(oracle.elements.begin(), oracle.elements.end(),
                                  predicted.begin(), predicted.end(),
                                  canonical_less);
      cmp.status = subset ? "SUBSET" : "MISMATCH";
    }
  } else {
    // Not visible: no spherical K may reproduce the oracle set exactly.
    bool some_visible_matches = false;
    for (const NodeSet& K : all_spherical_subsets(m)) {
      if (subgroup_elements(K) == oracle.elements) {
        some_visible_matches = true;
        break;
      }
    }
    cmp.status = some_visible_matches ? "MISMATCH" : "MATCH";
  }
  return cmp;
}

AnalysisReport analyze(const CoxeterMatrix& m, const AnalyzeOptions& opts) {
  AnalysisReport rep;
  rep.odd_comps = odd_components(m);
  for (const NodeSet& M : rep.odd_comps)
    rep.even_closures.push_back(even_closure(m, M));
  for (Node a = 0; a < m.rank(); ++a) rep.fc.push_back(finite_continuation(m, a));
  rep.rigidity = rigidity_report(m);
  if (opts.with_oracle) {
    for (Node a = 0; a < m.rank(); ++a)
      rep.oracle.push_back(
          compare_with_oracle(m, a, opts.max_length, opts.element_cap));
  }
  return rep;
}

namespace {

ordered_json set_to_json(const NodeSet& s, const CoxeterMatrix& m) {
  ordered_json arr = ordered_json::array();
  for (Node a : s) arr.push_back(m.name_of(a));
  return arr;
}

ordered_json fc_to_json(const FcResult& fc, const CoxeterMatrix& m) {
  ordered_json j;
  j["visible"] = fc.visible;
  if (fc.visible) j["J"] = set_to_json(fc.J, m);
  j["case"] = case_name(fc.case_tag);
  if (fc.focus) {
    j["focus"] = ordered_json::array(
        {m.name_of(fc.focus->a), m.name_of(fc.focus->b)});
  }
  if (fc.half_focus) {
    j["half_focus"] = ordered_json::array(
        {m.name_of(fc.half_focus->first), m.name_of(fc.half_focus->second)});
  }
  if (fc.case_tag == FcCase::B) {
    ordered_json c3 = ordered_json::array();
    for (Node b : fc.c3) c3.push_back(m.name_of(b));
    j["c3_neighbours"] = c3;
  }
  return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep, const CoxeterMatrix& m) {
  ordered_json j;
  j["nodes"] = ordered_json::array();
  for (Node a = 0; a < m.rank(); ++a) j["nodes"].push_back(m.name_of(a));

  j["odd_components"] = ordered_json::array();
  for (std::size_t i = 0; i < rep.odd_comps.size(); ++i) {
    ordered_json c;
    c["members"] = set_to_json(rep.odd_comps[i], m);
    c["even_closure"] = set_to_json(rep.even_closures[i], m);
    j["odd_components"].push_back(c);
  }

  j["fc"] = ordered_json::array();
  for (Node a = 0; a < m.rank(); ++a) {
    ordered_json e = fc_to_json(rep.fc[a], m);
    ordered_json row;
    row["node"] = m.name_of(a);
    for (auto& [k, v] : e.items()) row[k] = v;
    j["fc"].push_back(row);
  }

  ordered_json r;
  r["irreducible"] = rep.rigidity.irreducible;
  r["two_spherical"] = rep.rigidity.two_spherical;
  r["non_spherical"] = rep.rigidity.non_spherical;
  r["finite_rank"] = rep.rigidity.finite_rank;
  r["verdict"] = rep.rigidity.verdict == RigidityVerdict::ReflectionsDetermined
                     ? "ReflectionsDetermined"
                     : "NotApplicable";
  r["fc_trivial"] = rep.rigidity.fc_trivial;
  j["rigidity"] = r;

  if (!rep.oracle.empty()) {
    j["oracle"] = ordered_json::array();
    for (const auto& cmp : rep.oracle) {
      ordered_json o;
      o["node"] = m.name_of(cmp.node);
      o["oracle_count"] = cmp.oracle_count;
      o["complete"] = cmp.complete;
      o["status"] = cmp.status;
      j["oracle"].push_back(o);
    }
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& rep, const CoxeterMatrix& m) {
  std::ostringstream os;
  os << "rank " << m.rank() << ", " << rep.odd_comps.size()
     << " odd component(s)\n";
  for (std::size_t i = 0; i < rep.odd_comps.size(); ++i) {
    os << "  M" << i + 1 << " = " << m.set_str(rep.odd_comps[i])
       << ", Even = " << m.set_str(rep.even_closures[i]) << "\n";
  }
  os << "finite continuations:\n";
  for (Node a = 0; a < m.rank(); ++a) {
    const FcResult& fc = rep.fc[a];
    os << "  FC(r_" << m.name_of(a) << "): case " << case_name(fc.case_tag)
       << ", ";
    if (fc.visible)
      os << "visible, J = " << m.set_str(fc.J);
    else
      os << "not visible";
    if (fc.focus)
      os << "  [focus (" << m.name_of(fc.focus->a) << ","
         << m.name_of(fc.focus->b) << ")]";
    if (fc.half_focus)
      os << "  [half-focus {" << m.name_of(fc.half_focus->first) << ","
         << m.name_of(fc.half_focus->second) << "}]";
    if (fc.case_tag == FcCase::B && !fc.c3.empty()) {
      os << "  [C3-neighbours:";
      for (Node b : fc.c3) os << " " << m.name_of(b);
      os << "]";
    }
    os << "\n";
  }
  os << "rigidity: ";
  if (rep.rigidity.verdict == RigidityVerdict::ReflectionsDetermined) {
    os << "ReflectionsDetermined (irreducible, non-spherical, 2-spherical; "
          "every FC is trivial; the step to strong rigidity uses external "
          "classification results)\n";
  } else {
    os << "NotApplicable (";
    bool first = true;
    auto flag = [&](bool ok, const char* name) {
      if (ok) return;
      if (!first) os << ", ";
      os << name;
      first = false;
    };
    flag(rep.rigidity.irreducible, "not irreducible");
    flag(rep.rigidity.two_spherical, "contains an infinite label");
    flag(rep.rigidity.non_spherical, "group is finite");
    os << ")\n";
  }
  for (const auto& cmp : rep.oracle) {
    os << "oracle r_" << m.name_of(cmp.node) << ": " << cmp.oracle_count
       << " elements, " << cmp.status;
    if (!cmp.complete) os << " (partial: element cap reached)";
    os << "\n";
  }
  return os.str();
}

}  // namespace coxfc
