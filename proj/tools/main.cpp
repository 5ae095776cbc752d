#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coxfc/graph_io.hpp"

namespace {

using namespace coxfc;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CoxeterMatrix load_matrix(const std::string& path) {
  return matrix_from_graph_file(parse_graph_file(read_file(path)));
}

int run(int argc, char** argv) {
  CLI::App app{"finite continuations of reflections in Coxeter groups"};
  app.require_subcommand(1);

  std::string file;
  std::string node_name;
  std::string subset_arg;
  std::string report_mode = "human";
  unsigned max_length = kDefaultMaxLength;
  std::size_t element_cap = kDefaultElementCap;
  bool with_oracle = false;

  auto add_common = [&](CLI::App* cmd, bool limits) {
    cmd->add_option("file", file, "graph file (JSON)")->required();
    cmd->add_option("--report", report_mode, "output format")
        ->check(CLI::IsMember({"human", "machine"}));
    if (limits) {
      cmd->add_option("--max-length", max_length, "search length bound");
      cmd->add_option("--element-cap", element_cap, "enumeration element cap");
    }
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full per-node report");
  add_common(analyze_cmd, true);
  analyze_cmd->add_flag("--oracle", with_oracle,
                        "also run the brute-force oracle per node");

  CLI::App* fc_cmd = app.add_subcommand("fc", "finite continuation of one node");
  add_common(fc_cmd, false);
  fc_cmd->add_option("--node", node_name, "node name")->required();

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "finite-type classification of a subset");
  add_common(classify_cmd, false);
  classify_cmd->add_option("--subset", subset_arg,
                           "comma-separated node names (default: all)");

  CLI::App* rigidity_cmd = app.add_subcommand("rigidity", "rigidity report");
  add_common(rigidity_cmd, false);

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-fc", "compare the classifier against the brute-force oracle");
  add_common(oracle_cmd, true);
  oracle_cmd->add_option("--node", node_name, "node name")->required();

  CLI::App* dot_cmd = app.add_subcommand("export-dot", "render the graph as DOT");
  dot_cmd->add_option("file", file, "graph file (JSON)")->required();

  CLI11_PARSE(app, argc, argv);
  const bool machine = report_mode == "machine";

  if (analyze_cmd->parsed()) {
    CoxeterMatrix m = load_matrix(file);
    AnalyzeOptions opts;
    opts.with_oracle = with_oracle;
    opts.max_length = max_length;
    opts.element_cap = element_cap;
    AnalysisReport rep = analyze(m, opts);
    std::cout << (machine ? report_to_json(rep, m) : report_to_text(rep, m));
    for (const auto& cmp : rep.oracle)
      if (!cmp.complete) return 2;
    return 0;
  }

  if (fc_cmd->parsed()) {
    CoxeterMatrix m = load_matrix(file);
    Node a = m.index_of(node_name);
    AnalysisReport rep;
    rep.odd_comps = odd_components(m);
    for (const NodeSet& M : rep.odd_comps)
      rep.even_closures.push_back(even_closure(m, M));
    for (Node x = 0; x < m.rank(); ++x)
      rep.fc.push_back(finite_continuation(m, x));
    rep.rigidity = rigidity_report(m);
    if (machine) {
      std::cout << report_to_json(rep, m);
    } else {
      const FcResult& fc = rep.fc[a];
      std::cout << "FC(r_" << node_name << "): ";
      if (fc.visible)
        std::cout << "visible, J = " << m.set_str(fc.J) << "\n";
      else
        std::cout << "not visible\n";
    }
    return 0;
  }

  if (classify_cmd->parsed()) {
    CoxeterMatrix m = load_matrix(file);
    NodeSet subset;
    if (subset_arg.empty()) {
      subset = NodeSet::full(m.rank());
    } else {
      std::stringstream ss(subset_arg);
      std::string name;
      while (std::getline(ss, name, ',')) subset.insert(m.index_of(name));
    }
    bool spherical = is_spherical(m, subset);
    auto comps = coxeter_components(m, subset);
    if (machine) {
      std::ostringstream os;
      os << "{\n  \"spherical\": " << (spherical ? "true" : "false")
         << ",\n  \"components\": [";
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) os << ", ";
        os << "{\"members\": " << m.set_str(comps[i]) << ", \"type\": \""
           << classify_connected(m, comps[i]).name() << "\"}";
      }
      os << "],\n  \"minus_one_type\": "
         << (is_minus_one_type(m, subset) ? "true" : "false") << "\n}\n";
      std::cout << os.str();
    } else {
      std::cout << "subset " << m.set_str(subset) << ": "
                << (spherical ? "spherical" : "not spherical") << "\n";
      for (const NodeSet& c : comps)
        std::cout << "  " << m.set_str(c) << ": "
                  << classify_connected(m, c).name() << "\n";
      std::cout << "(-1)-type: " << (is_minus_one_type(m, subset) ? "yes" : "no")
                << "\n";
    }
    return 0;
  }

  if (rigidity_cmd->parsed()) {
    CoxeterMatrix m = load_matrix(file);
    AnalysisReport rep;
    rep.odd_comps = odd_components(m);
    for (const NodeSet& M : rep.odd_comps)
      rep.even_closures.push_back(even_closure(m, M));
    for (Node x = 0; x < m.rank(); ++x)
      rep.fc.push_back(finite_continuation(m, x));
    rep.rigidity = rigidity_report(m);
    std::cout << (machine ? report_to_json(rep, m) : report_to_text(rep, m));
    return 0;
  }

  if (oracle_cmd->parsed()) {
    CoxeterMatrix m = load_matrix(file);
    Node a = m.index_of(node_name);
    FcResult fc = finite_continuation(m, a);
    OracleComparison cmp = compare_with_oracle(m, a, max_length, element_cap);
    std::cout << "predicted: ";
    if (fc.visible)
      std::cout << "visible, J = " << m.set_str(fc.J);
    else
      std::cout << "not visible";
    std::cout << "\noracle: " << cmp.oracle_count << " elements";
    if (!cmp.complete) std::cout << " (partial: element cap reached)";
    std::cout << "\nstatus: " << cmp.status << "\n";
    return cmp.complete ? 0 : 2;
  }

  if (dot_cmd->parsed()) {
    CoxeterMatrix m = load_matrix(file);
    std::cout << export_dot(m);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const coxfc::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const coxfc::DepthExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const coxfc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
