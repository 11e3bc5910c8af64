#include "mstep/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mstep/components.hpp"
#include "mstep/convergence.hpp"
#include "mstep/competition.hpp"
#include "mstep/error.hpp"
#include "mstep/generator.hpp"
#include "mstep/imprimitivity.hpp"
#include "mstep/limit.hpp"
#include "mstep/oracle.hpp"
#include "mstep/skeleton.hpp"
#include "mstep/text_format.hpp"

namespace mstep::cli {

using json = nlohmann::ordered_json;

namespace {

std::string class_label(std::size_t component, std::size_t cls) {
  return std::to_string(component + 1) + "_" + std::to_string(cls + 1);
}

json one_based(const std::vector<Vertex>& vertices) {
  json out = json::array();
  for (Vertex v : vertices) out.push_back(v + 1);
  return out;
}

json edges_json(const UndirectedGraph& g) {
  json out = json::array();
  for (const auto& [u, v] : g.edges()) out.push_back({u + 1, v + 1});
  return out;
}

json residues_json(const ResidueSet& s) {
  json out = json::array();
  for (auto r : s.members()) out.push_back(r);
  return out;
}

void report_linear_failure(const NotLinearlyConnected& e, std::ostream& err) {
  err << "error: not linearly connected: " << e.what() << '\n';
}

std::string dot_undirected(const std::string& name, const UndirectedGraph& g) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v) out << "  " << v + 1 << ";\n";
  for (const auto& [u, v] : g.edges())
    out << "  " << u + 1 << " -- " << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_skeleton(const SkeletonGraph& sk) {
  std::ostringstream out;
  out << "graph cs_graph {\n";
  for (std::size_t p = 0; p < sk.eta(); ++p) {
    out << "  { rank=same;";
    for (std::size_t c = 0; c < sk.class_sizes[p]; ++c)
      out << " \"" << class_label(p, c) << "\";";
    out << " }\n";
  }
  for (std::size_t p = 0; p < sk.levels.size(); ++p)
    for (const auto& [i, j] : sk.levels[p])
      out << "  \"" << class_label(p, i) << "\" -- \"" << class_label(p + 1, j)
          << "\";\n";
  out << "}\n";
  return out.str();
}

bool read_input(const std::string& path, std::istream& in, std::string& text,
                std::ostream& err) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << path << '\n';
    return false;
  }
  text.assign(std::istreambuf_iterator<char>(file), {});
  return true;
}

}  // namespace

Range parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (s.empty() || pos != s.size() || s[0] == '-')
      throw PreconditionError("bad range \"" + text + "\"");
    return static_cast<std::size_t>(v);
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw PreconditionError("empty range \"" + text + "\"");
  return r;
}

int cmd_analyze(const std::string& text, const AnalyzeOptions& options,
                std::ostream& out, std::ostream& err) {
  std::optional<ParsedDigraph> parsed;
  std::optional<ComponentChain> chain;
  try {
    parsed = parse_digraph(text);
    chain = component_chain(parsed->digraph);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NotLinearlyConnected& e) {
    report_linear_failure(e, err);
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  const Digraph& d = parsed->digraph;
  const ImprimitivityData imp = imprimitivity(d, *chain);
  const ConvergenceVerdict verdict = converges(d, *chain, imp);

  json report;
  report["schema"] = 1;

  json arcs = json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.from + 1, a.to + 1});
  report["input"] = {
      {"format", parsed->format == InputFormat::Matrix ? "matrix" : "edge-list"},
      {"vertices", d.size()},
      {"arcs", std::move(arcs)}};

  json components = json::array();
  for (std::size_t p = 0; p < chain->eta(); ++p) {
    json classes = json::array();
    for (const auto& cls : imp.components[p].classes)
      classes.push_back(one_based(cls));
    components.push_back({{"index", p + 1},
                          {"vertices", one_based(chain->components[p])},
                          {"trivial", static_cast<bool>(chain->trivial[p])},
                          {"kappa", imp.kappa(p)},
                          {"classes", std::move(classes)}});
  }
  report["chain"] = {{"eta", chain->eta()},
                     {"components", std::move(components)}};

  json verdict_json = {{"converged", verdict.converged},
                       {"rule", std::string(to_string(verdict.rule))}};
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    verdict_json["witness"] = {{"component", w.component + 1},
                               {"classes", {w.class1 + 1, w.class2 + 1}},
                               {"excluded_residue", w.excluded},
                               {"union", residues_json(w.union_set)}};
  } else {
    verdict_json["witness"] = nullptr;
  }
  report["verdict"] = std::move(verdict_json);

  if (chain->all_nontrivial()) {
    const UndirectedGraph limit = limit_graph(d, *chain, imp);
    report["limit"] = {{"source", "analytic"}, {"edges", edges_json(limit)}};
    const JbdResult jbd = jbd_condition(d, *chain, imp);
    report["jbd"] = {{"source", "analytic"}, {"holds", jbd.holds}};
  } else if (options.simulate_fallback && verdict.converged) {
    try {
      const SimulationResult sim = simulate_limit(to_matrix(d));
      if (!sim.converged)
        throw InternalError("simulation disagrees with the convergence verdict");
      report["limit"] = {{"source", "simulated"},
                         {"edges", edges_json(*sim.limit)}};
      report["jbd"] = {{"source", "simulated"},
                       {"holds", union_of_cliques(*sim.limit)}};
    } catch (const ResourceLimit& e) {
      err << "warning: " << e.what() << '\n';
      report["limit"] = nullptr;
      report["jbd"] = nullptr;
    }
  } else {
    report["limit"] = nullptr;
    report["jbd"] = nullptr;
  }

  if (chain->all_nontrivial()) {
    const SkeletonGraph sk = cs_graph(d, *chain, imp);
    json levels = json::array();
    for (std::size_t p = 0; p < sk.levels.size(); ++p) {
      json edges = json::array();
      for (const auto& [i, j] : sk.levels[p])
        edges.push_back({class_label(p, i), class_label(p + 1, j)});
      levels.push_back({{"level", p + 1}, {"edges", std::move(edges)}});
    }
    report["skeleton"] = {{"levels", std::move(levels)}};
  } else {
    report["skeleton"] = nullptr;
  }

  out << report.dump(2) << '\n';
  return verdict.converged ? kExitOk : kExitDiverged;
}

int cmd_verify(const CampaignOptions& options, std::ostream& out,
               std::ostream& err) {
  if (options.eta.lo == 0 || options.sizes.lo == 0) {
    err << "error: eta and component sizes must be at least 1\n";
    return kExitInputError;
  }
  std::size_t passed = 0;
  std::optional<std::string> first_failure;
  for (std::size_t k = 0; k < options.count; ++k) {
    const std::uint64_t seed = options.seed + k;
    std::mt19937_64 pick(seed);
    InstanceSpec spec;
    spec.eta = options.eta.lo +
               pick() % (options.eta.hi - options.eta.lo + 1);
    spec.min_size = options.sizes.lo;
    spec.max_size = options.sizes.hi;
    spec.allow_trivial.assign(spec.eta, options.allow_trivial);
    spec.max_vertices = options.max_vertices;
    spec.seed = seed;

    Digraph d(1);
    try {
      d = random_instance(spec);
    } catch (const PreconditionError& e) {
      err << "error: infeasible instance spec: " << e.what() << '\n';
      return kExitInputError;
    }

    std::ostringstream failure;
    try {
      VerifyOptions vopts;
      vopts.shrink = options.shrink;
      const VerifyReport report = verify(d, vopts);
      if (report.passed) {
        ++passed;
        continue;
      }
      std::string detail;
      for (const auto& c : report.checks)
        if (c.name == *report.failed_check) detail = c.detail;
      failure << "first failure: instance " << k << " (seed " << seed
              << "), check " << *report.failed_check << ": " << detail << '\n'
              << "counterexample:\n"
              << format_edge_list(*report.counterexample);
    } catch (const Error& e) {
      failure << "first failure: instance " << k << " (seed " << seed
              << "): " << e.what() << '\n'
              << "instance:\n"
              << format_edge_list(d);
    }
    if (!first_failure) first_failure = failure.str();
  }
  out << "verify: " << passed << "/" << options.count << " passed (seed "
      << options.seed << ", eta " << options.eta.lo << ".." << options.eta.hi
      << ", sizes " << options.sizes.lo << ".." << options.sizes.hi
      << (options.allow_trivial ? ", trivial allowed" : "") << ")\n";
  if (first_failure) out << *first_failure;
  return passed == options.count ? kExitOk : kExitFailed;
}

int cmd_export(const std::string& text, const std::string& what,
               std::size_t m, std::ostream& out, std::ostream& err) {
  try {
    const Digraph d = parse_digraph(text).digraph;
    if (what == "competition") {
      if (m == 0) throw PreconditionError("m must be at least 1");
      out << dot_undirected("competition", m_step_competition(d, m));
      return kExitOk;
    }
    const ComponentChain chain = component_chain(d);
    const ImprimitivityData imp = imprimitivity(d, chain);
    if (what == "limit") {
      out << dot_undirected("limit", limit_graph(d, chain, imp));
    } else if (what == "cs-graph") {
      out << dot_skeleton(cs_graph(d, chain, imp));
    } else {
      err << "error: unknown export target \"" << what << "\"\n";
      return kExitInputError;
    }
    return kExitOk;
  } catch (const NotLinearlyConnected& e) {
    report_linear_failure(e, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

int cmd_generate(const GenerateOptions& options, std::ostream& out,
                 std::ostream& err) {
  InstanceSpec spec;
  spec.eta = options.eta;
  spec.min_size = options.sizes.lo;
  spec.max_size = options.sizes.hi;
  spec.allow_trivial.assign(options.eta, options.allow_trivial);
  spec.max_vertices = options.max_vertices;
  spec.seed = options.seed;
  try {
    out << format_edge_list(random_instance(spec));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Convergence of m-step competition graphs of linearly "
               "connected digraphs"};
  app.name(args.empty() ? "mstep" : args.front());
  app.require_subcommand(1);

  std::string input;
  AnalyzeOptions analyze_options;
  auto* analyze = app.add_subcommand("analyze", "JSON report for one digraph");
  analyze->add_option("input", input, "matrix or edge-list file, - for stdin")
      ->required();
  analyze->add_flag("--simulate-fallback", analyze_options.simulate_fallback,
                    "simulate the limit when the theory does not give it");

  CampaignOptions campaign;
  std::string eta_text = "1..4";
  std::string sizes_text = "2..5";
  auto* verify_cmd =
      app.add_subcommand("verify", "compare theory and simulation on "
                                   "generated instances");
  verify_cmd->add_option("--count", campaign.count)->capture_default_str();
  verify_cmd->add_option("--seed", campaign.seed)->capture_default_str();
  verify_cmd->add_option("--eta", eta_text, "range a..b")
      ->capture_default_str();
  verify_cmd->add_option("--sizes", sizes_text, "range a..b")
      ->capture_default_str();
  verify_cmd->add_flag("--allow-trivial", campaign.allow_trivial);
  verify_cmd->add_option("--max-vertices", campaign.max_vertices,
                         "0 for no bound")
      ->capture_default_str();
  bool no_shrink = false;
  verify_cmd->add_flag("--no-shrink", no_shrink);

  std::vector<std::string> what;
  auto* export_cmd = app.add_subcommand("export", "DOT output");
  export_cmd->add_option("input", input)->required();
  export_cmd
      ->add_option("--what", what, "cs-graph | limit | competition [m]")
      ->required()
      ->expected(1, 2);

  GenerateOptions gen;
  std::string gen_sizes = "2..5";
  auto* generate =
      app.add_subcommand("generate", "random linearly connected digraph");
  generate->add_option("--eta", gen.eta)->capture_default_str();
  generate->add_option("--sizes", gen_sizes)->capture_default_str();
  generate->add_flag("--allow-trivial", gen.allow_trivial);
  generate->add_option("--max-vertices", gen.max_vertices)
      ->capture_default_str();
  generate->add_option("--seed", gen.seed)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*analyze || *export_cmd) {
      std::string text;
      if (!read_input(input, in, text, err)) return kExitInputError;
      if (*analyze) return cmd_analyze(text, analyze_options, out, err);
      std::size_t m = 1;
      if (what.size() == 2) {
        if (what[0] != "competition") {
          err << "error: only competition takes a step count\n";
          return kExitInputError;
        }
        m = parse_range(what[1]).lo;
      }
      return cmd_export(text, what[0], m, out, err);
    }
    if (*verify_cmd) {
      campaign.eta = parse_range(eta_text);
      campaign.sizes = parse_range(sizes_text);
      campaign.shrink = !no_shrink;
      return cmd_verify(campaign, out, err);
    }
    gen.sizes = parse_range(gen_sizes);
    return cmd_generate(gen, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace mstep::cli
