#include "mstep/oracle.hpp"

#include <string>

#include "mstep/components.hpp"
#include "mstep/convergence.hpp"
#include "mstep/error.hpp"
#include "mstep/imprimitivity.hpp"
#include "mstep/limit.hpp"

namespace mstep {

SimulationResult simulate_limit(const BoolMatrix& a,
                                const SimulationOptions& options) {
  if (a.size() > options.size_cap)
    throw ResourceLimit("simulate_limit: order " + std::to_string(a.size()) +
                        " exceeds the oracle size cap " +
                        std::to_string(options.size_cap));
  const PowerTrace trace = trace_powers(a, options.memory_cap);
  SimulationResult result;
  result.cycle = trace.cycle;
  result.gamma_cycle.reserve(trace.cycle.period);
  for (std::size_t k = 0; k < trace.cycle.period; ++k)
    result.gamma_cycle.push_back(UndirectedGraph::from_adjacency(
        gamma(trace.powers[trace.cycle.index - 1 + k])));
  result.converged = true;
  for (const auto& g : result.gamma_cycle)
    if (g != result.gamma_cycle.front()) result.converged = false;
  if (result.converged) result.limit = result.gamma_cycle.front();
  return result;
}

namespace {

std::string describe_edges(const UndirectedGraph& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += "{" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}";
  }
  return out + "}";
}

std::vector<CheckOutcome> run_checks(const Digraph& d,
                                     const SimulationOptions& sim_options) {
  std::vector<CheckOutcome> checks;
  const ComponentChain chain = component_chain(d);
  const ImprimitivityData imp = imprimitivity(d, chain);
  const ConvergenceVerdict verdict = converges(d, chain, imp);
  const SimulationResult sim = simulate_limit(to_matrix(d), sim_options);

  checks.push_back({"verdict", verdict.converged == sim.converged,
                    std::string("analytic ") +
                        (verdict.converged ? "converges" : "diverges") +
                        ", simulated " +
                        (sim.converged ? "converges" : "diverges")});

  if (chain.all_nontrivial()) {
    const UndirectedGraph analytic = limit_graph(d, chain, imp);
    const bool limit_ok = sim.converged && analytic == *sim.limit;
    checks.push_back(
        {"limit", limit_ok,
         "analytic " + describe_edges(analytic) + ", simulated " +
             (sim.limit ? describe_edges(*sim.limit) : "none")});
    const bool condition = jbd_condition(d, chain, imp).holds;
    const bool cliques = sim.limit && union_of_cliques(*sim.limit);
    checks.push_back({"jbd", condition == cliques,
                      std::string("criterion ") + (condition ? "true" : "false") +
                          ", simulated limit is " +
                          (cliques ? "" : "not ") + "a union of cliques"});
  }
  return checks;
}

std::optional<std::string> first_failure(const std::vector<CheckOutcome>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return c.name;
  return std::nullopt;
}

bool still_fails(const Digraph& d, const std::string& check,
                 const SimulationOptions& sim_options) {
  try {
    for (const auto& c : run_checks(d, sim_options))
      if (c.name == check && !c.passed) return true;
  } catch (const NotLinearlyConnected&) {
  }
  return false;
}

}  // namespace

Digraph shrink_counterexample(const Digraph& d,
                              const std::function<bool(const Digraph&)>& fails) {
  Digraph current = d;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const Arc& arc : current.arcs()) {
      Digraph candidate = current.without_arc(arc);
      bool connected = true;
      try {
        component_chain(candidate);
      } catch (const NotLinearlyConnected&) {
        connected = false;
      }
      if (connected && fails(candidate)) {
        current = std::move(candidate);
        progress = true;
        break;
      }
    }
  }
  return current;
}

VerifyReport verify(const Digraph& d, const VerifyOptions& options) {
  VerifyReport report;
  report.checks = run_checks(d, options.simulation);
  report.failed_check = first_failure(report.checks);
  report.passed = !report.failed_check;
  if (report.passed) return report;

  if (options.shrink) {
    const std::string check = *report.failed_check;
    report.counterexample =
        shrink_counterexample(d, [&](const Digraph& candidate) {
          return still_fails(candidate, check, options.simulation);
        });
  } else {
    report.counterexample = d;
  }
  return report;
}

}  // namespace mstep
