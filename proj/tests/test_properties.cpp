// Randomised invariants. Each analytic answer is compared with the
// power-cycle simulation or with brute-force walk data.

#include <gtest/gtest.h>

#include <numeric>

#include "mstep/components.hpp"
#include "mstep/convergence.hpp"
#include "mstep/generator.hpp"
#include "mstep/imprimitivity.hpp"
#include "mstep/limit.hpp"
#include "mstep/oracle.hpp"
#include "mstep/skeleton.hpp"
#include "support/oracles.hpp"

namespace mstep {
namespace {

Digraph instance(std::uint64_t seed, std::size_t eta, bool trivial) {
  InstanceSpec spec;
  spec.eta = eta;
  spec.min_size = 2;
  spec.max_size = 5;
  spec.allow_trivial.assign(eta, trivial);
  spec.max_vertices = 16;
  spec.seed = seed;
  return random_instance(spec);
}

TEST(Properties, VerdictMatchesSimulation) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Digraph d = instance(seed, 1 + seed % 4, true);
    ASSERT_EQ(converges(d).converged, simulate_limit(to_matrix(d)).converged)
        << "seed " << seed;
  }
}

TEST(Properties, VerdictMatchesSimulationWithSingleTrailingVertex) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    InstanceSpec spec;
    spec.eta = 2 + seed % 3;
    spec.allow_trivial.assign(spec.eta, false);
    spec.allow_trivial.back() = true;
    spec.trivial_probability = 1.0;
    spec.interface_probability = 0.5;
    spec.wild_chord_probability = 0.0;
    spec.seed = seed;
    const Digraph d = random_instance(spec);
    ASSERT_EQ(converges(d).converged, simulate_limit(to_matrix(d)).converged)
        << "seed " << seed;
  }
}

TEST(Properties, LimitAndJbdMatchSimulation) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Digraph d = instance(seed, 1 + seed % 4, false);
    const ComponentChain chain = component_chain(d);
    const ImprimitivityData imp = imprimitivity(d, chain);
    const SimulationResult sim = simulate_limit(to_matrix(d));
    ASSERT_TRUE(sim.converged) << "seed " << seed;
    ASSERT_EQ(limit_graph(d, chain, imp), *sim.limit) << "seed " << seed;
    ASSERT_EQ(jbd_condition(d, chain, imp).holds, union_of_cliques(*sim.limit))
        << "seed " << seed;
  }
}

// Without sinks every C(D^m) sequence converges.
TEST(Properties, NoSinkAlwaysConverges) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Digraph d = instance(seed, 1 + seed % 4, false);
    ASSERT_TRUE(converges(d).converged);
  }
}

// Vertices of one class are adjacent in the limit and have equal neighbourhoods.
TEST(Properties, SameClassVerticesAreTwins) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Digraph d = instance(seed, 1 + seed % 3, false);
    const ComponentChain chain = component_chain(d);
    const ImprimitivityData imp = imprimitivity(d, chain);
    const UndirectedGraph g = limit_graph(d, chain, imp);
    for (std::size_t p = 0; p < chain.eta(); ++p)
      for (const auto& cls : imp.components[p].classes)
        for (std::size_t a = 1; a < cls.size(); ++a) {
          ASSERT_TRUE(g.has_edge(cls[0], cls[a]));
          for (Vertex w = 0; w < d.size(); ++w)
            if (w != cls[0] && w != cls[a])
              ASSERT_EQ(g.has_edge(cls[0], w), g.has_edge(cls[a], w));
        }
  }
}

TEST(Properties, RelabellingClassesKeepsAnswers) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph d = instance(seed, 1 + seed % 4, seed % 2 == 0);
    const ComponentChain chain = component_chain(d);
    std::vector<Vertex> roots;
    for (const auto& comp : chain.components) roots.push_back(comp.back());
    const ImprimitivityData base = imprimitivity(d, chain);
    const ImprimitivityData rotated = imprimitivity(d, chain, roots);
    ASSERT_EQ(converges(d, chain, base).converged,
              converges(d, chain, rotated).converged);
    if (chain.all_nontrivial()) {
      ASSERT_EQ(limit_graph(d, chain, base), limit_graph(d, chain, rotated));
      ASSERT_EQ(jbd_condition(d, chain, base).holds,
                jbd_condition(d, chain, rotated).holds);
    }
  }
}

// (i, j) is a skeleton edge iff some vertex of class i in D_1 has a walk of
// length 2 s kappa1 kappa2 into class j of D_2 for all large s.
TEST(Properties, SkeletonEdgesAreLongWalks) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph d = instance(seed, 2, false);
    const ComponentChain chain = component_chain(d);
    const ImprimitivityData imp = imprimitivity(d, chain);
    const std::size_t k1 = imp.kappa(0), k2 = imp.kappa(1);
    const PowerTrace trace = trace_powers(to_matrix(d));
    const std::size_t step = 2 * k1 * k2;
    const std::size_t s = (trace.cycle.index + step - 1) / step;
    std::set<ClassPair> walks;
    for (Vertex u : chain.components[0])
      for (Vertex v : chain.components[1])
        if (trace.power(std::max<std::size_t>(s, 1) * step).get(u, v))
          walks.insert({imp.class_of[u], imp.class_of[v]});
    ASSERT_EQ(b_graph(k1, k2, interface_pairs(d, chain, imp, 0), false), walks)
        << "seed " << seed;
  }
}

// For large m divisible by every kappa, x reaches z by a walk of length m iff
// the class of z is on an ascending skeleton path from the class of x.
TEST(Properties, LongWalksFollowAscendingPaths) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Digraph d = instance(seed, 3, false);
    const ComponentChain chain = component_chain(d);
    const ImprimitivityData imp = imprimitivity(d, chain);
    const SkeletonGraph sk = cs_graph(d, chain, imp);
    const PowerTrace trace = trace_powers(to_matrix(d));
    std::size_t period = 1;
    for (std::size_t p = 0; p < chain.eta(); ++p)
      period = std::lcm(period, imp.kappa(p));
    std::size_t m = trace.cycle.index;
    while (m % period != 0) ++m;
    const BoolMatrix& power = trace.power(m);
    for (Vertex x = 0; x < d.size(); ++x) {
      const std::size_t p = chain.component_of[x];
      const AscendingReach reach = ascending_reach(sk, p, imp.class_of[x]);
      for (std::size_t q = p; q < chain.eta(); ++q)
        for (Vertex z : chain.components[q]) {
          ASSERT_EQ(power.get(x, z), reach.at(q).contains(
                                         static_cast<std::int64_t>(imp.class_of[z])))
              << "seed " << seed << " x " << x << " z " << z;
        }
    }
  }
}

TEST(Properties, IrreducibleLimitIsClassCliques) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const Digraph d = instance(seed, 1, false);
    const ComponentChain chain = component_chain(d);
    const ImprimitivityData imp = imprimitivity(d, chain);
    const SimulationResult sim = simulate_limit(to_matrix(d));
    ASSERT_TRUE(sim.converged);
    for (Vertex u = 0; u < d.size(); ++u)
      for (Vertex v = u + 1; v < d.size(); ++v)
        ASSERT_EQ(sim.limit->has_edge(u, v), imp.class_of[u] == imp.class_of[v]);
  }
}

TEST(Properties, VerifyCampaignPasses) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const VerifyReport r = verify(instance(seed, 1 + seed % 4, seed % 3 == 0));
    ASSERT_TRUE(r.passed) << "seed " << seed;
  }
}

}  // namespace
}  // namespace mstep
