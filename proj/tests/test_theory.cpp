#include <gtest/gtest.h>

#include "mstep/block_view.hpp"
#include "mstep/components.hpp"
#include "mstep/convergence.hpp"
#include "mstep/error.hpp"
#include "mstep/imprimitivity.hpp"
#include "mstep/limit.hpp"
#include "mstep/oracle.hpp"
#include "mstep/skeleton.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace mstep {
namespace {

using Pairs = std::set<ClassPair>;

struct Analysis {
  Digraph d;
  ComponentChain chain;
  ImprimitivityData imp;

  explicit Analysis(Digraph digraph)
      : d(std::move(digraph)),
        chain(component_chain(d)),
        imp(imprimitivity(d, chain)) {}
};

// 2-cycles {0,1}, {2,3}, {4,5}; both classes of each cycle feed class 0 of
// the next, so every skeleton level is complete.
Digraph complete_three_level() {
  return Digraph(6, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4},
                     {0, 2}, {1, 2}, {2, 4}, {3, 4}});
}

Digraph two_cycles_both_feed() {
  return Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}, {1, 2}});
}

TEST(ResidueSet, Basics) {
  ResidueSet s(4, {-1, 5});
  EXPECT_EQ(s.members(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(s.shifted(1), ResidueSet(4, {0, 2}));
  EXPECT_TRUE(ResidueSet::full(3).is_full());
  EXPECT_TRUE(ResidueSet(3).empty());
  EXPECT_EQ(ResidueSet(4, {0, 1}) & ResidueSet(4, {1, 2}), ResidueSet(4, {1}));
  EXPECT_EQ(ResidueSet(4, {0}) | ResidueSet(4, {2}), ResidueSet(4, {0, 2}));
  EXPECT_THROW(ResidueSet(3) & ResidueSet(4), DimensionMismatch);
  EXPECT_THROW(ResidueSet(0), PreconditionError);
}

TEST(InterfacePairs, Examples) {
  const Analysis two(testing::two_two_cycles());
  EXPECT_EQ(interface_pairs(two.d, two.chain, two.imp, 0).pairs, (Pairs{{1, 0}}));

  const Analysis all(Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2},
                                 {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_EQ(interface_pairs(all.d, all.chain, all.imp, 0).pairs,
            (Pairs{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));

  const Analysis single(Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}}));
  EXPECT_EQ(interface_pairs(single.d, single.chain, single.imp, 0).pairs,
            (Pairs{{0, 0}}));
  EXPECT_THROW(interface_pairs(two.d, two.chain, two.imp, 1), PreconditionError);
}

TEST(LambdaSet, Examples) {
  const Analysis a(testing::four_cycle_with_sink({0, 1}));
  EXPECT_EQ(lambda_set(a.d, a.chain, a.imp), ResidueSet(4, {0, 1}));
  const Analysis b(testing::four_cycle_with_sink({0, 1, 2, 3}));
  EXPECT_TRUE(lambda_set(b.d, b.chain, b.imp).is_full());
  const Analysis c(testing::four_cycle_with_sink({0}));
  EXPECT_EQ(lambda_set(c.d, c.chain, c.imp), ResidueSet(4, {0}));
}

TEST(LambdaSet, Preconditions) {
  const Analysis path(Digraph(3, {{0, 1}, {1, 2}}));
  EXPECT_THROW(lambda_set(path.d, path.chain, path.imp), PreconditionError);
  const Analysis two(testing::two_two_cycles());
  EXPECT_THROW(lambda_set(two.d, two.chain, two.imp), PreconditionError);
}

TEST(LSet, Examples) {
  const ResidueSet lambda(4, {0, 1});
  EXPECT_EQ(l_set(lambda, 0), ResidueSet(4, {1, 2}));
  EXPECT_EQ(l_set(lambda, 1), ResidueSet(4, {0, 1}));
  EXPECT_EQ(l_set(ResidueSet(2, {0}), 0), ResidueSet(2, {1}));
  EXPECT_EQ(l_set(ResidueSet(2, {0}), 1), ResidueSet(2, {0}));
  EXPECT_TRUE(l_set(ResidueSet::full(3), 2).is_full());
}

TEST(LSet, MatchesWalkLengthsIntoSink) {
  for (auto feeders : {std::initializer_list<Vertex>{0, 1},
                       std::initializer_list<Vertex>{0, 2},
                       std::initializer_list<Vertex>{3}}) {
    const Analysis a(testing::four_cycle_with_sink(feeders));
    const ResidueSet lambda = lambda_set(a.d, a.chain, a.imp);
    const auto powers = testing::naive_powers(to_matrix(a.d), 16);
    for (Vertex j = 0; j < 4; ++j) {
      ResidueSet lengths(4);
      for (std::size_t m = 8; m <= 16; ++m)
        if (powers[m - 1].get(j, 4)) lengths.insert(static_cast<std::int64_t>(m));
      ASSERT_EQ(l_set(lambda, a.imp.class_of[j]), lengths) << "vertex " << j;
    }
  }
}

TEST(ShiftedUnion, Examples) {
  const ResidueSet l1(4, {0, 1, 2});
  const ResidueSet l2(4, {0, 1, 3});
  EXPECT_EQ(shifted_union(l1, l2, 3), ResidueSet::full(4));
  EXPECT_EQ(shifted_union(l1, l2, 2), ResidueSet(4, {0, 1, 2}));
  EXPECT_EQ(shifted_union(l1, l2, 1), ResidueSet(4, {0, 1}));
  EXPECT_TRUE(shifted_union(ResidueSet(4, {0}), ResidueSet(4, {2}), 3).empty());
  EXPECT_THROW(shifted_union(ResidueSet(3), ResidueSet(4), 1), DimensionMismatch);
  EXPECT_THROW(shifted_union(l1, l2, 0), PreconditionError);
}

TEST(Converges, Examples) {
  const ConvergenceVerdict fig = converges(from_matrix(testing::three_class_matrix()));
  EXPECT_TRUE(fig.converged);
  EXPECT_EQ(fig.rule, ConvergenceRule::NontrivialTail);
  EXPECT_FALSE(fig.witness);

  const ConvergenceVerdict sink = converges(testing::four_cycle_with_sink({0, 1}));
  EXPECT_FALSE(sink.converged);
  EXPECT_EQ(sink.rule, ConvergenceRule::TrailingCondition);
  ASSERT_TRUE(sink.witness);
  EXPECT_EQ(sink.witness->component, 0u);
  EXPECT_EQ(sink.witness->class1, 0u);
  EXPECT_EQ(sink.witness->class2, 1u);
  EXPECT_EQ(sink.witness->excluded, 0u);
  EXPECT_EQ(sink.witness->union_set, ResidueSet(4, {1}));

  const ConvergenceVerdict full = converges(testing::four_cycle_with_sink({0, 1, 2, 3}));
  EXPECT_TRUE(full.converged);
  EXPECT_EQ(full.rule, ConvergenceRule::TrailingCondition);

  const ConvergenceVerdict path = converges(Digraph(3, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(path.converged);
  EXPECT_EQ(path.rule, ConvergenceRule::AllTrivial);

  EXPECT_THROW(converges(Digraph(3, {{0, 1}, {1, 2}, {0, 2}})), NotLinearlyConnected);
}

TEST(Converges, ExamplesAgreeWithSimulation) {
  for (const Digraph& d :
       {from_matrix(testing::three_class_matrix()), testing::four_cycle_with_sink({0, 1}),
        testing::four_cycle_with_sink({0, 1, 2, 3}), Digraph(3, {{0, 1}, {1, 2}})})
    EXPECT_EQ(converges(d).converged, simulate_limit(to_matrix(d)).converged);
}

TEST(BGraph, Examples) {
  EXPECT_EQ(b_graph(2, 2, {0, {{1, 0}}}, false), (Pairs{{0, 0}, {1, 1}}));
  EXPECT_EQ(b_graph(2, 3, {0, {{0, 0}}}, false).size(), 6u);
  EXPECT_EQ(b_graph(1, 4, {0, {{0, 2}}}, true), (Pairs{{0, 1}}));
  EXPECT_THROW(b_graph(2, 2, {0, {{2, 0}}}, false), PreconditionError);
}

// (i, j) is realised iff some vertex of class i in D_1 reaches class j of
// D_2 by walks of length 2 s kappa1 kappa2 for every large s.
std::set<ClassPair> pairs_by_walks(const Analysis& a) {
  const std::size_t k1 = a.imp.kappa(0);
  const std::size_t k2 = a.imp.kappa(1);
  const PowerTrace trace = trace_powers(to_matrix(a.d));
  const std::size_t step = 2 * k1 * k2;
  std::size_t s = 1;
  while (s * step < trace.cycle.index) ++s;
  std::set<ClassPair> out;
  for (std::size_t extra = 0; extra < trace.cycle.period; ++extra) {
    const BoolMatrix& m = trace.power((s + extra) * step);
    std::set<ClassPair> here;
    for (Vertex u : a.chain.components[0])
      for (Vertex v : a.chain.components[1])
        if (m.get(u, v)) here.insert({a.imp.class_of[u], a.imp.class_of[v]});
    if (extra == 0) out = here;
    EXPECT_EQ(here, out);
  }
  return out;
}

TEST(BGraph, TwoCyclesMatchWalks) {
  const Analysis a(testing::two_two_cycles());
  const InterfaceSet iface = interface_pairs(a.d, a.chain, a.imp, 0);
  EXPECT_EQ(b_graph(2, 2, iface, false), pairs_by_walks(a));
  const Analysis b(Digraph(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}, {1, 2}}));
  EXPECT_EQ(b_graph(2, 3, interface_pairs(b.d, b.chain, b.imp, 0), false),
            pairs_by_walks(b));
}

TEST(CsGraph, Examples) {
  const Analysis two(testing::two_two_cycles());
  const SkeletonGraph sk = cs_graph(two.d, two.chain, two.imp);
  ASSERT_EQ(sk.levels.size(), 1u);
  EXPECT_EQ(sk.levels[0], (Pairs{{0, 0}, {1, 1}}));

  const Analysis three(testing::three_two_cycles());
  const SkeletonGraph sk3 = cs_graph(three.d, three.chain, three.imp);
  EXPECT_EQ(sk3.levels, (std::vector<Pairs>{{{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}}));
  EXPECT_EQ(sk3.edge_count(), 4u);

  const Analysis coprime(Digraph(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}, {1, 2}}));
  EXPECT_EQ(cs_graph(coprime.d, coprime.chain, coprime.imp).edge_count(), 6u);

  const Analysis sink(testing::four_cycle_with_sink({0}));
  EXPECT_THROW(cs_graph(sink.d, sink.chain, sink.imp), TrivialComponentPresent);
}

TEST(AscendingReach, Examples) {
  const Analysis three(testing::three_two_cycles());
  const SkeletonGraph sk = cs_graph(three.d, three.chain, three.imp);
  EXPECT_EQ(ascending_reach(sk, 0, 0).at(0), ResidueSet(2, {0}));
  EXPECT_EQ(ascending_reach(sk, 0, 0).at(1), ResidueSet(2, {0}));
  EXPECT_EQ(ascending_reach(sk, 0, 1).at(2), ResidueSet(2, {1}));

  const Analysis full(complete_three_level());
  const SkeletonGraph skc = cs_graph(full.d, full.chain, full.imp);
  EXPECT_TRUE(ascending_reach(skc, 0, 0).at(2).is_full());
  EXPECT_THROW(ascending_reach(skc, 0, 2), PreconditionError);
}

TEST(LimitGraph, ThreeClass) {
  EXPECT_EQ(limit_graph(from_matrix(testing::three_class_matrix())).edges(),
            (std::vector<Edge>{{1, 3}}));
}

TEST(LimitGraph, TwoCycles) {
  const UndirectedGraph g = limit_graph(testing::two_two_cycles());
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(g, *simulate_limit(to_matrix(testing::two_two_cycles())).limit);
}

TEST(LimitGraph, CompleteSkeletons) {
  const Digraph d = complete_three_level();
  UndirectedGraph expected(6);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (!(u == 4 && v == 5)) expected.add_edge(u, v);
  EXPECT_EQ(limit_graph(d), expected);
  EXPECT_EQ(*simulate_limit(to_matrix(d)).limit, expected);
}

TEST(LimitGraph, TrivialComponentRejected) {
  EXPECT_THROW(limit_graph(testing::four_cycle_with_sink({0})),
               TrivialComponentPresent);
}

TEST(Jbd, Examples) {
  const Analysis two(testing::two_two_cycles());
  EXPECT_TRUE(jbd_condition(two.d, two.chain, two.imp).holds);

  const Analysis both(two_cycles_both_feed());
  const JbdResult r = jbd_condition(both.d, both.chain, both.imp);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.violation);
  EXPECT_EQ(r.violation->level, 0u);
  EXPECT_EQ(r.violation->kind, JbdViolationKind::ResidueMismatch);
  EXPECT_FALSE(union_of_cliques(*simulate_limit(to_matrix(both.d)).limit));

  const Analysis fig(from_matrix(testing::three_class_matrix()));
  EXPECT_TRUE(jbd_condition(fig.d, fig.chain, fig.imp).holds);

  // kappa 2 followed by kappa 3: 3 does not divide 2.
  const Analysis coprime(Digraph(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}, {1, 2}}));
  const JbdResult c = jbd_condition(coprime.d, coprime.chain, coprime.imp);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.violation->kind, JbdViolationKind::Divisibility);

  const Analysis sink(testing::four_cycle_with_sink({0}));
  EXPECT_THROW(jbd_condition(sink.d, sink.chain, sink.imp), TrivialComponentPresent);
}

TEST(UnionOfCliques, Examples) {
  UndirectedGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_TRUE(union_of_cliques(two));
  UndirectedGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_FALSE(union_of_cliques(path));
  EXPECT_TRUE(union_of_cliques(UndirectedGraph(3)));
}

TEST(BlockView, TwoCycles) {
  const BlockView view(to_matrix(testing::two_two_cycles()));
  EXPECT_TRUE(view.block_nonzero(0, 1, 1, 0));
  EXPECT_FALSE(view.block_nonzero(0, 1, 0, 0));
  EXPECT_FALSE(view.block_nonzero(0, 1, 0, 1));
  EXPECT_FALSE(view.block_nonzero(0, 1, 1, 1));
  EXPECT_TRUE(view.block_nonzero(0, 0, 0, 1));
  EXPECT_FALSE(view.block_nonzero(0, 0, 0, 0));
  EXPECT_EQ(view.interface_blocks(0).pairs, (Pairs{{1, 0}}));
  EXPECT_EQ(view.ordering(), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(BlockView, ThreeClassOrderingAndSink) {
  EXPECT_EQ(BlockView(testing::three_class_matrix()).ordering(),
            (std::vector<Vertex>{0, 1, 3, 2}));
  const BlockView sink(to_matrix(testing::four_cycle_with_sink({0, 1})));
  EXPECT_EQ(sink.lambda(), ResidueSet(4, {0, 1}));
  EXPECT_EQ(sink.l_set(0), ResidueSet(4, {1, 2}));
}

}  // namespace
}  // namespace mstep
