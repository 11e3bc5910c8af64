#pragma once

// Small named instances with 0-based vertex ids.

#include <initializer_list>
#include <vector>

#include "mstep/bool_matrix.hpp"
#include "mstep/digraph.hpp"

namespace mstep::testing {

/// Rows 0101 / 0010 / 1000 / 0010. Classes {0}, {1, 3}, {2}.
inline BoolMatrix three_class_matrix() {
  BoolMatrix a(4);
  a.set(0, 1);
  a.set(0, 3);
  a.set(1, 2);
  a.set(2, 0);
  a.set(3, 2);
  return a;
}

inline Digraph directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return Digraph(n, std::move(arcs));
}

/// Two 2-cycles {a,b} = {0,1} and {c,d} = {2,3} joined by b -> c.
inline Digraph two_two_cycles() {
  return Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}});
}

/// Directed 4-cycle c1..c4 = 0..3 plus a sink v = 4 fed by `feeders`.
inline Digraph four_cycle_with_sink(std::initializer_list<Vertex> feeders) {
  std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (Vertex f : feeders) arcs.push_back({f, 4});
  return Digraph(5, std::move(arcs));
}

/// Three 2-cycles {0,1}, {2,3}, {4,5} with arcs 1->2 and 3->4.
inline Digraph three_two_cycles() {
  return Digraph(6, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4},
                     {1, 2}, {3, 4}});
}

}  // namespace mstep::testing
