#include "mstep/digraph.hpp"

#include <algorithm>
#include <string>

#include "mstep/error.hpp"

namespace mstep {

Digraph::Digraph(std::size_t n) : Digraph(n, {}) {}

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), out_(n), in_(n) {
  if (n == 0) throw PreconditionError("digraph needs at least one vertex");
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  for (const Arc& a : arcs_) {
    if (a.from >= n || a.to >= n)
      throw PreconditionError("arc (" + std::to_string(a.from) + "," +
                              std::to_string(a.to) + ") out of range for " +
                              std::to_string(n) + " vertices");
    out_[a.from].push_back(a.to);
    in_[a.to].push_back(a.from);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

std::span<const Vertex> Digraph::out_neighbors(Vertex u) const {
  return out_.at(u);
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
  return in_.at(v);
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  const auto& list = out_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

bool Digraph::has_self_loop() const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [](const Arc& a) { return a.from == a.to; });
}

Digraph Digraph::without_arc(const Arc& arc) const {
  std::vector<Arc> kept;
  kept.reserve(arcs_.size());
  for (const Arc& a : arcs_)
    if (a != arc) kept.push_back(a);
  return Digraph(n_, std::move(kept));
}

Digraph from_matrix(const BoolMatrix& a) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.get(i, j)) arcs.push_back({i, j});
  return Digraph(a.size(), std::move(arcs));
}

BoolMatrix to_matrix(const Digraph& d) {
  BoolMatrix a(d.size());
  for (const Arc& arc : d.arcs()) a.set(arc.from, arc.to);
  return a;
}

}  // namespace mstep
