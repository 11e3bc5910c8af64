#include "mstep/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "mstep/error.hpp"

namespace mstep {

namespace {

// Bounded draws taken directly from the engine output; identical across
// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool chance(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

bool allowed(const InstanceSpec& spec, std::size_t p) {
  return p < spec.allow_trivial.size() && spec.allow_trivial[p];
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw PreconditionError(std::string("random_instance: ") + name +
                            " must lie in [0, 1]");
}

}  // namespace

Digraph random_instance(const InstanceSpec& spec) {
  if (spec.eta == 0)
    throw PreconditionError("random_instance: eta must be >= 1");
  if (spec.min_size == 0 || spec.min_size > spec.max_size)
    throw PreconditionError("random_instance: need 1 <= min_size <= max_size");
  check_probability(spec.trivial_probability, "trivial_probability");
  check_probability(spec.chord_probability, "chord_probability");
  check_probability(spec.wild_chord_probability, "wild_chord_probability");
  check_probability(spec.interface_probability, "interface_probability");

  Rng rng(spec.seed);
  const std::size_t nontrivial_min = std::max<std::size_t>(2, spec.min_size);

  std::vector<bool> trivial(spec.eta);
  for (std::size_t p = 0; p < spec.eta; ++p) {
    if (!allowed(spec, p)) {
      if (spec.max_size < 2)
        throw PreconditionError(
            "random_instance: component " + std::to_string(p + 1) +
            " must be nontrivial but max_size < 2");
      continue;
    }
    trivial[p] = spec.max_size < 2 || rng.chance(spec.trivial_probability);
  }

  std::vector<std::size_t> sizes(spec.eta, 1);
  std::size_t total = 0, floor_total = 0;
  for (std::size_t p = 0; p < spec.eta; ++p) {
    if (!trivial[p]) sizes[p] = rng.between(nontrivial_min, spec.max_size);
    total += sizes[p];
    floor_total += trivial[p] ? 1 : nontrivial_min;
  }
  if (spec.max_vertices != 0) {
    if (floor_total > spec.max_vertices)
      throw PreconditionError("random_instance: cannot fit the components in " +
                              std::to_string(spec.max_vertices) + " vertices");
    while (total > spec.max_vertices) {
      std::vector<std::size_t> shrinkable;
      for (std::size_t p = 0; p < spec.eta; ++p)
        if (!trivial[p] && sizes[p] > nontrivial_min) shrinkable.push_back(p);
      --sizes[shrinkable[rng.below(shrinkable.size())]];
      --total;
    }
  }

  std::vector<std::vector<Vertex>> blocks(spec.eta);
  Vertex next_id = 0;
  for (std::size_t p = 0; p < spec.eta; ++p)
    for (std::size_t k = 0; k < sizes[p]; ++k) blocks[p].push_back(next_id++);

  std::vector<Arc> arcs;
  for (std::size_t p = 0; p < spec.eta; ++p) {
    if (trivial[p]) continue;
    std::vector<Vertex> local = blocks[p];
    rng.shuffle(local);
    const std::size_t s = local.size();
    const std::size_t kappa = rng.between(1, s);
    std::vector<std::size_t> cls(total, 0);
    std::vector<std::vector<Vertex>> members(kappa);
    for (std::size_t k = 0; k < s; ++k) {
      cls[local[k]] = k < kappa ? k : rng.below(kappa);
      members[cls[local[k]]].push_back(local[k]);
    }

    // A closed walk that visits the classes cyclically and every vertex at
    // least once keeps the component strongly connected.
    std::size_t rounds = 0;
    for (const auto& m : members) rounds = std::max(rounds, m.size());
    std::vector<Vertex> walk;
    for (std::size_t r = 0; r < rounds; ++r)
      for (std::size_t c = 0; c < kappa; ++c)
        walk.push_back(members[c][r % members[c].size()]);
    for (std::size_t t = 0; t < walk.size(); ++t) {
      const Vertex u = walk[t], v = walk[(t + 1) % walk.size()];
      if (u != v) arcs.push_back({u, v});
    }

    for (Vertex u : blocks[p])
      for (Vertex v : blocks[p]) {
        if (u == v) continue;
        if (cls[v] == (cls[u] + 1) % kappa && rng.chance(spec.chord_probability))
          arcs.push_back({u, v});
        else if (rng.chance(spec.wild_chord_probability))
          arcs.push_back({u, v});
      }
  }

  for (std::size_t p = 0; p + 1 < spec.eta; ++p) {
    bool any = false;
    for (Vertex u : blocks[p])
      for (Vertex v : blocks[p + 1])
        if (rng.chance(spec.interface_probability)) {
          arcs.push_back({u, v});
          any = true;
        }
    if (!any)
      arcs.push_back({blocks[p][rng.below(blocks[p].size())],
                      blocks[p + 1][rng.below(blocks[p + 1].size())]});
  }

  std::vector<Vertex> relabel(total);
  std::iota(relabel.begin(), relabel.end(), Vertex{0});
  rng.shuffle(relabel);
  for (Arc& a : arcs) a = {relabel[a.from], relabel[a.to]};
  return Digraph(total, std::move(arcs));
}

}  // namespace mstep
