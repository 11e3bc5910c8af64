#include "mstep/convergence.hpp"

#include "mstep/error.hpp"

namespace mstep {

InterfaceSet interface_pairs(const Digraph& /*d*/, const ComponentChain& chain,
                             const ImprimitivityData& imp, std::size_t p) {
  if (p + 1 >= chain.eta())
    throw PreconditionError("interface_pairs: level " + std::to_string(p + 1) +
                            " out of range 1.." +
                            std::to_string(chain.eta() - 1));
  InterfaceSet result;
  result.level = p;
  for (const Arc& a : chain.interface_arcs[p])
    result.pairs.emplace(imp.class_of[a.from], imp.class_of[a.to]);
  return result;
}

ResidueSet lambda_set(const Digraph& d, const ComponentChain& chain,
                      const ImprimitivityData& imp) {
  const auto p = chain.last_nontrivial();
  if (!p) throw PreconditionError("lambda_set: no nontrivial component");
  if (*p + 1 == chain.eta())
    throw PreconditionError(
        "lambda_set: the last strong component is nontrivial");
  const Vertex v = chain.components[*p + 1].front();
  ResidueSet lambda(imp.kappa(*p));
  for (Vertex u : d.in_neighbors(v))
    if (chain.component_of[u] == *p)
      lambda.insert(static_cast<std::int64_t>(imp.class_of[u]));
  return lambda;
}

ResidueSet l_set(const ResidueSet& lambda, std::size_t j) {
  if (j >= lambda.modulus())
    throw PreconditionError("l_set: class index out of range");
  return lambda.shifted(1 - static_cast<std::int64_t>(j));
}

ResidueSet shifted_union(const ResidueSet& l1, const ResidueSet& l2,
                         std::size_t shifts) {
  if (l1.modulus() != l2.modulus())
    throw DimensionMismatch("shifted_union: moduli " +
                            std::to_string(l1.modulus()) + " and " +
                            std::to_string(l2.modulus()) + " differ");
  if (shifts == 0) throw PreconditionError("shifted_union: shifts must be >= 1");
  ResidueSet result(l1.modulus());
  for (std::size_t i = 0; i < shifts; ++i) {
    const auto s = static_cast<std::int64_t>(i);
    result |= l1.shifted(s) & l2.shifted(s);
  }
  return result;
}

std::string_view to_string(ConvergenceRule rule) {
  switch (rule) {
    case ConvergenceRule::AllTrivial:
      return "AllTrivial";
    case ConvergenceRule::NontrivialTail:
      return "NontrivialTail";
    case ConvergenceRule::TrailingCondition:
      return "TrailingCondition";
  }
  return "?";
}

ConvergenceVerdict converges(const Digraph& d) {
  const ComponentChain chain = component_chain(d);
  return converges(d, chain, imprimitivity(d, chain));
}

ConvergenceVerdict converges(const Digraph& d, const ComponentChain& chain,
                             const ImprimitivityData& imp) {
  ConvergenceVerdict verdict;
  if (chain.all_trivial()) {
    verdict.rule = ConvergenceRule::AllTrivial;
    return verdict;
  }
  if (!chain.trivial.back()) {
    verdict.rule = ConvergenceRule::NontrivialTail;
    return verdict;
  }

  verdict.rule = ConvergenceRule::TrailingCondition;
  const std::size_t p = *chain.last_nontrivial();
  const std::size_t kappa = imp.kappa(p);
  const std::size_t shifts = chain.eta() - 1 - p;
  const ResidueSet lambda = lambda_set(d, chain, imp);

  for (std::size_t j1 = 0; j1 < kappa; ++j1) {
    const ResidueSet l1 = l_set(lambda, j1);
    for (std::size_t j2 = j1 + 1; j2 < kappa; ++j2) {
      ResidueSet u = shifted_union(l1, l_set(lambda, j2), shifts);
      if (u.empty() || u.is_full()) continue;
      std::size_t excluded = 0;
      while (u.contains(static_cast<std::int64_t>(excluded))) ++excluded;
      verdict.converged = false;
      verdict.witness = DivergenceWitness{p, j1, j2, excluded, std::move(u)};
      return verdict;
    }
  }
  return verdict;
}

}  // namespace mstep
