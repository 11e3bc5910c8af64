#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <utility>

#include "mstep/components.hpp"
#include "mstep/digraph.hpp"
#include "mstep/imprimitivity.hpp"
#include "mstep/residue_set.hpp"

namespace mstep {

/// (k, l): some arc runs from class k of D_p to class l of D_{p+1}.
using ClassPair = std::pair<std::size_t, std::size_t>;

struct InterfaceSet {
  std::size_t level = 0;  // p, 0-based
  std::set<ClassPair> pairs;
};

InterfaceSet interface_pairs(const Digraph& d, const ComponentChain& chain,
                             const ImprimitivityData& imp, std::size_t p);

/// Class indices of the last nontrivial component D_p that contain an
/// in-neighbor of the vertex v of D_{p+1}, as residues mod kappa_p.
/// Requires a nontrivial component followed by at least one trivial one.
ResidueSet lambda_set(const Digraph& d, const ComponentChain& chain,
                      const ImprimitivityData& imp);

/// Residues mod kappa of walk lengths from class j into v:
/// { (k - j) + 1 mod kappa : k in lambda }.
ResidueSet l_set(const ResidueSet& lambda, std::size_t j);

/// Union over i = 0..shifts-1 of (i + l1) ∩ (i + l2).
ResidueSet shifted_union(const ResidueSet& l1, const ResidueSet& l2,
                         std::size_t shifts);

enum class ConvergenceRule { AllTrivial, NontrivialTail, TrailingCondition };

std::string_view to_string(ConvergenceRule rule);

/// Classes j1 < j2 of the last nontrivial component whose shifted union is
/// neither empty nor all of Z_kappa; `excluded` is its smallest non-member.
struct DivergenceWitness {
  std::size_t component = 0;
  std::size_t class1 = 0;
  std::size_t class2 = 0;
  std::size_t excluded = 0;
  ResidueSet union_set{1};
};

struct ConvergenceVerdict {
  bool converged = true;
  ConvergenceRule rule = ConvergenceRule::AllTrivial;
  std::optional<DivergenceWitness> witness;  // present iff !converged
};

/// Decides whether {C(D^m)} converges. Throws NotLinearlyConnected when the
/// digraph is outside the linear-chain class.
ConvergenceVerdict converges(const Digraph& d);
ConvergenceVerdict converges(const Digraph& d, const ComponentChain& chain,
                             const ImprimitivityData& imp);

}  // namespace mstep
