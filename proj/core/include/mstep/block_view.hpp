#pragma once

#include <cstddef>
#include <vector>

#include "mstep/bool_matrix.hpp"
#include "mstep/components.hpp"
#include "mstep/convergence.hpp"
#include "mstep/digraph.hpp"
#include "mstep/imprimitivity.hpp"
#include "mstep/residue_set.hpp"

namespace mstep {

/// Matrix-side reading of the block form of A: rows and columns are
/// grouped by (component, class) in chain order. The permutation is never
/// applied; `ordering()` lists the vertices in block order instead.
///
/// Each query is answered from the matrix entries and cross-checked against
/// the digraph-side operation (InternalError on disagreement).
class BlockView {
 public:
  /// Throws NotLinearlyConnected when D(a) is not a linear chain.
  explicit BlockView(const BoolMatrix& a);

  const BoolMatrix& matrix() const noexcept { return a_; }
  const Digraph& digraph() const noexcept { return d_; }
  const ComponentChain& chain() const noexcept { return chain_; }
  const ImprimitivityData& classes() const noexcept { return imp_; }

  /// Vertices sorted by (component, class, id).
  const std::vector<Vertex>& ordering() const noexcept { return ordering_; }

  /// Block with rows in class i of component p and columns in class j of
  /// component q contains a 1.
  bool block_nonzero(std::size_t p, std::size_t q, std::size_t i,
                     std::size_t j) const;

  /// Nonzero (i, j) blocks between D_p and D_{p+1}; equals interface_pairs.
  InterfaceSet interface_blocks(std::size_t p) const;

  /// Classes of the last order>=2 diagonal block whose rows meet the column
  /// of the following order-1 block. Equals lambda_set.
  ResidueSet lambda() const;

  ResidueSet l_set(std::size_t j) const;

 private:
  BoolMatrix a_;
  Digraph d_;
  ComponentChain chain_;
  ImprimitivityData imp_;
  std::vector<Vertex> ordering_;
};

}  // namespace mstep
