#include "mstep/block_view.hpp"

#include <algorithm>

#include "mstep/error.hpp"

namespace mstep {

BlockView::BlockView(const BoolMatrix& a)
    : a_(a),
      d_(from_matrix(a)),
      chain_(component_chain(d_)),
      imp_(imprimitivity(d_, chain_)) {
  for (std::size_t p = 0; p < chain_.eta(); ++p)
    for (const auto& cls : imp_.components[p].classes)
      ordering_.insert(ordering_.end(), cls.begin(), cls.end());
}

bool BlockView::block_nonzero(std::size_t p, std::size_t q, std::size_t i,
                              std::size_t j) const {
  if (p >= chain_.eta() || q >= chain_.eta() || i >= imp_.kappa(p) ||
      j >= imp_.kappa(q))
    throw PreconditionError("block index out of range");
  for (Vertex row : imp_.members(p, i))
    for (Vertex col : imp_.members(q, j))
      if (a_.get(row, col)) return true;
  return false;
}

InterfaceSet BlockView::interface_blocks(std::size_t p) const {
  if (p + 1 >= chain_.eta())
    throw PreconditionError("interface_blocks: level out of range");
  InterfaceSet blocks;
  blocks.level = p;
  for (std::size_t i = 0; i < imp_.kappa(p); ++i)
    for (std::size_t j = 0; j < imp_.kappa(p + 1); ++j)
      if (block_nonzero(p, p + 1, i, j)) blocks.pairs.emplace(i, j);
  if (blocks.pairs != interface_pairs(d_, chain_, imp_, p).pairs)
    throw InternalError("block view: nonzero blocks disagree with the "
                        "interface pairs");
  return blocks;
}

ResidueSet BlockView::lambda() const {
  const auto p = chain_.last_nontrivial();
  if (!p || *p + 1 == chain_.eta())
    throw PreconditionError(
        "lambda: needs an order>=2 diagonal block followed by an order-1 "
        "block");
  const Vertex column = chain_.components[*p + 1].front();
  ResidueSet lambda(imp_.kappa(*p));
  for (std::size_t i = 0; i < imp_.kappa(*p); ++i) {
    const auto& rows = imp_.members(*p, i);
    if (std::any_of(rows.begin(), rows.end(),
                    [&](Vertex r) { return a_.get(r, column); }))
      lambda.insert(static_cast<std::int64_t>(i));
  }
  if (lambda != lambda_set(d_, chain_, imp_))
    throw InternalError("block view: matrix and digraph Λ disagree");
  return lambda;
}

ResidueSet BlockView::l_set(std::size_t j) const {
  return mstep::l_set(lambda(), j);
}

}  // namespace mstep
