#include "mstep/residue_set.hpp"

#include <algorithm>

#include "mstep/error.hpp"

namespace mstep {

ResidueSet::ResidueSet(std::size_t modulus) : bits_(modulus, false) {
  if (modulus == 0) throw PreconditionError("residue modulus must be >= 1");
}

ResidueSet::ResidueSet(std::size_t modulus,
                       std::initializer_list<std::int64_t> members)
    : ResidueSet(modulus) {
  for (std::int64_t r : members) insert(r);
}

ResidueSet ResidueSet::full(std::size_t modulus) {
  ResidueSet s(modulus);
  s.bits_.assign(modulus, true);
  return s;
}

std::size_t ResidueSet::reduce(std::int64_t r) const {
  const auto m = static_cast<std::int64_t>(bits_.size());
  return static_cast<std::size_t>(((r % m) + m) % m);
}

void ResidueSet::insert(std::int64_t r) { bits_[reduce(r)] = true; }

bool ResidueSet::contains(std::int64_t r) const { return bits_[reduce(r)]; }

bool ResidueSet::empty() const {
  return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

bool ResidueSet::is_full() const {
  return std::all_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

std::size_t ResidueSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::size_t> ResidueSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < bits_.size(); ++r)
    if (bits_[r]) out.push_back(r);
  return out;
}

ResidueSet ResidueSet::shifted(std::int64_t shift) const {
  ResidueSet out(modulus());
  for (std::size_t r = 0; r < bits_.size(); ++r)
    if (bits_[r]) out.insert(static_cast<std::int64_t>(r) + shift);
  return out;
}

ResidueSet& ResidueSet::operator&=(const ResidueSet& other) {
  if (other.modulus() != modulus())
    throw DimensionMismatch("residue sets have different moduli");
  for (std::size_t r = 0; r < bits_.size(); ++r)
    bits_[r] = bits_[r] && other.bits_[r];
  return *this;
}

ResidueSet& ResidueSet::operator|=(const ResidueSet& other) {
  if (other.modulus() != modulus())
    throw DimensionMismatch("residue sets have different moduli");
  for (std::size_t r = 0; r < bits_.size(); ++r)
    bits_[r] = bits_[r] || other.bits_[r];
  return *this;
}

}  // namespace mstep
