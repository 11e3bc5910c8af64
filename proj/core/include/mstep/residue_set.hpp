#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mstep {

/// Subset of Z_modulus. Residues are 0-based.
class ResidueSet {
 public:
  explicit ResidueSet(std::size_t modulus);
  ResidueSet(std::size_t modulus, std::initializer_list<std::int64_t> members);

  static ResidueSet full(std::size_t modulus);

  std::size_t modulus() const noexcept { return bits_.size(); }

  /// Reduces `r` into 0..modulus-1 first; negative values are fine.
  void insert(std::int64_t r);
  bool contains(std::int64_t r) const;

  bool empty() const;
  bool is_full() const;
  std::size_t size() const;
  std::vector<std::size_t> members() const;

  /// { r + shift mod modulus : r in *this }
  ResidueSet shifted(std::int64_t shift) const;

  ResidueSet& operator&=(const ResidueSet& other);
  ResidueSet& operator|=(const ResidueSet& other);
  friend ResidueSet operator&(ResidueSet a, const ResidueSet& b) {
    return a &= b;
  }
  friend ResidueSet operator|(ResidueSet a, const ResidueSet& b) {
    return a |= b;
  }
  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::size_t reduce(std::int64_t r) const;

  std::vector<bool> bits_;
};

}  // namespace mstep
