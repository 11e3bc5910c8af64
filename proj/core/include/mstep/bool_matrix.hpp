#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mstep {

/// Square Boolean matrix with rows packed into 64-bit words.
///
/// Bits past column n in the last word of each row are always zero, so
/// equality and hashing operate on raw words.
class BoolMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  /// Zero matrix of order n (n >= 1).
  explicit BoolMatrix(std::size_t n);

  static BoolMatrix identity(std::size_t n);
  static BoolMatrix all_ones(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value = true);

  std::span<const Word> row(std::size_t i) const;

  /// True iff rows i and j have a 1 in a common column.
  bool rows_intersect(std::size_t i, std::size_t j) const;

  std::size_t popcount() const;
  bool is_zero() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

  friend BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b);

 private:
  std::span<Word> mutable_row(std::size_t i);

  std::size_t n_;
  std::size_t words_;
  std::vector<Word> bits_;
};

/// Boolean product: entry (i,j) is 1 iff a(i,k) = b(k,j) = 1 for some k.
/// Row i of the result is the OR of the rows of b selected by row i of a.
BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b);

/// a^m for m >= 1 by repeated squaring.
BoolMatrix bool_pow(const BoolMatrix& a, std::uint64_t m);

/// Row-intersection graph: result(i,j) = 1 iff i != j and rows i, j of `a`
/// share a 1. Symmetric with zero diagonal.
BoolMatrix gamma(const BoolMatrix& a);

/// Eventual periodicity of {A^m}, m >= 1: A^(index + period) = A^index with
/// both values minimal.
struct PowerCycle {
  std::size_t index = 1;
  std::size_t period = 1;

  friend bool operator==(const PowerCycle&, const PowerCycle&) = default;
};

inline constexpr std::size_t kDefaultMemoryCap = 100000;

/// Every distinct power A^1 .. A^(index + period - 1) together with the cycle.
struct PowerTrace {
  PowerCycle cycle;
  std::vector<BoolMatrix> powers;  // powers[k] == A^(k+1)

  /// A^m for any m >= 1, folded into the stored range.
  const BoolMatrix& power(std::uint64_t m) const;
};

/// Exact cycle detection. Throws ResourceLimit once more than `memory_cap`
/// distinct powers would have to be stored.
PowerTrace trace_powers(const BoolMatrix& a,
                        std::size_t memory_cap = kDefaultMemoryCap);

PowerCycle power_cycle(const BoolMatrix& a,
                       std::size_t memory_cap = kDefaultMemoryCap);

}  // namespace mstep

template <>
struct std::hash<mstep::BoolMatrix> {
  std::size_t operator()(const mstep::BoolMatrix& m) const noexcept {
    return m.hash();
  }
};
