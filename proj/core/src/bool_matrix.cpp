#include "mstep/bool_matrix.hpp"

#include <bit>
#include <optional>
#include <string>
#include <unordered_map>

#include "mstep/error.hpp"

namespace mstep {

namespace {

std::size_t words_for(std::size_t n) {
  return (n + BoolMatrix::kWordBits - 1) / BoolMatrix::kWordBits;
}

}  // namespace

BoolMatrix::BoolMatrix(std::size_t n)
    : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {
  if (n == 0) throw PreconditionError("matrix order must be at least 1");
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::all_ones(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j);
  return m;
}

bool BoolMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_)
    throw PreconditionError("matrix index out of range");
  const Word w = bits_[i * words_ + j / kWordBits];
  return (w >> (j % kWordBits)) & 1u;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= n_ || j >= n_)
    throw PreconditionError("matrix index out of range");
  Word& w = bits_[i * words_ + j / kWordBits];
  const Word mask = Word{1} << (j % kWordBits);
  if (value)
    w |= mask;
  else
    w &= ~mask;
}

std::span<const BoolMatrix::Word> BoolMatrix::row(std::size_t i) const {
  return {bits_.data() + i * words_, words_};
}

std::span<BoolMatrix::Word> BoolMatrix::mutable_row(std::size_t i) {
  return {bits_.data() + i * words_, words_};
}

bool BoolMatrix::rows_intersect(std::size_t i, std::size_t j) const {
  const Word* a = bits_.data() + i * words_;
  const Word* b = bits_.data() + j * words_;
  for (std::size_t w = 0; w < words_; ++w)
    if (a[w] & b[w]) return true;
  return false;
}

std::size_t BoolMatrix::popcount() const {
  std::size_t total = 0;
  for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BoolMatrix::is_zero() const {
  for (Word w : bits_)
    if (w) return false;
  return true;
}

std::size_t BoolMatrix::hash() const noexcept {
  // splitmix64 finalizer folded over the words.
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
  for (Word w : bits_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("bool_mul: orders " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()) + " differ");
  const std::size_t n = a.size();
  const std::size_t words = a.words_per_row();
  BoolMatrix result(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto out = result.mutable_row(i);
    auto selector = a.row(i);
    for (std::size_t w = 0; w < words; ++w) {
      BoolMatrix::Word bits = selector[w];
      while (bits) {
        const std::size_t k =
            w * BoolMatrix::kWordBits +
            static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        auto src = b.row(k);
        for (std::size_t x = 0; x < words; ++x) out[x] |= src[x];
      }
    }
  }
  return result;
}

BoolMatrix bool_pow(const BoolMatrix& a, std::uint64_t m) {
  if (m == 0) throw PreconditionError("bool_pow: exponent must be >= 1");
  BoolMatrix base = a;
  std::optional<BoolMatrix> acc;
  while (true) {
    if (m & 1u) acc = acc ? bool_mul(*acc, base) : base;
    m >>= 1;
    if (!m) break;
    base = bool_mul(base, base);
  }
  return *acc;
}

BoolMatrix gamma(const BoolMatrix& a) {
  const std::size_t n = a.size();
  BoolMatrix result(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.rows_intersect(i, j)) {
        result.set(i, j);
        result.set(j, i);
      }
  return result;
}

const BoolMatrix& PowerTrace::power(std::uint64_t m) const {
  if (m == 0) throw PreconditionError("power exponent must be >= 1");
  if (m < cycle.index + cycle.period) return powers[m - 1];
  const std::uint64_t offset = (m - cycle.index) % cycle.period;
  return powers[cycle.index - 1 + offset];
}

PowerTrace trace_powers(const BoolMatrix& a, std::size_t memory_cap) {
  if (memory_cap == 0)
    throw PreconditionError("power_cycle: memory cap must be >= 1");
  PowerTrace trace;
  // Hash buckets point into `powers`; a hit is confirmed by full comparison.
  std::unordered_multimap<std::size_t, std::size_t> seen;
  BoolMatrix current = a;
  while (true) {
    const std::size_t h = current.hash();
    auto [first, last] = seen.equal_range(h);
    for (auto it = first; it != last; ++it) {
      if (trace.powers[it->second] == current) {
        trace.cycle.index = it->second + 1;
        trace.cycle.period = trace.powers.size() + 1 - trace.cycle.index;
        return trace;
      }
    }
    if (trace.powers.size() == memory_cap)
      throw ResourceLimit("power_cycle: more than " +
                          std::to_string(memory_cap) +
                          " distinct powers (memory cap) without a repeat");
    seen.emplace(h, trace.powers.size());
    BoolMatrix next = bool_mul(current, a);
    trace.powers.push_back(std::move(current));
    current = std::move(next);
  }
}

PowerCycle power_cycle(const BoolMatrix& a, std::size_t memory_cap) {
  return trace_powers(a, memory_cap).cycle;
}

}  // namespace mstep
