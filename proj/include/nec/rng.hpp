#pragma once

#include <cstdint>
#include <vector>

namespace nec {

// SplitMix64. Self-contained so that seeded searches produce byte-identical
// results on every platform (std distributions make no such promise).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n), n >= 1; rejection sampling keeps it unbiased
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do { v = next(); } while (v >= limit);
    return v % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  Rng child(std::uint64_t salt) {
    // stable derivation, independent of how much the parent has been used
    return Rng(state_ ^ (salt * 0x2545f4914f6cdd1dull + 0x9e3779b97f4a7c15ull));
  }

private:
  std::uint64_t state_;
};

} // namespace nec
