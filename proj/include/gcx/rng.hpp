#pragma once

#include <cstdint>
#include <vector>

namespace gcx {

// splitmix64 stream; all sampling goes through this class so that seeded runs
// reproduce bit-identically across platforms (std::uniform_int_distribution is
// implementation-defined and unusable for frozen fixtures).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [lo, hi], inclusive. Rejection keeps the distribution exact.
  int uniform_int(int lo, int hi) {
    if (hi <= lo) return lo;
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<int>(v % span);
  }

  // True with probability num/den.
  bool chance(std::uint32_t num, std::uint32_t den) {
    return next() % den < num;
  }

  // Geometric-ish small value in [0, cap]: P(i) ~ 2^-(i+1).
  int geometric(int cap) {
    int v = 0;
    while (v < cap && (next() & 1U)) ++v;
    return v;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[uniform_int(0, i)]);
    }
  }

  // k distinct values from [0, n), ascending.
  std::vector<int> sample_indices(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    shuffle(pool);
    pool.resize(k < n ? k : n);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::uint64_t state_;
};

}  // namespace gcx
