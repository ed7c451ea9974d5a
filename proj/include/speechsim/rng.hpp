#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace speechsim::rng {

// Deterministic RNG used everywhere randomness is needed. std::mt19937_64
// output is fully specified by the standard; the draws below avoid
// std::uniform_int_distribution, whose mapping is implementation-defined,
// so identical seeds give identical results on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // Uniform in [0, n). Rejection sampling to kill modulo bias.
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform integer in [lo, hi], inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
  }

  // Uniform double in [0, 1).
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices drawn uniformly from [0, n), in draw order.
  std::vector<size_t> sample_indices(size_t n, size_t k) {
    std::vector<size_t> pool(n);
    for (size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<size_t> out;
    out.reserve(k);
    for (size_t drawn = 0; drawn < k && drawn < n; ++drawn) {
      const size_t j = drawn + static_cast<size_t>(below(n - drawn));
      std::swap(pool[drawn], pool[j]);
      out.push_back(pool[drawn]);
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

// Stable sub-seed derivation: FNV-1a over the tag folded into the root.
// Lets one CLI-level seed drive independent streams per pipeline unit.
inline uint64_t derive_seed(uint64_t root, std::string_view tag) {
  uint64_t h = 14695981039346656037ULL ^ root;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  // splitmix64 finalizer so near-identical tags land far apart
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

}  // namespace speechsim::rng
