#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace mfc {

// Deterministic random stream for data generation.
//
// The raw bit stream of std::mt19937_64 is pinned by the standard, so the
// same seed reproduces the same bytes on every platform and toolchain.
// Standard-library distributions are *not* pinned, so bounded draws and
// shuffles are implemented here directly (rejection sampling, Fisher-Yates).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Unbiased uniform draw from [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return r % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  // `count` pairwise-distinct integers in [1, upper], in draw order.
  std::vector<int> sample_distinct(int upper, int count) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
      const int candidate = static_cast<int>(below(static_cast<std::uint64_t>(upper))) + 1;
      bool seen = false;
      for (int v : out) {
        if (v == candidate) {
          seen = true;
          break;
        }
      }
      if (!seen) out.push_back(candidate);
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mfc
