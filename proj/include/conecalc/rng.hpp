#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace conecalc {

// Deterministic random stream. mt19937_64's sequence is pinned by the
// standard but the standard distributions are not, so bounded draws are done
// here by rejection sampling.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  long draw(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = span * (UINT64_MAX / span);
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// Stable sub-stream seed derived from (seed, tag, index), so independent
// consumers of one user-facing seed do not share a stream.
inline uint64_t mix_seed(uint64_t seed, const std::string& tag, uint64_t index) {
  auto splitmix = [](uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  };
  uint64_t h = splitmix(seed);
  for (unsigned char ch : tag) h = splitmix(h ^ ch);
  return splitmix(h ^ index);
}

}  // namespace conecalc
