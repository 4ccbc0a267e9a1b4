#ifndef CSF_RNG_HPP
#define CSF_RNG_HPP

#include <cstdint>

namespace csf {

// splitmix64 (Steele, Lea & Flood 2014). Chosen for a stable, documented
// cross-platform stream; the identifier below is echoed in reports.
inline constexpr const char* kRngAlgorithm = "splitmix64";

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform over [0, n). Modulo bias is < n / 2^64, far below any tolerance
  // used here.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Derives an independent per-fold seed from a master seed, so partial
// re-runs match full runs.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream_index) {
  SplitMix64 mix(master ^ (0xa0761d6478bd642fULL * (stream_index + 1)));
  return mix.next();
}

}  // namespace csf

#endif
