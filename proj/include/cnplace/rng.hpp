#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace cnplace {

/// splitmix64 finalizer; used to decorrelate derived seeds.
std::uint64_t mix64(std::uint64_t x);

/// FNV-1a over a byte string.
std::uint64_t fnv1a64(std::string_view s);

/// Derive an independent stream seed from a root seed and a stream tag.
/// All randomness in the pipeline flows from one root seed through here,
/// so the stream layout is part of the reproducibility contract.
std::uint64_t derive_stream(std::uint64_t root, std::string_view tag);

/// Deterministic uniform source. Backed by std::mt19937_64, whose output
/// sequence is fixed by the standard, so results are portable across
/// platforms and standard libraries. Distribution mapping is done here
/// rather than with std::*_distribution (those are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on the open interval (0,1): 53-bit mantissa, never 0 or 1.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling keeps it
  /// unbiased and reproducible.
  std::uint64_t uniform_int(std::uint64_t bound);

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(xs[i - 1], xs[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cnplace
