#pragma once

#include <cstdint>

namespace turan {

// Counter-based deterministic RNG built on the splitmix64 permutation.
//
// Every randomized experiment in the workbench derives one Rng per trial via
// trial_rng(master, stream, trial). The derivation is a pure function of the
// three integers, so trials can run in any order (or in parallel) and still
// reproduce bit-identically. std::uniform_int_distribution is deliberately
// avoided: its output is implementation-defined and would break cross-stdlib
// reproducibility of the reports.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n) by rejection; n = 0 is a caller bug.
  std::uint64_t uniform_below(std::uint64_t n) {
    // Threshold = 2^64 mod n; values below it would bias the low residues.
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// The splitmix64 output permutation as a standalone mixing function.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derive an independent per-trial generator from (master seed, stream id,
// trial index). Streams separate unrelated uses of randomness inside one
// experiment (e.g. polynomial coefficients vs root-tuple sampling).
inline Rng trial_rng(std::uint64_t master, std::uint64_t stream,
                     std::uint64_t trial) {
  std::uint64_t s = mix64(master);
  s = mix64(s ^ (0x885868f969f4b2ddULL + stream));
  s = mix64(s ^ (0xc2b2ae3d27d4eb4fULL + trial));
  return Rng(s);
}

}  // namespace turan
