#pragma once

#include <cstdint>
#include <random>

namespace muskat {

// Deterministic uniform sampling. std::uniform_real_distribution is
// implementation-defined, so we map mt19937_64 bits to [0,1) ourselves
// to keep emitted numbers bit-identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t bits() { return gen_(); }

private:
  std::mt19937_64 gen_;
};

}  // namespace muskat
