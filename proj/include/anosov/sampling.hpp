#pragma once

#include <cstdint>
#include <random>

#include "anosov/models.hpp"

namespace anosov {

// Deterministic sampling: uniforms are built from the raw 64-bit stream so
// results are identical across standard library implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  double unit() { return std::ldexp(static_cast<double>(eng_() >> 11), -53); }

  double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

ModelPoint random_point(const Model& m, Sampler& sampler);

}  // namespace anosov
