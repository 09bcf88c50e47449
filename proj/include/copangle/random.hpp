#ifndef COPANGLE_RANDOM_HPP
#define COPANGLE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "copangle/sym_matrix.hpp"

namespace copangle {

/// Seed for the sampling stream. Identical seeds give bit-identical streams
/// on every platform: the generator is mt19937_64 (fully specified by the
/// standard) and the normal variates come from an explicit Box-Muller
/// transform rather than the implementation-defined std distribution.
struct Seed {
  std::uint64_t value = 0;
};

/// Fixed 64-bit mix deriving the stream for a dependent task (e.g. search
/// start i from a run seed): splitmix64(seed + (index+1) * 0x9E3779B97F4A7C15).
Seed child_seed(Seed seed, std::uint64_t index);

/// Deterministic standard-normal stream.
class GaussianSampler {
 public:
  explicit GaussianSampler(Seed seed) : gen_(seed.value) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Uniform sample on the unit sphere of symmetric matrices of the given
/// order. The isometric coordinates (a_ii, sqrt(2) a_ij for i<j) are drawn
/// standard-normal and normalized, so Frobenius geometry matches the flat
/// geometry of the coordinate vector.
SymMatrix random_unit_symmetric(int order, Seed seed);
SymMatrix random_unit_symmetric(int order, GaussianSampler& sampler);

}  // namespace copangle

#endif  // COPANGLE_RANDOM_HPP
