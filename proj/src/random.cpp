#include "copangle/random.hpp"

#include <cmath>
#include <numbers>

namespace copangle {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Seed child_seed(Seed seed, std::uint64_t index) {
  return Seed{splitmix64(seed.value + (index + 1) * kGolden)};
}

double GaussianSampler::uniform01() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double GaussianSampler::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0,1] keeps the log finite.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

SymMatrix random_unit_symmetric(int order, Seed seed) {
  GaussianSampler sampler(seed);
  return random_unit_symmetric(order, sampler);
}

SymMatrix random_unit_symmetric(int order, GaussianSampler& sampler) {
  if (order < 1) throw DomainError("matrix order must be >= 1");
  const std::size_t m = static_cast<std::size_t>(order) * (order + 1) / 2;
  std::vector<double> coords(m);
  double nrm = 0.0;
  do {
    nrm = 0.0;
    for (double& c : coords) {
      c = sampler.normal();
      nrm += c * c;
    }
    nrm = std::sqrt(nrm);
  } while (nrm < 1e-100);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  SymMatrix out(order);
  std::size_t k = 0;
  for (int i = 0; i < order; ++i) {
    out(i, i) = coords[k++] / nrm;
    for (int j = i + 1; j < order; ++j) {
      out(i, j) = coords[k++] / nrm * inv_sqrt2;
    }
  }
  return out;
}

}  // namespace copangle
