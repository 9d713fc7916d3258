#pragma once

#include "rhoqes/oscillator.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace rhoqes::app {

// Seeded random draws of exact inputs.  Integer distributions only, so draws are
// reproducible across platforms for a fixed seed.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view stream);

  int integer(int lo, int hi);
  Rational positive(int num_max = 9, int den_max = 5);
  std::array<Rational, 4> masses();
  MassConfig mass_config() { return MassConfig::finite(masses()); }
  GaugeParams gauge();
  Rational dimension();  // 3, 5 or 7/2
  // rho_ij of four random lattice points in 3D, scaled by 1/q^2; interior of the domain.
  Point interior_point();

 private:
  std::mt19937_64 rng_;
};

}  // namespace rhoqes::app
