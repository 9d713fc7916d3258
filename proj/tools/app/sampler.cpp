#include "app/sampler.hpp"

#include "rhoqes/geometry.hpp"


namespace rhoqes::app {

namespace {

// FNV-1a, so the stream offset does not depend on std::hash.
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Sampler::Sampler(std::uint64_t seed, std::string_view stream) : rng_(seed ^ fnv1a(stream)) {}

int Sampler::integer(int lo, int hi) {
  // Modulo draw instead of uniform_int_distribution, whose algorithm is implementation-defined.
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Rational Sampler::positive(int num_max, int den_max) {
  Rational r(integer(1, num_max), integer(1, den_max));
  r.canonicalize();
  return r;
}

std::array<Rational, 4> Sampler::masses() {
  return {positive(), positive(), positive(), positive()};
}

GaugeParams Sampler::gauge() {
  GaugeParams gp;
  for (auto& g : gp.g) g = positive(7, 4);
  gp.omega = positive(5, 3);
  return gp;
}

Rational Sampler::dimension() {
  static const Rational choices[] = {Rational(3), Rational(5), Rational(7, 2)};
  return choices[integer(0, 2)];
}

Point Sampler::interior_point() {
  for (;;) {
    std::array<std::array<int, 3>, 4> r{};
    for (auto& p : r)
      for (auto& c : p) c = integer(-6, 6);
    const Rational scale(1, integer(1, 3) * integer(1, 3));
    Point x;
    for (int k = 0; k < kVars; ++k) {
      const auto [i, j] = kPairs[k];
      int s = 0;
      for (int c = 0; c < 3; ++c) s += (r[i][c] - r[j][c]) * (r[i][c] - r[j][c]);
      x[k] = Rational(s) * scale;
    }
    if (domain_check(x) == Domain::interior) return x;
  }
}

}  // namespace rhoqes::app
