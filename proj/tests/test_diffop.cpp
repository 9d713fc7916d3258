#include "oracles.hpp"

#include "rhoqes/diffop.hpp"
#include "rhoqes/errors.hpp"

#include <doctest.h>

using namespace rhoqes;

namespace {

DiffOperator random_op(oracle::Rng& rng, int order) {
  DiffOperator op;
  for (int t = 0; t < 4; ++t) {
    MultiIndex a;
    const int v = rng.integer(0, kVars - 1);
    a.e[v] = static_cast<std::uint8_t>(rng.integer(0, order));
    if (order > 1 && rng.integer(0, 1)) a.e[(v + 1) % kVars] += 1;
    op.add_term(a, oracle::random_poly(rng, 2, 2));
  }
  return op;
}

}  // namespace

TEST_CASE("composition agrees with successive application") {
  oracle::Rng rng(1);
  for (int t = 0; t < 15; ++t) {
    const auto a = random_op(rng, 2), b = random_op(rng, 2);
    const auto f = oracle::random_poly(rng, 4, 5);
    CHECK((a * b)(f) == a(b(f)));
    CHECK(compose(a, b)(f) == apply(a, apply(b, f)));
  }
}

TEST_CASE("commutator: canonical pair, antisymmetry, Jacobi identity") {
  const auto x = DiffOperator::multiplication(Polynomial::var(0));
  const auto d = DiffOperator::d(0);
  CHECK(commutator(d, x) == DiffOperator::identity());

  oracle::Rng rng(2);
  for (int t = 0; t < 5; ++t) {
    const auto a = random_op(rng, 1), b = random_op(rng, 2), c = random_op(rng, 1);
    CHECK((commutator(a, b) + commutator(b, a)).is_zero());
    const auto j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    CHECK(j.is_zero());
  }
}

TEST_CASE("order of a commutator of first-order operators stays first order") {
  oracle::Rng rng(4);
  const auto a = random_op(rng, 1), b = random_op(rng, 1);
  CHECK(commutator(a, b).order() <= 1);
}

TEST_CASE("exponential conjugation: e^{-phi} op e^{phi} acts on polynomials") {
  // Oracle: for first and second derivatives, d(e^phi f) = e^phi (f' + phi' f).
  const auto u = Polynomial::var(0), v = Polynomial::var(1);
  const Polynomial phi = Rational(-2) * u - Rational(1, 3) * v;
  const auto op = DiffOperator::dd(0, 0) + DiffOperator::d(1, u);
  const auto conj = conjugate_exponential(op, phi);
  oracle::Rng rng(6);
  for (int t = 0; t < 5; ++t) {
    const auto f = oracle::random_poly(rng, 3, 4);
    const auto p0 = partial_derivative(phi, 0), p1 = partial_derivative(phi, 1);
    const Polynomial fx = partial_derivative(f, 0) + p0 * f;
    const Polynomial fxx = partial_derivative(fx, 0) + p0 * fx;
    const Polynomial fy = partial_derivative(f, 1) + p1 * f;
    CHECK(conj(f) == fxx + u * fy);
  }
  CHECK(exponential_ratio(op, phi) == Polynomial(4) - Rational(1, 3) * u);
}

TEST_CASE("apply_to_exp_product matches the conjugated operator at a point") {
  oracle::Rng rng(9);
  const auto op = random_op(rng, 2);
  const auto phi = oracle::random_poly(rng, 1, 3);
  const auto p = oracle::random_poly(rng, 2, 3);
  Point x;
  for (auto& e : x) e = rng.signed_rational();
  CHECK(apply_to_exp_product(op, p, phi, x) == conjugate_exponential(op, phi)(p).eval(x));
}

TEST_CASE("apply_to_power_product: x^a under x^2 d^2") {
  // x^2 d^2 x^a = a(a-1) x^a
  const auto op = DiffOperator::dd(0, 0, Polynomial::var(0) * Polynomial::var(0));
  Point x{};
  x[0] = 3;
  const Rational a(5, 2);
  CHECK(apply_to_power_product(op, {{Polynomial::var(0), a}}, x) == a * (a - 1));
}

TEST_CASE("matrix_on_basis detects leaving the flag") {
  const auto raise = DiffOperator::multiplication(Polynomial::var(0));
  CHECK_THROWS_AS(matrix_on_basis(raise, 2), FlagViolation);
  const auto euler = DiffOperator::d(0, Polynomial::var(0)) + DiffOperator::d(1, Polynomial::var(1));
  const auto om = matrix_on_basis(euler, 3);
  CHECK(om.basis.size() == 84);
  for (std::size_t j = 0; j < om.basis.size(); ++j)
    CHECK(om.entries(j, j) == om.basis[j].e[0] + om.basis[j].e[1]);
}
