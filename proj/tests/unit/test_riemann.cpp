#include "doctest.h"
#include "holomult/riemann.hpp"
#include "oracles.hpp"

using namespace hlm;
using oracle::E;
using oracle::F;

namespace {

GaussMatrix mat(std::initializer_list<std::initializer_list<GaussRat>> rows) {
  GaussMatrix m;
  for (const auto& r : rows) m.emplace_back(r);
  return m;
}

// M^T M for a random invertible M: symmetric with a square determinant.
HoloMetric random_metric(oracle::Gen& gen, std::size_t n) {
  for (;;) {
    GaussMatrix M(n, GaussVector(n));
    for (auto& row : M)
      for (auto& x : row) x = gen.gauss();
    GaussMatrix g(n, GaussVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) g[i][j] += M[k][i] * M[k][j];
    try {
      return HoloMetric(g);
    } catch (const DomainError&) {
    }
  }
}

// Sum ginv^{ij} d_i d_j f, written out independently of laplacian().
CPoly laplacian_oracle(const CPoly& f, const HoloMetric& g) {
  CPoly acc(f.nvars());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      acc = oracle::add(acc, oracle::d(oracle::d(f, i), j).scaled(g.ginv()[i][j]));
  return acc;
}

}  // namespace

TEST_SUITE("riemann") {
  TEST_CASE("HoloMetric validation") {
    const HoloMetric e = HoloMetric::euclidean(3);
    CHECK(e.is_euclidean());
    CHECK(e.vol_factor() == GaussRat(1));
    const HoloMetric d(mat({{GaussRat(1), GaussRat(0)}, {GaussRat(0), GaussRat(4)}}));
    CHECK(d.vol_factor() == GaussRat(2));
    // det = -1, c = i with the canonical sign.
    const HoloMetric h(mat({{GaussRat(0), GaussRat(1)}, {GaussRat(1), GaussRat(0)}}));
    CHECK(h.vol_factor() == GaussRat(Rational(0), Rational(1)));
    CHECK(h.vol_factor() * h.vol_factor() == GaussRat(-1));
    CHECK_THROWS_AS(HoloMetric(mat({{GaussRat(1), GaussRat(0)}, {GaussRat(0), GaussRat(2)}})), DomainError);
    CHECK_THROWS_AS(HoloMetric(mat({{GaussRat(1), GaussRat(1)}, {GaussRat(0), GaussRat(1)}})), DomainError);
    CHECK_THROWS_AS(HoloMetric(mat({{GaussRat(1), GaussRat(1)}, {GaussRat(1), GaussRat(1)}})), DomainError);

    oracle::Gen gen(70);
    for (int k = 0; k < 20; ++k) {
      const HoloMetric g = random_metric(gen, static_cast<std::size_t>(gen.integer(1, 3)));
      const std::size_t n = g.dim();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          GaussRat s;
          for (std::size_t l = 0; l < n; ++l) s += g.g()[i][l] * g.ginv()[l][j];
          CHECK(s == GaussRat(i == j ? 1 : 0));
        }
    }
  }

  TEST_CASE("gradient") {
    const HoloMetric e = HoloMetric::euclidean(3);
    CHECK(gradient(E("z1", 3), e) == F({"1", "0", "0"}));
    CHECK(gradient(E("z1^2 + z2^2 + z3^2", 3), e) == F({"2*z1", "2*z2", "2*z3"}));
    const HoloMetric h(mat({{GaussRat(0), GaussRat(1)}, {GaussRat(1), GaussRat(0)}}));
    CHECK(gradient(E("z1", 2), h) == F({"0", "1"}));

    // Defining identity g(W, grad f) = W(f) on coordinate fields.
    oracle::Gen gen(71);
    for (int k = 0; k < 30; ++k) {
      const HoloMetric g = random_metric(gen, static_cast<std::size_t>(gen.integer(1, 3)));
      const CPoly f = gen.poly(g.dim(), 3);
      for (std::size_t i = 0; i < g.dim(); ++i) {
        const VectorField W = VectorField::coordinate(g.dim(), i);
        CHECK(metric_pair(g, W, gradient(f, g)) == oracle::d(f, i));
      }
    }
  }

  TEST_CASE("laplacian") {
    const HoloMetric e2 = HoloMetric::euclidean(2);
    CHECK(laplacian(E("z1^2", 2), e2) == E("2", 2));
    CHECK(laplacian(E("z1*z2", 2), e2).is_zero());
    const HoloMetric d(mat({{GaussRat(1), GaussRat(0)}, {GaussRat(0), GaussRat(4)}}));
    CHECK(laplacian(E("z2^2", 2), d) == E("1/2", 2));
    oracle::Gen gen(72);
    for (int k = 0; k < 30; ++k) {
      const HoloMetric g = random_metric(gen, static_cast<std::size_t>(gen.integer(1, 3)));
      const CPoly f = gen.poly(g.dim(), 4);
      CHECK(laplacian(f, g) == laplacian_oracle(f, g));
      CHECK(laplacian(f, g) == divergence(gradient(f, g), g.volume()));
    }
  }

  TEST_CASE("gradient_lm_residual") {
    const HoloMetric e = HoloMetric::euclidean(2);
    // f linear, alpha a first integral of grad f = d1 + d2.
    CHECK(gradient_lm_residual(E("z1 - z2", 2), E("z1 + z2", 2), e).is_zero());
    // alpha = f with f^2 harmonic: f = z1 + i z2 gives f^2 harmonic.
    const CPoly f = E("z1 + i*z2", 2);
    CHECK(laplacian(f * f, e).is_zero());
    CHECK(gradient_lm_residual(f, f, e).is_zero());
    CHECK(gradient_lm_residual(E("1", 1), E("z1^2", 1), HoloMetric::euclidean(1)) == E("2", 1));
    // Agrees with the generic last-multiplier predicate on grad f.
    oracle::Gen gen(73);
    for (int k = 0; k < 30; ++k) {
      const HoloMetric g = random_metric(gen, 2);
      const CPoly a = gen.poly(2, 3), ff = gen.poly(2, 3);
      CHECK(gradient_lm_residual(a, ff, g) == is_last_multiplier(a, gradient(ff, g), g.volume()).residual);
    }
  }

  TEST_CASE("conformal_equivalence") {
    CHECK(conformal_equivalence(E("3", 2), F({"z1*z2", "z1 - 1"})).holds);
    CHECK(conformal_equivalence(E("z1", 2), F({"0", "z1"})).holds);
    CHECK_FALSE(conformal_equivalence(E("z1", 1), F({"z1"})).holds);
    CHECK_THROWS_AS(conformal_equivalence(CPoly(1), F({"z1"})), DomainError);
  }

  TEST_CASE("metric identities on random inputs") {
    oracle::Gen gen(74);
    const GaussRat half(Rational(1, 2));
    for (int k = 0; k < 60; ++k) {
      const HoloMetric g = random_metric(gen, static_cast<std::size_t>(gen.integer(1, 3)));
      const std::size_t n = g.dim();
      const CPoly f = gen.poly(n, 3), a = gen.poly(n, 3);
      // Product rule for the Laplacian.
      const CPoly lhs = metric_pair(g, gradient(f, g), gradient(a, g));
      const CPoly rhs = (laplacian(f * a, g) - f * laplacian(a, g) - a * laplacian(f, g)).scaled(half);
      CHECK(lhs == rhs);
      // alpha Delta alpha + g(grad alpha, grad alpha) = Delta(alpha^2) / 2.
      const CPoly c = a * laplacian(a, g) + metric_pair(g, gradient(a, g), gradient(a, g));
      CHECK(c.scaled(GaussRat(2)) == laplacian(a * a, g));
      CHECK(c.is_zero() == laplacian(a * a, g).is_zero());
    }
    // Mutual multipliers give a harmonic product: f = z1 + i z2, alpha = z1 - i z2
    // on euclidean C^2 are both harmonic with g(grad f, grad alpha) = 2.
    const HoloMetric e = HoloMetric::euclidean(3);
    const CPoly f = E("z1 + i*z2", 3), a = E("z3", 3);
    REQUIRE(gradient_lm_residual(a, f, e).is_zero());
    REQUIRE(gradient_lm_residual(f, a, e).is_zero());
    CHECK(laplacian(f * a, e).is_zero());
  }
}
