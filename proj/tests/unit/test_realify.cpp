#include <complex>

#include "doctest.h"
#include "holomult/realify.hpp"
#include "oracles.hpp"

using namespace hlm;
using oracle::E;
using oracle::F;

namespace {

using cd = std::complex<double>;

// Real polynomial on R^{2n}, written with z1..z_{2n} standing for
// x1..xn, y1..yn. Coefficients must be real.
RPoly R(const char* text, std::size_t n) {
  const CPoly p = E(text, 2 * n);
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, c.re());
  return RPoly::from_terms(2 * n, terms);
}

RealVectorField RF(std::size_t n, std::initializer_list<const char*> comps) {
  std::vector<RPoly> out;
  for (const char* c : comps) out.push_back(R(c, n));
  return RealVectorField(out);
}

// Random point of R^{2n} and the matching point of C^n.
struct Point {
  std::vector<double> real;
  std::vector<cd> z;
};

Point random_point(oracle::Gen& gen, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  Point p;
  p.real.resize(2 * n);
  for (auto& v : p.real) v = u(gen.engine());
  for (std::size_t k = 0; k < n; ++k) p.z.emplace_back(p.real[k], p.real[n + k]);
  return p;
}

double close(double a, double b) { return std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a) + std::abs(b)); }

}  // namespace

TEST_SUITE("realify") {
  TEST_CASE("realify_field examples") {
    const RealFieldPair unit = realify_field(F({"1"}));
    CHECK(unit.Z == RF(1, {"1", "0"}));
    CHECK(unit.W == RF(1, {"0", "-1"}));
    const RealFieldPair rot = realify_field(F({"i*z1"}));
    CHECK(rot.Z == RF(1, {"-z2", "z1"}));
    CHECK(real_divergence(rot.Z).is_zero());
    const RealFieldPair scale = realify_field(F({"z1"}));
    CHECK(real_divergence(scale.Z) == R("2", 1));
  }

  TEST_CASE("realify_field matches complex evaluation") {
    oracle::Gen gen(100);
    for (int k = 0; k < 40; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
      const VectorField Z = k == 0 ? F({"z1^2", "z2*(z1 + z2 + z3)", "-z2*z3"}) : gen.field(n, 3);
      const std::size_t m = Z.dim();
      const RealFieldPair pr = realify_field(Z);
      const Point p = random_point(gen, m);
      for (std::size_t j = 0; j < m; ++j) {
        const cd v = evaluate(Z[j], p.z);
        CHECK(close(evaluate(pr.Z[j], p.real), v.real()));
        CHECK(close(evaluate(pr.Z[m + j], p.real), v.imag()));
        CHECK(close(evaluate(pr.W[j], p.real), v.imag()));
        CHECK(close(evaluate(pr.W[m + j], p.real), -v.real()));
      }
    }
  }

  TEST_CASE("modsq") {
    CHECK(modsq(E("z1", 1)) == R("z1^2 + z2^2", 1));
    CHECK(modsq(E("3 - 4*i", 2)) == R("25", 2));
    CHECK(modsq(E("z1^2*z2", 3)) == R("(z1^2 + z4^2)^2 * (z2^2 + z5^2)", 3));
  }

  TEST_CASE("real_divergence and real_lm_residual") {
    CHECK(real_divergence(RF(1, {"-z2", "z1"})).is_zero());
    CHECK(real_divergence(RF(1, {"z1", "z2"})) == R("2", 1));
    CHECK(real_lm_residual(R("1", 1), RF(1, {"-z2", "z1"})).is_zero());
    CHECK(real_lm_residual(R("1", 1), RF(1, {"z1", "z2"})) == R("2", 1));
    // Real part of the complex divergence, doubled.
    oracle::Gen gen(101);
    for (int k = 0; k < 20; ++k) {
      const VectorField Z = gen.field(2, 3);
      CHECK(real_divergence(realify_field(Z).Z) == realify_split(divergence(Z, VolumeForm(2))).re.scaled(Rational(2)));
    }
  }

  TEST_CASE("realify_metric") {
    const RealMetric e = realify_metric(HoloMetric::euclidean(2));
    const RationalMatrix he = {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}};
    const RationalMatrix ke = {{0, 0, -2, 0}, {0, 0, 0, -2}, {-2, 0, 0, 0}, {0, -2, 0, 0}};
    CHECK(e.h == he);
    CHECK(e.k == ke);
    GaussMatrix gi = {{GaussRat::i(), GaussRat(0)}, {GaussRat(0), GaussRat::i()}};
    const RealMetric m = realify_metric(HoloMetric(gi));
    CHECK(m.h == ke);
    const RationalMatrix kd = {{-2, 0, 0, 0}, {0, -2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
    CHECK(m.k == kd);

    // Inverses and recombination g = (h - i k) / 2 on the x block.
    oracle::Gen gen(102);
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
      GaussMatrix M(n, GaussVector(n)), g(n, GaussVector(n));
      for (auto& row : M)
        for (auto& x : row) x = gen.gauss();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t l = 0; l < n; ++l) g[i][j] += M[l][i] * M[l][j];
      std::optional<HoloMetric> hg;
      try {
        hg.emplace(g);
      } catch (const DomainError&) {
        continue;
      }
      const RealMetric rm = realify_metric(*hg);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          CHECK(GaussRat(rm.h[i][j] / 2, -rm.k[i][j] / 2) == g[i][j]);
      for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t b = 0; b < 2 * n; ++b) {
          Rational sh, sk;
          for (std::size_t c = 0; c < 2 * n; ++c) {
            sh += rm.h[a][c] * rm.hinv[c][b];
            sk += rm.k[a][c] * rm.kinv[c][b];
          }
          CHECK(sh == Rational(a == b ? 1 : 0));
          CHECK(sk == Rational(a == b ? 1 : 0));
        }
    }
  }

  TEST_CASE("real_gradient") {
    const RealMetric e = realify_metric(HoloMetric::euclidean(1));
    CHECK(real_gradient(R("z1", 1), e, WhichMetric::h) == RF(1, {"1/2", "0"}));
    CHECK(real_gradient(R("7", 1), e, WhichMetric::k).is_zero());
    CHECK(real_gradient(R("7", 1), e, WhichMetric::h).is_zero());
    // grad_h |z1|^2 = (x, -y): the h-gradient of |f|^2 is Re/Im of conj(f) grad f.
    CHECK(real_gradient(modsq(E("z1", 1)), e, WhichMetric::h) == RF(1, {"z1", "-z2"}));
  }

  TEST_CASE("realify_poisson") {
    Bivector one(2);
    one.add(0, 1, E("1", 2));
    const RealPoissonPair r = realify_poisson(one);
    const Rational q(1, 4);
    CHECK(r.R(0, 1) == RPoly::constant(4, q));
    CHECK(r.R(1, 0) == RPoly::constant(4, -q));
    CHECK(r.R(2, 3) == RPoly::constant(4, -q));
    CHECK(r.R(0, 3).is_zero());
    CHECK(r.I(0, 3) == RPoly::constant(4, -q));
    Bivector im(2);
    im.add(0, 1, E("i", 2));
    const RealPoissonPair ri = realify_poisson(im);
    CHECK(ri.R(0, 1).is_zero());
    CHECK(ri.R(0, 3) == RPoly::constant(4, q));
    CHECK(ri.R(3, 0) == RPoly::constant(4, -q));

    const Bivector cubic = oracle::bivector3(E("2*z3 - z1*z2", 3), E("z1*z3 - 2*z2", 3), E("2*z1 - z2*z3", 3));
    const Bivector sl2 = oracle::bivector3(E("2*z2", 3), E("-2*z3", 3), E("z1", 3));
    for (const Bivector& P : {cubic, sl2}) {
      const RealPoissonPair rp = realify_poisson(P);
      for (const auto& c : real_jacobiator(rp.R)) CHECK(c.is_zero());
      for (const auto& c : real_jacobiator(rp.I)) CHECK(c.is_zero());
    }
    CHECK(real_modular_field(realify_poisson(cubic).R).is_zero());
    CHECK(real_modular_field(realify_poisson(cubic).I).is_zero());
  }

  TEST_CASE("realify_poisson matches complex evaluation") {
    oracle::Gen gen(103);
    for (int t = 0; t < 20; ++t) {
      const Bivector P = gen.bivector(3, 2);
      const RealPoissonPair rp = realify_poisson(P);
      const Point p = random_point(gen, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          const cd v = i == j ? cd{} : evaluate(P(i, j), p.z);
          CHECK(close(4 * evaluate(rp.R(i, j), p.real), v.real()));
          CHECK(close(4 * evaluate(rp.R(i, 3 + j), p.real), v.imag()));
          CHECK(close(4 * evaluate(rp.R(3 + i, 3 + j), p.real), -v.real()));
          CHECK(close(4 * evaluate(rp.I(i, j), p.real), v.imag()));
          CHECK(close(4 * evaluate(rp.I(i, 3 + j), p.real), -v.real()));
          CHECK(close(4 * evaluate(rp.I(3 + i, 3 + j), p.real), -v.imag()));
        }
    }
  }

  TEST_CASE("real_hamiltonian") {
    const Bivector sl2 = oracle::bivector3(E("2*z2", 3), E("-2*z3", 3), E("z1", 3));
    const RealPoissonPair rp = realify_poisson(sl2);
    const RealSplit c = realify_split(E("z1^2 + 4*z2*z3", 3));
    CHECK(real_hamiltonian(c.re, rp.R).is_zero());
    CHECK(real_hamiltonian(c.im, rp.R).is_zero());
    CHECK(real_hamiltonian(c.re, rp.I).is_zero());
    Bivector one(2);
    one.add(0, 1, E("1", 2));
    const RealVectorField X = real_hamiltonian(R("z1", 2), realify_poisson(one).R);
    CHECK(X == RF(2, {"0", "1/4", "0", "0"}));
  }

  TEST_CASE("thlm") {
    // Last multipliers: divergence-free field with a first integral, and
    // z1 for reduced Hamiltonian fields.
    const VectorField free = F({"z2", "z1"});
    const TheoremCheck a = check_thlm(E("z1^2 - z2^2", 2), free, VolumeForm(2));
    CHECK(a.consistent());
    CHECK(a.complex_zero());
    CHECK(a.real_zero());
    const VectorField red = F({"z1*(2*z2 + i)", "-2*(z2^2 + i*z2 + z1) - z1"});
    REQUIRE(is_last_multiplier(E("z1", 2), red, VolumeForm(2)).holds);
    const TheoremCheck b = check_thlm(E("z1", 2), red, VolumeForm(2));
    CHECK(b.consistent());
    CHECK(b.real_zero());
    const TheoremCheck c = check_thlm(E("z1", 1), F({"z1"}), VolumeForm(1));
    CHECK(c.consistent());
    CHECK_FALSE(c.real_zero());
    CHECK_THROWS_AS(check_thlm(CPoly(1), F({"z1"}), VolumeForm(1)), DomainError);

    oracle::Gen gen(104);
    for (int k = 0; k < 40; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
      const TheoremCheck t = check_thlm(gen.nonzero_poly(n, 2), gen.field(n, 2), VolumeForm(n, gen.nonzero_gauss()));
      CHECK(t.consistent());
    }
  }

  TEST_CASE("tg") {
    const HoloMetric e1 = HoloMetric::euclidean(1);
    const TheoremCheck t = check_tg(E("z1", 1), E("z1", 1), e1);
    CHECK(t.consistent());
    CHECK(t.complex_zero());
    const TheoremCheck u = check_tg(E("1", 1), E("z1", 1), e1);
    CHECK(u.consistent());
    CHECK_FALSE(u.complex_zero());
    oracle::Gen gen(105);
    for (int k = 0; k < 20; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
      CHECK(check_tg(gen.nonzero_poly(n, 2), gen.nonzero_poly(n, 2), HoloMetric::euclidean(n)).consistent());
    }
  }

  TEST_CASE("th1 and th2") {
    const Bivector cubic = oracle::bivector3(E("2*z3 - z1*z2", 3), E("z1*z3 - 2*z2", 3), E("2*z1 - z2*z3", 3));
    const Bivector solvable = oracle::bivector3(E("z2", 3), E("z3", 3), E("0", 3));
    const CPoly C = E("z1^2 + z2^2 + z3^2 - z1*z2*z3", 3);
    const TheoremCheck a = check_th1(C, E("z1 + z2*z3", 3), cubic, VolumeForm(3));
    CHECK(a.consistent());
    CHECK(a.complex_zero());
    const TheoremCheck b = check_th1(E("z1", 3), E("z2", 3), solvable, VolumeForm(3));
    CHECK(b.consistent());
    CHECK_FALSE(b.complex_zero());
    CHECK(check_th2(E("z1*z2 - z3", 3), cubic, VolumeForm(3)).complex_zero());
    const TheoremCheck s = check_th2(E("z1", 3), solvable, VolumeForm(3));
    CHECK(s.consistent());
    CHECK_FALSE(s.real_zero());
    CHECK(check_th2(E("z2 + 1", 3), solvable, VolumeForm(3)).real_zero());

    oracle::Gen gen(106);
    for (int k = 0; k < 20; ++k) {
      const Bivector P = gen.bivector(3, 1, 2);
      CHECK(check_th1(gen.nonzero_poly(3, 2), gen.nonzero_poly(3, 2), P, VolumeForm(3)).consistent());
      CHECK(check_th2(gen.nonzero_poly(3, 2), P, VolumeForm(3)).consistent());
    }
  }

  TEST_CASE("realified volume factor") {
    oracle::Gen gen(107);
    for (std::size_t n = 1; n <= 4; ++n) {
      const GaussRat c = gen.nonzero_gauss();
      GaussRat expected(c.re() * c.re() + c.im() * c.im());
      for (std::size_t k = 0; k < n; ++k) expected *= GaussRat(Rational(0), Rational(-2));
      CHECK(realified_volume_factor(VolumeForm(n, c)) == expected);
    }
  }
}
