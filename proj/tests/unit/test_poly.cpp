#include <complex>

#include "doctest.h"
#include "holomult/linsolve.hpp"
#include "holomult/poly.hpp"
#include "oracles.hpp"

using namespace hlm;
using oracle::E;

TEST_SUITE("scalar") {
  TEST_CASE("gaussian rationals obey the field laws") {
    oracle::Gen gen(11);
    for (int k = 0; k < 200; ++k) {
      const GaussRat a = gen.gauss(), b = gen.gauss(), c = gen.gauss();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == GaussRat(1));
    }
  }

  TEST_CASE("canonical form and text") {
    CHECK(GaussRat(Rational(2, 4)).to_string() == "1/2");
    CHECK(GaussRat::i().to_string() == "i");
    CHECK((-GaussRat::i()).to_string() == "-i");
    CHECK(GaussRat(Rational(1, 2), Rational(3)).to_string() == "1/2+3*i");
    CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
    CHECK_THROWS_AS(GaussRat(0).inverse(), DomainError);
  }

  TEST_CASE("square roots in Q(i)") {
    CHECK(gauss_sqrt(GaussRat(4)) == GaussRat(2));
    CHECK(gauss_sqrt(GaussRat(-1)) == GaussRat::i());
    CHECK(gauss_sqrt(GaussRat(Rational(0), Rational(2))) == GaussRat(1, 1));  // (1+i)^2 = 2i
    CHECK_FALSE(gauss_sqrt(GaussRat(2)).has_value());
    oracle::Gen gen(12);
    for (int k = 0; k < 100; ++k) {
      const GaussRat a = gen.gauss();
      const auto r = gauss_sqrt(a * a);
      REQUIRE(r.has_value());
      CHECK(*r * *r == a * a);
    }
  }
}

TEST_SUITE("poly_core") {
  TEST_CASE("poly_arith examples") {
    CHECK(poly_arith(E("z1 + i", 1), E("z1 - i", 1), PolyOp::mul) == E("z1^2 + 1", 1));
    const CPoly p = E("3*z1^2 - i*z1 + 2", 1);
    CHECK(poly_arith(CPoly(1), p, PolyOp::add) == p);
    CHECK(poly_arith(E("z1*z2", 3), E("z1*z2*z3", 3), PolyOp::mul) ==
          oracle::mul(E("z1*z2", 3), E("z1*z2*z3", 3)));
    CHECK(poly_arith(p, p, PolyOp::sub).is_zero());
    CHECK_THROWS_AS(poly_arith(E("z1", 1), E("z1", 2), PolyOp::add), DimensionError);
  }

  TEST_CASE("products and sums match the schoolbook oracle") {
    oracle::Gen gen(21);
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
      const CPoly a = gen.poly(n, 4), b = gen.poly(n, 4);
      CHECK(a * b == oracle::mul(a, b));
      CHECK(a + b == oracle::add(a, b));
      CHECK(a - b == oracle::sub(a, b));
    }
  }

  TEST_CASE("canonical term order is graded lex with z1 > z2 > ...") {
    const CPoly p = E("z2 + z1 + z1*z2 + z3^2 + 1", 3);
    CHECK(to_string(p) == "z1*z2 + z3^2 + z1 + z2 + 1");
    CHECK(p.leading_term().first == Monomial({1, 1, 0}));
  }

  TEST_CASE("partial_derive examples") {
    CHECK(partial_derive(E("z1^2", 1), 0) == E("2*z1", 1));
    CHECK(partial_derive(E("z1*z3 - 2*z2", 3), 2) == E("z1", 3));
    CHECK(partial_derive(E("7 + 3*i", 2), 1).is_zero());
    CHECK_THROWS_AS(partial_derive(E("z1", 2), 2), DomainError);
  }

  TEST_CASE("Leibniz rule and oracle derivative") {
    oracle::Gen gen(22);
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
      const CPoly a = gen.poly(n, 4), b = gen.poly(n, 4);
      const std::size_t v = static_cast<std::size_t>(gen.integer(0, static_cast<long>(n) - 1));
      CHECK(partial_derive(a * b, v) == partial_derive(a, v) * b + a * partial_derive(b, v));
      CHECK(partial_derive(a, v) == oracle::d(a, v));
    }
  }

  TEST_CASE("exact_divide examples") {
    CHECK(exact_divide(E("z1^2*z2", 2), E("z1", 2)) == E("z1*z2", 2));
    CHECK(exact_divide(E("z1^2 - 1", 1), E("z1 - 1", 1)) == E("z1 + 1", 1));
    CHECK_FALSE(exact_divide(E("z1*z2 + 1", 2), E("z1", 2)).has_value());
    CHECK_THROWS_AS(exact_divide(E("z1", 1), CPoly(1)), DomainError);
  }

  TEST_CASE("exact_divide recovers multiplied-back quotients") {
    oracle::Gen gen(23);
    for (int k = 0; k < 150; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
      const CPoly q = gen.poly(n, 3), den = gen.nonzero_poly(n, 2);
      const auto got = exact_divide(oracle::mul(q, den), den);
      REQUIRE(got.has_value());
      CHECK(*got == q);
      const CPoly num = gen.poly(n, 3);
      if (const auto r = exact_divide(num, den)) CHECK(oracle::mul(*r, den) == num);
    }
  }

  TEST_CASE("evaluate examples") {
    const std::complex<double> i(0, 1);
    const std::vector<std::complex<double>> at_i{i};
    CHECK(std::abs(evaluate(E("z1^2 + 1", 1), at_i)) < 1e-15);
    const std::vector<std::complex<double>> p123{1.0, 2.0, 3.0};
    CHECK(std::abs(evaluate(E("z1*z2*z3", 3), p123) - 6.0) < 1e-15);
    const std::vector<std::complex<double>> q{2.0, 1.0, -1.0};
    CHECK(std::abs(evaluate(E("z1^2 + 4*z2*z3", 3), q)) < 1e-15);
    CHECK_THROWS_AS(evaluate(E("z1", 2), at_i), DimensionError);
  }

  TEST_CASE("evaluation agrees with the term-by-term oracle") {
    oracle::Gen gen(24);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
      const CPoly p = gen.poly(n, 5, 8);
      std::vector<GaussRat> z;
      std::vector<std::complex<double>> zc;
      for (std::size_t v = 0; v < n; ++v) {
        z.push_back(gen.gauss());
        zc.push_back(z.back().to_complex());
      }
      const GaussRat exact = oracle::eval(p, z);
      CHECK(evaluate_exact(p, z) == exact);
      CHECK(std::abs(evaluate(p, zc) - exact.to_complex()) < 1e-9 * (1 + std::abs(exact.to_complex())));
    }
  }

  TEST_CASE("conjugate") {
    CHECK(conjugate(E("i*z1", 1)) == E("-i*z1", 1));
    CHECK(conjugate(E("3*z1^2 - 1/2", 1)) == E("3*z1^2 - 1/2", 1));
    oracle::Gen gen(25);
    for (int k = 0; k < 50; ++k) {
      const CPoly p = gen.poly(3, 3);
      CHECK(conjugate(conjugate(p)) == p);
    }
  }

  TEST_CASE("realify_split examples") {
    auto s = realify_split(E("z1", 1));
    CHECK(to_string(s.re) == "x1");
    CHECK(to_string(s.im) == "y1");
    s = realify_split(E("z1^2", 1));
    CHECK(to_string(s.re) == "x1^2 - y1^2");
    CHECK(to_string(s.im) == "2*x1*y1");
    // z^i z^j pattern.
    s = realify_split(E("z1*z2", 2));
    CHECK(to_string(s.re) == "x1*x2 - y1*y2");
    CHECK(to_string(s.im) == "x1*y2 + x2*y1");
  }

  TEST_CASE("realify_split is a ring homomorphism") {
    oracle::Gen gen(26);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
      const CPoly a = gen.poly(n, 3), b = gen.poly(n, 3);
      const auto sa = realify_split(a), sb = realify_split(b), sab = realify_split(a * b);
      CHECK(sab.re == sa.re * sb.re - sa.im * sb.im);
      CHECK(sab.im == sa.re * sb.im + sa.im * sb.re);
      const auto sum = realify_split(a + b);
      CHECK(sum.re == sa.re + sb.re);
      CHECK(sum.im == sa.im + sb.im);
    }
  }

  TEST_CASE("realify_split agrees with evaluation at x + i y") {
    oracle::Gen gen(27);
    for (int k = 0; k < 50; ++k) {
      const CPoly p = gen.poly(2, 4, 6);
      const auto s = realify_split(p);
      std::vector<GaussRat> z;
      std::vector<double> xy(4);
      for (std::size_t v = 0; v < 2; ++v) {
        const long x = gen.integer(-3, 3), y = gen.integer(-3, 3);
        z.push_back(GaussRat(Rational(x), Rational(y)));
        xy[v] = static_cast<double>(x);
        xy[v + 2] = static_cast<double>(y);
      }
      const GaussRat value = oracle::eval(p, z);
      CHECK(evaluate(s.re, xy) == doctest::Approx(value.re().get_d()));
      CHECK(evaluate(s.im, xy) == doctest::Approx(value.im().get_d()));
    }
  }

  TEST_CASE("text round trip through the parser") {
    oracle::Gen gen(28);
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
      const CPoly p = gen.poly(n, 4, 6);
      CHECK(parse_expr(to_string(p), n) == p);
    }
    CHECK(to_string(CPoly(2)) == "0");
    CHECK(leading_terms(E("z1^3 + z1^2 + z1 + 1", 1), 2) == "z1^3 + z1^2 + ...");
  }
}

TEST_SUITE("linsolve") {
  TEST_CASE("identity system returns b") {
    const GaussMatrix I{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const GaussVector b{GaussRat(2), GaussRat::i(), GaussRat(Rational(1, 3))};
    const auto s = solve_linear(I, b);
    CHECK(s.kind == LinearSolution::Kind::unique);
    CHECK(s.particular == b);
  }

  TEST_CASE("rank-one family") {
    const GaussMatrix A{{GaussRat(1), GaussRat::i()}, {-GaussRat::i(), GaussRat(1)}};
    const auto s = solve_linear(A, {GaussRat(0), GaussRat(0)});
    CHECK(s.kind == LinearSolution::Kind::family);
    CHECK(s.rank == 1);
    REQUIRE(s.nullspace.size() == 1);
    CHECK(mat_vec(A, s.nullspace[0]) == GaussVector{GaussRat(0), GaussRat(0)});
    // t (i, -1) spans the same line.
    const auto& v = s.nullspace[0];
    CHECK(v[0] * GaussRat(-1) - v[1] * GaussRat::i() == GaussRat(0));
  }

  TEST_CASE("inconsistent system") {
    const auto s = solve_linear({{GaussRat(1)}, {GaussRat(1)}}, {GaussRat(1), GaussRat(2)});
    CHECK(s.kind == LinearSolution::Kind::inconsistent);
    CHECK_THROWS_AS(solve_linear({{GaussRat(1)}}, {GaussRat(1), GaussRat(2)}), DimensionError);
  }

  TEST_CASE("solutions satisfy A m = b under back-substitution") {
    oracle::Gen gen(31);
    for (int k = 0; k < 200; ++k) {
      const std::size_t r = static_cast<std::size_t>(gen.integer(1, 5)), c = static_cast<std::size_t>(gen.integer(1, 5));
      GaussMatrix A(r, GaussVector(c));
      for (auto& row : A)
        for (auto& x : row) x = gen.coin(0.3) ? GaussRat(0) : gen.gauss();
      GaussVector x0(c);
      for (auto& x : x0) x = gen.gauss();
      const GaussVector b = mat_vec(A, x0);
      const auto s = solve_linear(A, b);
      REQUIRE(s.kind != LinearSolution::Kind::inconsistent);
      CHECK(mat_vec(A, s.particular) == b);
      CHECK(s.rank + s.nullspace.size() == c);
      for (const auto& v : s.nullspace) CHECK(mat_vec(A, v) == GaussVector(r));
    }
  }

  TEST_CASE("inverse and determinant") {
    const GaussMatrix A{{GaussRat(2), GaussRat::i()}, {GaussRat(1), GaussRat(3)}};
    const auto inv = mat_inverse(A);
    REQUIRE(inv.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        GaussRat s;
        for (std::size_t k = 0; k < 2; ++k) s += A[i][k] * inv[k][j];
        CHECK(s == GaussRat(i == j ? 1 : 0));
      }
    CHECK(determinant(A) == GaussRat(6) - GaussRat::i());
    CHECK(mat_inverse({{GaussRat(1), GaussRat(2)}, {GaussRat(2), GaussRat(4)}}).empty());
  }
}
