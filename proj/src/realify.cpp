#include "holomult/realify.hpp"

namespace hlm {

namespace {

// Complex-valued real polynomial re + i im on R^{2n}; used for quantities
// such as conj(f) G that are not holomorphic.
struct CPair {
  RPoly re;
  RPoly im;

  static CPair of(const CPoly& p) {
    auto s = realify_split(p);
    return {std::move(s.re), std::move(s.im)};
  }
  CPair conj() const { return {re, -im}; }
  friend CPair operator*(const CPair& a, const CPair& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

RationalMatrix zeros(std::size_t n) { return RationalMatrix(n, std::vector<Rational>(n, Rational(0))); }

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  RationalMatrix out = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

bool is_identity(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != Rational(i == j ? 1 : 0)) return false;
  return true;
}

// Realified field of a (1,0) field with coefficients w^j: (Re w, Im w), or
// (Im w, -Re w) when rotated.
RealVectorField realified(const std::vector<CPair>& w, bool rotated) {
  std::vector<RPoly> comps;
  for (const auto& c : w) comps.push_back(rotated ? c.im : c.re);
  for (const auto& c : w) comps.push_back(rotated ? -c.re : c.im);
  return RealVectorField(std::move(comps));
}

std::vector<CPair> conj_f_times(const CPoly& f, const VectorField& G) {
  const CPair fb = CPair::of(f).conj();
  std::vector<CPair> out;
  for (std::size_t j = 0; j < G.dim(); ++j) out.push_back(fb * CPair::of(G[j]));
  return out;
}

// F (X(u) + u div X) - u X(F).
RPoly cleared_quotient_residual(const RPoly& u, const RPoly& F, const RealVectorField& X) {
  return F * real_lm_residual(u, X) - u * apply_real_field(X, F);
}

}  // namespace

// --------------------------------------------------------------- types

RealVectorField::RealVectorField(std::vector<RPoly> components) : comps_(std::move(components)) {
  for (const auto& c : comps_) check_dim(c.nvars(), comps_.size(), "real vector field component");
}

RealVectorField RealVectorField::zero(std::size_t dim) { return RealVectorField(std::vector<RPoly>(dim, RPoly(dim))); }

bool RealVectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

RealVectorField RealVectorField::scaled(const Rational& c) const {
  std::vector<RPoly> comps;
  for (const auto& p : comps_) comps.push_back(p.scaled(c));
  return RealVectorField(std::move(comps));
}

RealBivector::RealBivector(std::vector<std::vector<RPoly>> matrix) : m_(std::move(matrix)) {
  const std::size_t d = m_.size();
  for (const auto& row : m_) check_dim(row.size(), d, "real bivector row");
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      check_dim(m_[a][b].nvars(), d, "real bivector entry");
      if (m_[a][b] != -m_[b][a]) throw DomainError("real bivector matrix is not antisymmetric");
    }
}

// ---------------------------------------------------------- vector fields

RealFieldPair realify_field(const VectorField& Z) {
  std::vector<CPair> w;
  for (const auto& c : Z.components()) w.push_back(CPair::of(c));
  return {realified(w, false), realified(w, true)};
}

RPoly modsq(const CPoly& alpha) {
  auto s = realify_split(alpha);
  return s.re * s.re + s.im * s.im;
}

RPoly apply_real_field(const RealVectorField& X, const RPoly& u) {
  check_dim(X.dim(), u.nvars(), "apply_real_field");
  RPoly out(u.nvars());
  for (std::size_t a = 0; a < X.dim(); ++a)
    if (!X[a].is_zero()) out += X[a] * u.derivative(a);
  return out;
}

RPoly real_divergence(const RealVectorField& X) {
  RPoly out(X.dim());
  for (std::size_t a = 0; a < X.dim(); ++a) out += X[a].derivative(a);
  return out;
}

RPoly real_lm_residual(const RPoly& u, const RealVectorField& X) {
  return apply_real_field(X, u) + u * real_divergence(X);
}

// ---------------------------------------------------------------- metric

RealMetric realify_metric(const HoloMetric& g) {
  const std::size_t n = g.dim(), d = 2 * n;
  RealMetric m{zeros(d), zeros(d), zeros(d), zeros(d)};
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& A = g.g()[i][j].re();
      const Rational& B = g.g()[i][j].im();
      const Rational& C = g.ginv()[i][j].re();
      const Rational& D = g.ginv()[i][j].im();
      m.h[i][j] = 2 * A;
      m.h[i][n + j] = -2 * B;
      m.h[n + i][j] = -2 * B;
      m.h[n + i][n + j] = -2 * A;
      m.k[i][j] = -2 * B;
      m.k[i][n + j] = -2 * A;
      m.k[n + i][j] = -2 * A;
      m.k[n + i][n + j] = 2 * B;
      m.hinv[i][j] = half * C;
      m.hinv[i][n + j] = half * D;
      m.hinv[n + i][j] = half * D;
      m.hinv[n + i][n + j] = -half * C;
      m.kinv[i][j] = half * D;
      m.kinv[i][n + j] = -half * C;
      m.kinv[n + i][j] = -half * C;
      m.kinv[n + i][n + j] = -half * D;
    }
  require(is_identity(mat_mul(m.h, m.hinv)), "realify_metric: h inverse");
  require(is_identity(mat_mul(m.k, m.kinv)), "realify_metric: k inverse");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      require(GaussRat(half * m.h[i][j], -half * m.k[i][j]) == g.g()[i][j], "realify_metric: g = (h - ik)/2");
  // k = J^T h with J = [[0, -1], [1, 0]] blockwise.
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Rational jt_h = a < n ? m.h[a + n][b] : Rational(-m.h[a - n][b]);
      require(m.k[a][b] == jt_h, "realify_metric: k(X, Y) = h(JX, Y)");
    }
  return m;
}

RealVectorField real_gradient(const RPoly& u, const RealMetric& m, WhichMetric which) {
  const RationalMatrix& inv = which == WhichMetric::h ? m.hinv : m.kinv;
  const std::size_t d = inv.size();
  check_dim(u.nvars(), d, "real_gradient");
  std::vector<RPoly> du;
  for (std::size_t b = 0; b < d; ++b) du.push_back(u.derivative(b));
  std::vector<RPoly> comps(d, RPoly(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (sgn(inv[a][b]) != 0) comps[a] += du[b].scaled(inv[a][b]);
  return RealVectorField(std::move(comps));
}

// --------------------------------------------------------------- Poisson

RealPoissonPair realify_poisson(const Bivector& P) {
  const std::size_t n = P.dim(), d = 2 * n;
  std::vector<std::vector<RPoly>> R(d, std::vector<RPoly>(d, RPoly(d)));
  std::vector<std::vector<RPoly>> I = R;
  const Rational q(1, 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto s = realify_split(P(i, j));
      const RPoly re = s.re.scaled(q), im = s.im.scaled(q);
      R[i][j] = re;
      R[i][n + j] = im;
      R[n + i][j] = im;
      R[n + i][n + j] = -re;
      I[i][j] = im;
      I[i][n + j] = -re;
      I[n + i][j] = -re;
      I[n + i][n + j] = -im;
    }
  return {RealBivector(std::move(R)), RealBivector(std::move(I))};
}

RealVectorField real_hamiltonian(const RPoly& u, const RealBivector& Q) {
  const std::size_t d = Q.dim();
  check_dim(u.nvars(), d, "real_hamiltonian");
  std::vector<RPoly> comps(d, RPoly(d));
  for (std::size_t a = 0; a < d; ++a) {
    const RPoly du = u.derivative(a);
    if (du.is_zero()) continue;
    for (std::size_t b = 0; b < d; ++b)
      if (!Q(a, b).is_zero()) comps[b] += Q(a, b) * du;
  }
  return RealVectorField(std::move(comps));
}

RealVectorField real_modular_field(const RealBivector& Q) {
  const std::size_t d = Q.dim();
  std::vector<RPoly> comps(d, RPoly(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) comps[a] += Q(a, b).derivative(b);
  return RealVectorField(std::move(comps));
}

std::vector<RPoly> real_jacobiator(const RealBivector& Q) {
  const std::size_t d = Q.dim();
  auto bracket_with = [&](std::size_t a, std::size_t b, std::size_t c) {
    RPoly r(d);
    for (std::size_t l = 0; l < d; ++l)
      if (!Q(l, c).is_zero()) r += Q(l, c) * Q(a, b).derivative(l);
    return r;
  };
  std::vector<RPoly> out;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c)
        out.push_back(bracket_with(a, b, c) + bracket_with(b, c, a) + bracket_with(c, a, b));
  return out;
}

// -------------------------------------------------------------- theorems

TheoremCheck check_thlm(const CPoly& alpha, const VectorField& Z, const VolumeForm& omega) {
  if (alpha.is_zero()) throw DomainError("check_thlm: alpha must be nonzero");
  TheoremCheck t;
  t.complex_residual = is_last_multiplier(alpha, Z, omega).residual;
  const auto fields = realify_field(Z);
  const RPoly u = modsq(alpha);
  t.clearing_factor = u;
  t.real_residual_R = real_lm_residual(u, fields.Z);
  t.real_residual_I = real_lm_residual(u, fields.W);
  const CPair pred = CPair::of(alpha).conj() * CPair::of(t.complex_residual);
  t.identity_R = t.real_residual_R == pred.re.scaled(Rational(2));
  t.identity_I = t.real_residual_I == pred.im.scaled(Rational(2));
  return t;
}

namespace {

// Shared shape of the tg and th1 checks: G holomorphic, X and Y the real
// fields realizing conj(f) G and its rotation.
TheoremCheck quotient_check(const CPoly& alpha, const CPoly& f, const VectorField& G, const VolumeForm& omega,
                            const RealVectorField& X, const RealVectorField& Y) {
  TheoremCheck t;
  // f (G(alpha) + alpha div G) - alpha G(f): f^2 times the residual of alpha for G/f.
  t.complex_residual = f * is_last_multiplier(alpha, G, omega).residual - alpha * apply_field(G, f);
  const RPoly F = modsq(f);
  const RPoly u = modsq(alpha);
  t.clearing_factor = F * F;
  t.real_residual_R = cleared_quotient_residual(u, F, X);
  t.real_residual_I = cleared_quotient_residual(u, F, Y);
  const CPair fb = CPair::of(f).conj();
  const CPair pred = CPair::of(alpha).conj() * fb * fb * CPair::of(t.complex_residual);
  t.identity_R = t.real_residual_R == pred.re.scaled(Rational(2));
  t.identity_I = t.real_residual_I == pred.im.scaled(Rational(2));
  return t;
}

}  // namespace

TheoremCheck check_tg(const CPoly& alpha, const CPoly& f, const HoloMetric& g) {
  if (alpha.is_zero() || f.is_zero()) throw DomainError("check_tg: alpha and f must be nonzero");
  const VectorField G = gradient(f, g);
  const RealMetric m = realify_metric(g);
  const RPoly F = modsq(f);
  const RealVectorField Xh = real_gradient(F, m, WhichMetric::h);
  const RealVectorField Xk = real_gradient(F, m, WhichMetric::k);
  const auto w = conj_f_times(f, G);
  require(Xh == realified(w, false), "check_tg: grad_h |f|^2 != Re/Im of conj(f) grad f");
  require(Xk == realified(w, true), "check_tg: grad_k |f|^2 != Im/-Re of conj(f) grad f");
  return quotient_check(alpha, f, G, g.volume(), Xh, Xk);
}

TheoremCheck check_th1(const CPoly& alpha, const CPoly& f, const Bivector& P, const VolumeForm& omega) {
  if (alpha.is_zero() || f.is_zero()) throw DomainError("check_th1: alpha and f must be nonzero");
  const VectorField V = hamiltonian_field(f, P);
  const auto real = realify_poisson(P);
  const RPoly F = modsq(f);
  const RealVectorField X = real_hamiltonian(F, real.R).scaled(Rational(2));
  const RealVectorField Y = real_hamiltonian(F, real.I).scaled(Rational(2));
  const auto w = conj_f_times(f, V);
  require(X == realified(w, false), "check_th1: 2 Z^R_{|f|^2} != Re/Im of conj(f) Z_f");
  require(Y == realified(w, true), "check_th1: 2 Z^I_{|f|^2} != Im/-Re of conj(f) Z_f");
  return quotient_check(alpha, f, V, omega, X, Y);
}

TheoremCheck check_th2(const CPoly& f, const Bivector& P, const VolumeForm& omega) {
  if (f.is_zero()) throw DomainError("check_th2: f must be nonzero");
  const std::size_t n = P.dim();
  TheoremCheck t;
  const VectorField Zw = modular_field(P, omega);
  t.complex_residual = apply_field(Zw, f);

  const auto real = realify_poisson(P);
  std::vector<CPair> zw;
  for (std::size_t i = 0; i < n; ++i) zw.push_back(CPair::of(Zw[i]));
  const Rational half(1, 2);
  require(real_modular_field(real.R) == realified(zw, false).scaled(half), "check_th2: modular field of P_R");
  require(real_modular_field(real.I) == realified(zw, true).scaled(half), "check_th2: modular field of P_I");

  const RPoly F = modsq(f);
  t.clearing_factor = F;
  t.real_residual_R = real_lm_residual(F, real_hamiltonian(F, real.R));
  t.real_residual_I = real_lm_residual(F, real_hamiltonian(F, real.I));
  const CPair pred = CPair::of(f).conj() * CPair::of(t.complex_residual);
  t.identity_R = t.real_residual_R == F * pred.re;
  t.identity_I = t.real_residual_I == F * pred.im;
  return t;
}

GaussRat realified_volume_factor(const VolumeForm& omega) {
  const std::size_t n = omega.dim(), d = 2 * n;
  if (d > 32) throw DomainError("realified volume needs n <= 16");
  const CPoly one = CPoly::constant(d, GaussRat(1));
  const CPoly iota = CPoly::constant(d, GaussRat::i());
  Form w = Form::scalar(CPoly::constant(d, omega.weight()));
  Form wbar = Form::scalar(CPoly::constant(d, omega.weight().conj()));
  for (std::size_t k = 0; k < n; ++k) {
    Form dz(d, 1), dzb(d, 1);
    dz.add(IndexMask{1} << k, one);
    dz.add(IndexMask{1} << (n + k), iota);
    dzb.add(IndexMask{1} << k, one);
    dzb.add(IndexMask{1} << (n + k), -iota);
    w = wedge(w, dz);
    wbar = wedge(wbar, dzb);
  }
  const Form top = wedge(w, wbar);
  const GaussRat factor = top.component(full_mask(d)).constant_term();
  GaussRat expected(omega.weight().norm());
  for (std::size_t k = 0; k < n; ++k) expected *= GaussRat(Rational(0), Rational(-2));
  require(factor == expected, "realified volume factor != |c|^2 (-2i)^n");
  return factor;
}

}  // namespace hlm
