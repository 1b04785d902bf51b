#include "holomult/poly.hpp"

#include <algorithm>
#include <numeric>

namespace hlm {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw DomainError("variable index out of range");
  std::vector<std::uint32_t> e(nvars, 0);
  e[k] = 1;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += other.exps_[k];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<std::uint32_t> e(exps_);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] -= other.exps_[k];
  return Monomial(std::move(e));
}

// -------------------------------------------------------------- Polynomial

template <class C>
Polynomial<C> Polynomial<C>::from_terms(std::size_t nvars,
                                        const std::vector<std::pair<Monomial, C>>& terms) {
  Polynomial p(nvars);
  for (const auto& [m, c] : terms) {
    if (m.nvars() != nvars) throw DimensionError("monomial variable count mismatch");
    auto [it, inserted] = p.terms_.emplace(m, c);
    if (!inserted) it->second += c;
  }
  std::erase_if(p.terms_, [](const auto& t) { return hlm::is_zero(t.second); });
  return p;
}

template <class C>
Polynomial<C> Polynomial<C>::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

template <class C>
Polynomial<C>& Polynomial<C>::operator+=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (hlm::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

template <class C>
Polynomial<C>& Polynomial<C>::operator-=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (hlm::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

template <class C>
Polynomial<C> Polynomial<C>::multiply(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      C prod = ca * cb;
      auto [it, inserted] = out.terms_.emplace(ma * mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return hlm::is_zero(t.second); });
  return out;
}

template <class C>
Polynomial<C> Polynomial<C>::scaled(const C& c) const {
  Polynomial out(nvars_);
  if (hlm::is_zero(c)) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
  return out;
}

template <class C>
Polynomial<C> Polynomial<C>::pow(unsigned e) const {
  Polynomial result = constant(nvars_, C(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class C>
Polynomial<C> Polynomial<C>::derivative(std::size_t k) const {
  if (k >= nvars_)
    throw DomainError("derivative variable index " + std::to_string(k + 1) + " out of range 1.." +
                      std::to_string(nvars_));
  std::vector<std::pair<Monomial, C>> out;
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = m[k];
    if (e == 0) continue;
    std::vector<std::uint32_t> exps = m.exponents();
    exps[k] = e - 1;
    out.emplace_back(Monomial(std::move(exps)), c * C(static_cast<long>(e)));
  }
  return from_terms(nvars_, out);
}

template <class C>
Polynomial<C> Polynomial<C>::shifted(const Monomial& m) const {
  if (m.nvars() != nvars_) throw DimensionError("monomial variable count mismatch");
  Polynomial out(nvars_);
  for (const auto& [t, c] : terms_) out.terms_.emplace(t * m, c);
  return out;
}

template <class C>
Polynomial<C> Polynomial<C>::embedded(std::size_t nvars, std::size_t offset) const {
  if (offset + nvars_ > nvars) throw DimensionError("embedding does not fit the target ring");
  Polynomial out(nvars);
  for (const auto& [m, c] : terms_) {
    std::vector<std::uint32_t> e(nvars, 0);
    for (std::size_t k = 0; k < nvars_; ++k) e[k + offset] = m[k];
    out.terms_.emplace(Monomial(std::move(e)), c);
  }
  return out;
}

template class Polynomial<GaussRat>;
template class Polynomial<Rational>;

// ------------------------------------------------------------- operations

CPoly poly_arith(const CPoly& a, const CPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw DomainError("unknown polynomial operation");
}

CPoly partial_derive(const CPoly& p, std::size_t var) { return p.derivative(var); }
RPoly partial_derive(const RPoly& p, std::size_t var) { return p.derivative(var); }

namespace {

template <class C>
std::optional<Polynomial<C>> divide_impl(const Polynomial<C>& num, const Polynomial<C>& den) {
  if (num.nvars() != den.nvars()) throw DimensionError("exact_divide: variable count mismatch");
  if (den.is_zero()) throw DomainError("exact_divide: division by the zero polynomial");
  const auto& [lead_mono, lead_coeff] = den.leading_term();
  const C lead_inv = C(1) / lead_coeff;
  Polynomial<C> quotient(num.nvars());
  Polynomial<C> rem = num;
  // If den | num then every intermediate remainder is a multiple of den, so
  // its leading monomial is divisible by den's; otherwise stop.
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading_term();
    if (!lead_mono.divides(m)) return std::nullopt;
    auto t = Polynomial<C>::monomial(m / lead_mono, c * lead_inv);
    quotient += t;
    rem -= t * den;
  }
  return quotient;
}

}  // namespace

std::optional<CPoly> exact_divide(const CPoly& num, const CPoly& den) { return divide_impl(num, den); }
std::optional<RPoly> exact_divide(const RPoly& num, const RPoly& den) { return divide_impl(num, den); }

std::complex<double> evaluate(const CPoly& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.nvars())
    throw DimensionError("evaluate: point has " + std::to_string(point.size()) +
                         " coordinates, polynomial has " + std::to_string(p.nvars()) + " variables");
  return CompiledPoly<std::complex<double>>(p)(point);
}

double evaluate(const RPoly& p, std::span<const double> point) {
  if (point.size() != p.nvars())
    throw DimensionError("evaluate: point has " + std::to_string(point.size()) +
                         " coordinates, polynomial has " + std::to_string(p.nvars()) + " variables");
  return CompiledPoly<double>(p)(point);
}

GaussRat evaluate_exact(const CPoly& p, std::span<const GaussRat> point) {
  if (point.size() != p.nvars()) throw DimensionError("evaluate_exact: point length mismatch");
  GaussRat total;
  for (const auto& [m, c] : p.terms()) {
    GaussRat t = c;
    for (std::size_t k = 0; k < m.nvars(); ++k)
      for (std::uint32_t e = 0; e < m[k]; ++e) t *= point[k];
    total += t;
  }
  return total;
}

CPoly conjugate(const CPoly& p) {
  return p.map_coefficients([](const GaussRat& c) { return c.conj(); });
}

RealSplit realify_split(const CPoly& p) {
  const std::size_t n = p.nvars();
  std::vector<std::pair<Monomial, Rational>> re_terms, im_terms;
  std::vector<std::uint32_t> j(n, 0);
  for (const auto& [m, c] : p.terms()) {
    // Enumerate all 0 <= j_k <= e_k: prod_k C(e_k, j_k) x^(e-j) (i y)^j.
    std::fill(j.begin(), j.end(), 0u);
    while (true) {
      mpz_class mult = 1;
      std::uint32_t ipow = 0;
      std::vector<std::uint32_t> e(2 * n, 0);
      for (std::size_t k = 0; k < n; ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), m[k], j[k]);
        mult *= b;
        e[k] = m[k] - j[k];
        e[n + k] = j[k];
        ipow += j[k];
      }
      // c * i^ipow * mult
      Rational re, im;
      switch (ipow % 4) {
        case 0: re = c.re(); im = c.im(); break;
        case 1: re = -c.im(); im = c.re(); break;
        case 2: re = -c.re(); im = -c.im(); break;
        default: re = c.im(); im = -c.re(); break;
      }
      Monomial mono(std::move(e));
      if (sgn(re) != 0) re_terms.emplace_back(mono, re * mult);
      if (sgn(im) != 0) im_terms.emplace_back(mono, im * mult);
      std::size_t k = 0;
      while (k < n && j[k] == m[k]) j[k++] = 0;
      if (k == n) break;
      ++j[k];
    }
  }
  return {RPoly::from_terms(2 * n, re_terms), RPoly::from_terms(2 * n, im_terms)};
}

// ------------------------------------------------------------------ text

namespace {

std::string monomial_text(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[k];
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

// Sign-normalized coefficient text: returns (negative, text of |c|) where
// |c| means c negated when its first nonzero component is negative.
std::pair<bool, std::string> coeff_text(const GaussRat& c, bool with_monomial) {
  bool neg = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
  GaussRat a = neg ? -c : c;
  if (with_monomial && a == GaussRat(1)) return {neg, ""};
  if (!a.is_real() && sgn(a.re()) != 0) return {neg, "(" + a.to_string() + ")"};
  return {neg, a.to_string()};
}

std::pair<bool, std::string> coeff_text(const Rational& c, bool with_monomial) {
  bool neg = sgn(c) < 0;
  Rational a = neg ? Rational(-c) : c;
  if (with_monomial && a == 1) return {neg, ""};
  return {neg, a.get_str()};
}

template <class C>
std::string poly_text(const Polynomial<C>& p, std::span<const std::string> names, std::size_t limit) {
  if (p.is_zero()) return "0";
  std::string out;
  std::size_t count = 0;
  for (const auto& [m, c] : p.terms()) {
    if (count == limit) {
      out += " + ...";
      break;
    }
    const bool has_mono = !m.is_one();
    auto [neg, ctext] = coeff_text(c, has_mono);
    std::string term = ctext;
    if (has_mono) term += (term.empty() ? "" : "*") + monomial_text(m, names);
    if (count == 0)
      out += neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
    ++count;
  }
  return out;
}

std::vector<std::string> holomorphic_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("z" + std::to_string(k + 1));
  return names;
}

std::vector<std::string> real_names(std::size_t n) {
  std::vector<std::string> names;
  if (n % 2 == 0) {
    for (std::size_t k = 0; k < n / 2; ++k) names.push_back("x" + std::to_string(k + 1));
    for (std::size_t k = 0; k < n / 2; ++k) names.push_back("y" + std::to_string(k + 1));
  } else {
    for (std::size_t k = 0; k < n; ++k) names.push_back("v" + std::to_string(k + 1));
  }
  return names;
}

}  // namespace

std::string to_string(const CPoly& p) {
  return poly_text(p, holomorphic_names(p.nvars()), SIZE_MAX);
}
std::string to_string(const RPoly& p) { return poly_text(p, real_names(p.nvars()), SIZE_MAX); }
std::string to_string(const RPoly& p, std::span<const std::string> names) {
  if (names.size() != p.nvars()) throw DimensionError("variable name count mismatch");
  return poly_text(p, names, SIZE_MAX);
}
std::string leading_terms(const CPoly& p, std::size_t count) {
  return poly_text(p, holomorphic_names(p.nvars()), count);
}
std::string leading_terms(const RPoly& p, std::size_t count) {
  return poly_text(p, real_names(p.nvars()), count);
}

// ------------------------------------------------------------ CompiledPoly

namespace {

template <class T>
T convert_coeff(const GaussRat& c) {
  if constexpr (std::is_same_v<T, double>) {
    if (!c.is_real()) throw DomainError("real evaluation of a polynomial with complex coefficients");
    return c.re().get_d();
  } else {
    return c.to_complex();
  }
}

template <class T>
T convert_coeff(const Rational& c) {
  return T(c.get_d());
}

template <class T, class C>
void compile_terms(const Polynomial<C>& p, std::vector<std::vector<std::uint32_t>>& exps,
                   std::vector<T>& coeffs) {
  std::vector<std::pair<std::vector<std::uint32_t>, T>> rows;
  rows.reserve(p.size());
  for (const auto& [m, c] : p.terms()) rows.emplace_back(m.exponents(), convert_coeff<T>(c));
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (auto& [e, c] : rows) {
    exps.push_back(std::move(e));
    coeffs.push_back(c);
  }
}

template <class T>
T ipow(T x, std::uint32_t e) {
  T r(1);
  while (e > 0) {
    if (e & 1u) r *= x;
    e >>= 1u;
    if (e > 0) x *= x;
  }
  return r;
}

}  // namespace

template <class T>
CompiledPoly<T>::CompiledPoly(const CPoly& p) : nvars_(p.nvars()) {
  compile_terms<T>(p, exps_, coeffs_);
}

template <class T>
CompiledPoly<T>::CompiledPoly(const RPoly& p) : nvars_(p.nvars()) {
  compile_terms<T>(p, exps_, coeffs_);
}

template <class T>
T CompiledPoly<T>::operator()(std::span<const T> point) const {
  if (point.size() != nvars_) throw DimensionError("evaluation point has the wrong length");
  if (coeffs_.empty()) return T(0);
  return horner(0, coeffs_.size(), 0, point);
}

// Terms in [begin, end) share the exponents of variables < var and are sorted
// lexicographically descending, so exponents of `var` form descending runs.
template <class T>
T CompiledPoly<T>::horner(std::size_t begin, std::size_t end, std::size_t var,
                          std::span<const T> point) const {
  if (var == nvars_) return coeffs_[begin];
  const T x = point[var];
  T acc(0);
  std::uint32_t prev = exps_[begin][var];
  std::size_t i = begin;
  while (i < end) {
    const std::uint32_t e = exps_[i][var];
    std::size_t j = i;
    while (j < end && exps_[j][var] == e) ++j;
    acc = acc * ipow(x, prev - e) + horner(i, j, var + 1, point);
    prev = e;
    i = j;
  }
  return acc * ipow(x, prev);
}

template class CompiledPoly<double>;
template class CompiledPoly<std::complex<double>>;

}  // namespace hlm
