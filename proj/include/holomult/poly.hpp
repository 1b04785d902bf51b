#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "holomult/error.hpp"
#include "holomult/scalar.hpp"

namespace hlm {

/// Exponent vector of a monomial; its length is the ambient variable count.
class Monomial {
public:
  explicit Monomial(std::size_t nvars = 0) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);
  Monomial(std::initializer_list<std::uint32_t> exps)
      : Monomial(std::vector<std::uint32_t>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t k) const { return exps_[k]; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Precondition: divides(other) == true for other / *this.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

// Graded lexicographic order with x1 > x2 > ...; used as "greater first" so
// that map iteration starts at the leading term.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exponents() > b.exponents();
  }
};

/// Sparse multivariate polynomial with exact coefficients. Values are
/// immutable once built; every operation returns a new polynomial in
/// canonical form (no zero terms, graded-lex term order).
template <class C>
class Polynomial {
public:
  using Coeff = C;
  using TermMap = std::map<Monomial, C, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 1) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const C& c) {
    Polynomial p(nvars);
    if (!hlm::is_zero(c)) p.terms_.emplace(Monomial(nvars), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t k) {
    Polynomial p(nvars);
    p.terms_.emplace(Monomial::variable(nvars, k), C(1));
    return p;
  }
  static Polynomial monomial(const Monomial& m, const C& c) {
    Polynomial p(m.nvars());
    if (!hlm::is_zero(c)) p.terms_.emplace(m, c);
    return p;
  }
  // Sums duplicate monomials and drops zeros.
  static Polynomial from_terms(std::size_t nvars, const std::vector<std::pair<Monomial, C>>& terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }
  C constant_term() const { return coefficient(Monomial(nvars_)); }
  // Leading (monomial, coefficient); precondition: nonzero.
  const std::pair<const Monomial, C>& leading_term() const { return *terms_.begin(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  friend Polynomial operator*(const C& c, const Polynomial& p) { return p.scaled(c); }
  friend Polynomial operator*(const Polynomial& p, const C& c) { return p.scaled(c); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial scaled(const C& c) const;
  Polynomial pow(unsigned e) const;
  // Formal partial derivative with respect to variable k (0-based).
  Polynomial derivative(std::size_t k) const;
  // Multiply every term by the monomial m.
  Polynomial shifted(const Monomial& m) const;
  // Re-home into a ring with `nvars` variables, variable k becoming k+offset.
  Polynomial embedded(std::size_t nvars, std::size_t offset) const;

  template <class F>
  auto map_coefficients(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    Polynomial<D> out(nvars_);
    std::vector<std::pair<Monomial, D>> terms;
    terms.reserve(terms_.size());
    for (const auto& [m, c] : terms_) terms.emplace_back(m, f(c));
    return Polynomial<D>::from_terms(nvars_, terms);
  }

private:
  static Polynomial multiply(const Polynomial& a, const Polynomial& b);
  void check_same_ring(const Polynomial& o) const {
    if (o.nvars_ != nvars_)
      throw DimensionError("polynomial variable count mismatch: " + std::to_string(nvars_) +
                           " vs " + std::to_string(o.nvars_));
  }

  std::size_t nvars_;
  TermMap terms_;
};

/// Polynomial in z1..zn over the Gaussian rationals.
using CPoly = Polynomial<GaussRat>;
/// Polynomial over the rationals; after realification the variables are
/// x1..xn followed by y1..yn.
using RPoly = Polynomial<Rational>;

extern template class Polynomial<GaussRat>;
extern template class Polynomial<Rational>;

enum class PolyOp { add, sub, mul };

CPoly poly_arith(const CPoly& a, const CPoly& b, PolyOp op);

// Formal partial derivative; var is 0-based. Throws DomainError when out of range.
CPoly partial_derive(const CPoly& p, std::size_t var);
RPoly partial_derive(const RPoly& p, std::size_t var);

// q with num == q * den, or nullopt when den does not divide num. Throws
// DomainError when den is zero.
std::optional<CPoly> exact_divide(const CPoly& num, const CPoly& den);
std::optional<RPoly> exact_divide(const RPoly& num, const RPoly& den);

// Horner evaluation. Throws DimensionError on a length mismatch.
std::complex<double> evaluate(const CPoly& p, std::span<const std::complex<double>> point);
double evaluate(const RPoly& p, std::span<const double> point);

// Exact value at a Gaussian-rational point.
GaussRat evaluate_exact(const CPoly& p, std::span<const GaussRat> point);

CPoly conjugate(const CPoly& p);

struct RealSplit {
  RPoly re;
  RPoly im;
};

// Substitute z_k = x_k + i y_k and split into real and imaginary parts over
// 2n real variables (x1..xn, y1..yn).
RealSplit realify_split(const CPoly& p);

// Canonical text. CPoly uses z1..zn; RPoly uses x1..xm,y1..ym when its
// variable count is even and v1..vk otherwise.
std::string to_string(const CPoly& p);
std::string to_string(const RPoly& p);
std::string to_string(const RPoly& p, std::span<const std::string> names);

// Leading terms (at most `count`) in canonical text, for residual summaries.
std::string leading_terms(const CPoly& p, std::size_t count);
std::string leading_terms(const RPoly& p, std::size_t count);

/// Polynomial prepared for repeated floating-point evaluation: terms sorted
/// lexicographically and evaluated by nested Horner on each variable.
template <class T>
class CompiledPoly {
public:
  CompiledPoly() = default;
  explicit CompiledPoly(const CPoly& p);
  explicit CompiledPoly(const RPoly& p);

  std::size_t nvars() const { return nvars_; }
  T operator()(std::span<const T> point) const;

private:
  T horner(std::size_t begin, std::size_t end, std::size_t var, std::span<const T> point) const;

  std::size_t nvars_ = 0;
  std::vector<std::vector<std::uint32_t>> exps_;
  std::vector<T> coeffs_;
};

extern template class CompiledPoly<double>;
extern template class CompiledPoly<std::complex<double>>;

}  // namespace hlm
