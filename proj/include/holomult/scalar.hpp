#pragma once

#include <complex>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace hlm {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Exact square root of a nonnegative rational, when it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Element of the Gaussian rationals Q(i): re + i*im with arbitrary precision
/// rational parts, always held in lowest terms.
class GaussRat {
public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;  // throws DomainError on zero

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re_, -a.im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  // Canonical text, re-parseable by parse_expr: "3/2", "-i", "1/2+3*i".
  std::string to_string() const;

private:
  Rational re_{0};
  Rational im_{0};
};

// Square root in Q(i) when one exists, normalized so that the first nonzero
// of (re, im) is positive.
std::optional<GaussRat> gauss_sqrt(const GaussRat& z);

// Small helpers shared by templates that work over either coefficient field.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussRat& z) { return z.is_zero(); }

}  // namespace hlm
