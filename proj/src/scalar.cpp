#include "holomult/scalar.hpp"

#include "holomult/error.hpp"

namespace hlm {

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw DomainError("division by zero Gaussian rational");
  Rational n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

std::string GaussRat::to_string() const {
  if (is_real()) return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.get_str() + "*i";
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

std::optional<GaussRat> gauss_sqrt(const GaussRat& z) {
  if (z.is_zero()) return GaussRat();
  // c = p + i q with p^2 - q^2 = a, 2 p q = b, p^2 + q^2 = |z|.
  auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  const Rational& a = z.re();
  const Rational& b = z.im();
  auto p = rational_sqrt((*modulus + a) / 2);
  auto q = rational_sqrt((*modulus - a) / 2);
  if (!p || !q) return std::nullopt;
  Rational pr = *p;
  Rational qr = *q;
  if (sgn(pr) != 0 && sgn(qr) != 0 && sgn(b) < 0) qr = -qr;
  GaussRat c(pr, qr);
  if (!(c * c == z)) return std::nullopt;
  // First nonzero component positive.
  if (sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) c = -c;
  return c;
}

}  // namespace hlm
