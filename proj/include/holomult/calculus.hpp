#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "holomult/poly.hpp"

namespace hlm {

/// Polynomial holomorphic vector field Z = sum Z^i d/dz^i on C^n.
class VectorField {
public:
  VectorField() = default;
  explicit VectorField(std::size_t n);  // zero field
  explicit VectorField(std::vector<CPoly> components);

  std::size_t dim() const { return comps_.size(); }
  const CPoly& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<CPoly>& components() const { return comps_; }
  bool is_zero() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const CPoly& f, const VectorField& Z);
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.comps_ == b.comps_; }

  // Coordinate field d/dz^k (0-based k).
  static VectorField coordinate(std::size_t n, std::size_t k);

private:
  std::vector<CPoly> comps_;
};

// Sorted index set {i1 < ... < ip} encoded as a bitmask; bit k is index k+1.
using IndexMask = std::uint32_t;

inline std::size_t mask_size(IndexMask m) { return static_cast<std::size_t>(std::popcount(m)); }
inline IndexMask full_mask(std::size_t n) { return n >= 32 ? ~IndexMask{0} : (IndexMask{1} << n) - 1; }
IndexMask mask_of(std::initializer_list<std::size_t> one_based);
std::vector<std::size_t> mask_indices(IndexMask m);  // 0-based, ascending

struct MultivectorTag {};
struct FormTag {};

/// Homogeneous element of grade p built from strictly increasing index sets:
/// multivectors A^{I} d_I and forms phi_I dz^I share this representation and
/// are kept apart by the tag.
template <class Tag>
class Graded {
public:
  Graded() = default;
  Graded(std::size_t n, std::size_t grade);

  static Graded scalar(const CPoly& f);  // grade 0

  std::size_t dim() const { return n_; }
  std::size_t grade() const { return grade_; }
  const std::map<IndexMask, CPoly>& components() const { return comps_; }
  CPoly component(IndexMask m) const;
  bool is_zero() const { return comps_.empty(); }

  // Adds f to the component at m (|m| must equal grade).
  void add(IndexMask m, const CPoly& f);

  Graded& operator+=(const Graded& o);
  Graded& operator-=(const Graded& o);
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator*(const CPoly& f, const Graded& a) { return a.scaled(f); }
  Graded scaled(const CPoly& f) const;

  friend bool operator==(const Graded& a, const Graded& b) {
    return a.n_ == b.n_ && a.grade_ == b.grade_ && a.comps_ == b.comps_;
  }

private:
  void check_compatible(const Graded& o) const;

  std::size_t n_ = 0;
  std::size_t grade_ = 0;
  std::map<IndexMask, CPoly> comps_;
};

using Multivector = Graded<MultivectorTag>;
using Form = Graded<FormTag>;

extern template class Graded<MultivectorTag>;
extern template class Graded<FormTag>;

Multivector to_multivector(const VectorField& Z);
// Grade-1 multivector back to a field.
VectorField to_field(const Multivector& A);
// Holomorphic differential df as a 1-form.
Form differential(const CPoly& f);

/// omega = weight * dz^1 ^ ... ^ dz^n, weight a nonzero constant.
class VolumeForm {
public:
  VolumeForm(std::size_t n, GaussRat weight = GaussRat(1));
  std::size_t dim() const { return n_; }
  const GaussRat& weight() const { return weight_; }
  Form as_form() const;

private:
  std::size_t n_;
  GaussRat weight_;
};

CPoly apply_field(const VectorField& Z, const CPoly& f);
VectorField lie_bracket(const VectorField& Z, const VectorField& W);
// The constant weight of omega cancels, so this is sum_i dZ^i/dz^i.
CPoly divergence(const VectorField& Z, const VolumeForm& omega);

// Successive contraction: iota_{d_{i1} ^ ... ^ d_{ip}} = iota_{ip} o ... o iota_{i1}.
// Zero form of grade 0 when A.grade > phi.grade.
Form interior_product(const Multivector& A, const Form& phi);
template <class Tag>
Graded<Tag> wedge(const Graded<Tag>& a, const Graded<Tag>& b);
// Sign of dz^a ^ dz^b relative to dz^(a|b); 0 when a and b overlap.
int wedge_sign(IndexMask a, IndexMask b);

// Holomorphic exterior derivative; requires grade < n.
Form partial_d(const Form& phi);

Form flat(const Multivector& A, const VolumeForm& omega);
Multivector sharp(const Form& phi, const VolumeForm& omega);
// D_omega A = sharp(partial_d(flat(A))); grade must be >= 1.
Multivector curl(const Multivector& A, const VolumeForm& omega);

// d(alpha * phi), the numerator of the Marsden differential. Throws on alpha = 0.
Form marsden_closed(const CPoly& alpha, const Form& phi);
// f * d(phi) - (p - k) * df ^ phi for phi of grade p.
Form attached_d(const CPoly& f, long k, const Form& phi);

// Determinant of a square matrix of polynomials (Laplace expansion).
CPoly poly_determinant(const std::vector<std::vector<CPoly>>& M);

void check_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace hlm
