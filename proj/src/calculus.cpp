#include "holomult/calculus.hpp"

#include <string>

namespace hlm {

void check_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

// ----------------------------------------------------------- VectorField

VectorField::VectorField(std::size_t n) {
  comps_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) comps_.emplace_back(n);
}

VectorField::VectorField(std::vector<CPoly> components) : comps_(std::move(components)) {
  for (const auto& c : comps_) check_dim(c.nvars(), comps_.size(), "vector field component");
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  check_dim(dim(), o.dim(), "vector field sum");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  check_dim(dim(), o.dim(), "vector field difference");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

VectorField operator*(const CPoly& f, const VectorField& Z) {
  check_dim(f.nvars(), Z.dim(), "scaled vector field");
  VectorField out = Z;
  for (auto& c : out.comps_) c = f * c;
  return out;
}

VectorField VectorField::coordinate(std::size_t n, std::size_t k) {
  VectorField Z(n);
  Z.comps_.at(k) = CPoly::constant(n, GaussRat(1));
  return Z;
}

// ---------------------------------------------------------------- masks

IndexMask mask_of(std::initializer_list<std::size_t> one_based) {
  IndexMask m = 0;
  for (auto i : one_based) {
    if (i == 0 || i > 32) throw DomainError("index out of range");
    m |= IndexMask{1} << (i - 1);
  }
  return m;
}

std::vector<std::size_t> mask_indices(IndexMask m) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; m != 0; ++k, m >>= 1)
    if (m & 1u) out.push_back(k);
  return out;
}

namespace {

IndexMask below(std::size_t k) { return (IndexMask{1} << k) - 1; }

// iota_{d_{i1}^...^d_{ip}} dz^J = sign * dz^rest, with iota_{i1} applied
// first. sign == 0 when I is not contained in J.
std::pair<int, IndexMask> contract(IndexMask I, IndexMask J) {
  if ((I & J) != I) return {0, 0};
  int sign = 1;
  for (auto k : mask_indices(I)) {
    if (std::popcount(J & below(k)) % 2 == 1) sign = -sign;
    J &= ~(IndexMask{1} << k);
  }
  return {sign, J};
}

}  // namespace

int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j.
  std::size_t inversions = 0;
  for (auto j : mask_indices(b)) inversions += std::popcount(a & ~below(j + 1));
  return inversions % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------- Graded

template <class Tag>
Graded<Tag>::Graded(std::size_t n, std::size_t grade) : n_(n), grade_(grade) {
  if (grade > n) throw DomainError("grade " + std::to_string(grade) + " exceeds dimension " + std::to_string(n));
  if (n > 32) throw DomainError("dimension above 32 is not supported");
}

template <class Tag>
Graded<Tag> Graded<Tag>::scalar(const CPoly& f) {
  Graded g(f.nvars(), 0);
  g.add(0, f);
  return g;
}

template <class Tag>
CPoly Graded<Tag>::component(IndexMask m) const {
  auto it = comps_.find(m);
  return it == comps_.end() ? CPoly(n_) : it->second;
}

template <class Tag>
void Graded<Tag>::add(IndexMask m, const CPoly& f) {
  if (mask_size(m) != grade_ || (m & ~full_mask(n_)) != 0)
    throw DomainError("index set does not match grade " + std::to_string(grade_));
  check_dim(f.nvars(), n_, "graded component");
  if (f.is_zero()) return;
  auto [it, inserted] = comps_.emplace(m, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

template <class Tag>
void Graded<Tag>::check_compatible(const Graded& o) const {
  check_dim(n_, o.n_, "graded sum");
  if (grade_ != o.grade_) throw DimensionError("graded sum: grade mismatch");
}

template <class Tag>
Graded<Tag>& Graded<Tag>::operator+=(const Graded& o) {
  check_compatible(o);
  for (const auto& [m, f] : o.comps_) add(m, f);
  return *this;
}

template <class Tag>
Graded<Tag>& Graded<Tag>::operator-=(const Graded& o) {
  check_compatible(o);
  for (const auto& [m, f] : o.comps_) add(m, -f);
  return *this;
}

template <class Tag>
Graded<Tag> Graded<Tag>::scaled(const CPoly& f) const {
  check_dim(f.nvars(), n_, "scaled graded element");
  Graded out(n_, grade_);
  for (const auto& [m, c] : comps_) out.add(m, f * c);
  return out;
}

template class Graded<MultivectorTag>;
template class Graded<FormTag>;

template <class Tag>
Graded<Tag> wedge(const Graded<Tag>& a, const Graded<Tag>& b) {
  check_dim(a.dim(), b.dim(), "wedge");
  const std::size_t grade = a.grade() + b.grade();
  if (grade > a.dim()) return Graded<Tag>(a.dim(), a.dim());
  Graded<Tag> out(a.dim(), grade);
  for (const auto& [ma, fa] : a.components())
    for (const auto& [mb, fb] : b.components()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      CPoly prod = fa * fb;
      out.add(ma | mb, s > 0 ? prod : -prod);
    }
  return out;
}

template Multivector wedge(const Multivector&, const Multivector&);
template Form wedge(const Form&, const Form&);

Multivector to_multivector(const VectorField& Z) {
  Multivector A(Z.dim(), 1);
  for (std::size_t i = 0; i < Z.dim(); ++i) A.add(IndexMask{1} << i, Z[i]);
  return A;
}

VectorField to_field(const Multivector& A) {
  if (A.grade() != 1) throw DomainError("expected a grade-1 multivector");
  std::vector<CPoly> comps;
  for (std::size_t i = 0; i < A.dim(); ++i) comps.push_back(A.component(IndexMask{1} << i));
  return VectorField(std::move(comps));
}

Form differential(const CPoly& f) {
  Form out(f.nvars(), 1);
  for (std::size_t k = 0; k < f.nvars(); ++k) out.add(IndexMask{1} << k, f.derivative(k));
  return out;
}

// ---------------------------------------------------------------- volume

VolumeForm::VolumeForm(std::size_t n, GaussRat weight) : n_(n), weight_(std::move(weight)) {
  if (n == 0) throw DomainError("volume form needs dimension >= 1");
  if (weight_.is_zero()) throw DomainError("volume form weight must be nonzero");
}

Form VolumeForm::as_form() const {
  Form w(n_, n_);
  w.add(full_mask(n_), CPoly::constant(n_, weight_));
  return w;
}

// ------------------------------------------------------------- operations

CPoly apply_field(const VectorField& Z, const CPoly& f) {
  check_dim(Z.dim(), f.nvars(), "apply_field");
  CPoly out(f.nvars());
  for (std::size_t i = 0; i < Z.dim(); ++i)
    if (!Z[i].is_zero()) out += Z[i] * f.derivative(i);
  return out;
}

VectorField lie_bracket(const VectorField& Z, const VectorField& W) {
  check_dim(Z.dim(), W.dim(), "lie_bracket");
  std::vector<CPoly> comps;
  for (std::size_t k = 0; k < Z.dim(); ++k) comps.push_back(apply_field(Z, W[k]) - apply_field(W, Z[k]));
  return VectorField(std::move(comps));
}

CPoly divergence(const VectorField& Z, const VolumeForm& omega) {
  check_dim(Z.dim(), omega.dim(), "divergence");
  CPoly out(Z.dim());
  for (std::size_t i = 0; i < Z.dim(); ++i) out += Z[i].derivative(i);
  return out;
}

Form interior_product(const Multivector& A, const Form& phi) {
  check_dim(A.dim(), phi.dim(), "interior_product");
  if (A.grade() > phi.grade()) return Form(phi.dim(), 0);
  Form out(phi.dim(), phi.grade() - A.grade());
  for (const auto& [I, a] : A.components())
    for (const auto& [J, f] : phi.components()) {
      auto [sign, rest] = contract(I, J);
      if (sign == 0) continue;
      CPoly prod = a * f;
      out.add(rest, sign > 0 ? prod : -prod);
    }
  return out;
}

Form partial_d(const Form& phi) {
  const std::size_t n = phi.dim();
  if (phi.grade() >= n)
    throw DomainError("partial_d needs grade < n (grade " + std::to_string(phi.grade()) + ", n " +
                      std::to_string(n) + ")");
  Form out(n, phi.grade() + 1);
  for (const auto& [J, f] : phi.components())
    for (std::size_t k = 0; k < n; ++k) {
      const IndexMask bit = IndexMask{1} << k;
      if (J & bit) continue;
      CPoly df = f.derivative(k);
      if (df.is_zero()) continue;
      out.add(J | bit, std::popcount(J & below(k)) % 2 == 0 ? df : -df);
    }
  return out;
}

Form flat(const Multivector& A, const VolumeForm& omega) {
  check_dim(A.dim(), omega.dim(), "flat");
  return interior_product(A, omega.as_form());
}

Multivector sharp(const Form& phi, const VolumeForm& omega) {
  const std::size_t n = omega.dim();
  check_dim(phi.dim(), n, "sharp");
  Multivector out(n, n - phi.grade());
  const GaussRat inv = omega.weight().inverse();
  for (const auto& [J, f] : phi.components()) {
    const IndexMask I = full_mask(n) & ~J;
    auto [sign, rest] = contract(I, full_mask(n));
    require(rest == J && sign != 0, "sharp: complement contraction");
    out.add(I, f.scaled(sign > 0 ? inv : -inv));
  }
  return out;
}

Multivector curl(const Multivector& A, const VolumeForm& omega) {
  if (A.grade() == 0) throw DomainError("curl needs grade >= 1");
  return sharp(partial_d(flat(A, omega)), omega);
}

Form marsden_closed(const CPoly& alpha, const Form& phi) {
  if (alpha.is_zero()) throw DomainError("marsden_closed: alpha must be nonzero");
  return partial_d(phi.scaled(alpha));
}

Form attached_d(const CPoly& f, long k, const Form& phi) {
  check_dim(f.nvars(), phi.dim(), "attached_d");
  const long factor = static_cast<long>(phi.grade()) - k;
  Form out = partial_d(phi).scaled(f);
  if (factor != 0)
    out -= wedge(differential(f), phi).scaled(CPoly::constant(f.nvars(), GaussRat(factor)));
  return out;
}

CPoly poly_determinant(const std::vector<std::vector<CPoly>>& M) {
  const std::size_t n = M.size();
  if (n == 0) throw DimensionError("determinant of an empty matrix");
  for (const auto& row : M) check_dim(row.size(), n, "poly_determinant row");
  const std::size_t nv = M[0][0].nvars();
  if (n == 1) return M[0][0];
  CPoly det(nv);
  for (std::size_t c = 0; c < n; ++c) {
    if (M[0][c].is_zero()) continue;
    std::vector<std::vector<CPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<CPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(M[r][k]);
      minor.push_back(std::move(row));
    }
    CPoly term = M[0][c] * poly_determinant(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace hlm
