#include "invharm/subspace.hpp"

#include <stdexcept>

namespace invharm {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw std::invalid_argument("vector size != ambient dimension");
  Subspace s(ambient);
  if (vectors.empty()) return s;
  RrefResult rr = rref(Matrix::from_rows(vectors));
  Matrix basis(rr.rank, ambient);
  for (std::size_t i = 0; i < rr.rank; ++i) basis.set_row(i, rr.r.row(i));
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  return s;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector size != ambient dimension");
  if (is_zero(v)) return true;
  std::vector<Vec> rows = basis();
  rows.push_back(v);
  return rank(Matrix::from_rows(rows)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
  if (dim() == 0) {
    if (is_zero(v)) return Vec{};
    return std::nullopt;
  }
  return solve(basis_.transpose(), v);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw std::invalid_argument("ambient dimension mismatch");
  std::vector<Vec> rows = a.basis();
  for (const auto& v : b.basis()) rows.push_back(v);
  return Subspace::span(a.ambient_dimension(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dimension() != b.ambient_dimension())
    throw std::invalid_argument("ambient dimension mismatch");
  const std::size_t da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) return Subspace::zero(a.ambient_dimension());

  // x = U^T s = W^T t; solve [U^T | -W^T] (s,t)^T = 0 and read off the s part.
  Matrix m(a.ambient_dimension(), da + db);
  for (std::size_t i = 0; i < a.ambient_dimension(); ++i) {
    for (std::size_t j = 0; j < da; ++j) m(i, j) = a.basis_matrix()(j, i);
    for (std::size_t j = 0; j < db; ++j) m(i, da + j) = -b.basis_matrix()(j, i);
  }
  std::vector<Vec> vectors;
  for (const auto& k : kernel_basis(m)) {
    Vec x(a.ambient_dimension());
    for (std::size_t j = 0; j < da; ++j)
      if (!k[j].is_zero()) x = x + k[j] * a.basis_vector(j);
    vectors.push_back(std::move(x));
  }
  return Subspace::span(a.ambient_dimension(), vectors);
}

Subspace apply(const Matrix& m, const Subspace& s) {
  std::vector<Vec> images;
  images.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) images.push_back(m * s.basis_vector(i));
  return Subspace::span(m.rows(), images);
}

Subspace conjugated(const Subspace& s) {
  std::vector<Vec> vecs = s.basis();
  for (auto& v : vecs)
    for (auto& x : v) x = x.conj();
  return Subspace::span(s.ambient_dimension(), vecs);
}

std::pair<std::size_t, Subspace> rank_kernel(const Matrix& m) {
  std::vector<Vec> basis = kernel_basis(m);
  std::size_t r = m.cols() - basis.size();
  return {r, Subspace::span(m.cols(), basis)};
}

std::pair<Subspace, Subspace> eigensplit_involution(const Matrix& op) {
  if (!op.is_square()) throw std::invalid_argument("involution must be square");
  const std::size_t n = op.rows();
  if (!(op * op == Matrix::identity(n)))
    throw std::invalid_argument("operator is not an involution");
  Subspace plus = rank_kernel(op - Matrix::identity(n)).second;
  Subspace minus = rank_kernel(op + Matrix::identity(n)).second;
  if (plus.dim() + minus.dim() != n)
    throw std::logic_error("eigensplit does not fill the ambient space");
  return {plus, minus};
}

}  // namespace invharm
