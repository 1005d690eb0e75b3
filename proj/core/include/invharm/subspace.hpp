#pragma once

#include <utility>

#include "invharm/matrix.hpp"

namespace invharm {

/// Linear subspace of Q(i)^n, stored as a basis in reduced row echelon form.
///
/// The canonical form makes equality of subspaces decidable by comparing
/// basis matrices entry by entry.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the given vectors; the basis is canonicalized on construction.
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient);
  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> basis() const;
  const Matrix& basis_matrix() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in this basis; empty optional when v is outside.
  std::optional<Vec> coordinates_of(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_;
  Matrix basis_;  // rows = basis vectors, canonical RREF, no zero rows
};

Subspace sum(const Subspace& a, const Subspace& b);

/// Exact intersection; throws std::invalid_argument on ambient mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Image of a subspace under a linear map (canonicalized).
Subspace apply(const Matrix& m, const Subspace& s);

/// Subspace with every basis vector conjugated entrywise.
Subspace conjugated(const Subspace& s);

/// rank(M) together with ker(M) in canonical form.
std::pair<std::size_t, Subspace> rank_kernel(const Matrix& m);

/// Splits Q(i)^n into the +1 and -1 eigenspaces of an involution.
/// Throws std::invalid_argument unless op*op = id.
std::pair<Subspace, Subspace> eigensplit_involution(const Matrix& op);

}  // namespace invharm
