#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invharm/manifold_spec.hpp"

namespace invharm {

/// Multi-indices are bitmasks over generator slots 0..n-1; the set bits in
/// increasing order give the strictly increasing index tuple.
using Mask = std::uint32_t;

int wedge_inversions(Mask a, Mask b);

/// Sign of e^A ^ e^B relative to e^{A union B}; 0 when A and B overlap.
int wedge_sign(Mask a, Mask b);

/// Ordered basis of a full exterior algebra on n generators.
///
/// Global order: degree ascending; inside a degree either plain numeric mask
/// order (real coframe) or grouped by bidegree p descending (complex coframe
/// with generators 0..m-1 holomorphic and m..2m-1 conjugate).
class ExteriorBasis {
 public:
  enum class Order { ByMask, ByBidegree };

  ExteriorBasis() = default;
  ExteriorBasis(std::size_t n, Order order);

  std::size_t n() const { return n_; }
  std::size_t size() const { return masks_.size(); }  // 2^n
  Mask mask_at(std::size_t global_index) const { return masks_[global_index]; }
  std::size_t index_of(Mask m) const { return index_[m]; }

  std::size_t degree_offset(std::size_t k) const { return deg_offset_[k]; }
  std::size_t degree_size(std::size_t k) const { return deg_size_[k]; }
  std::vector<std::size_t> indices_of_degree(std::size_t k) const;
  /// Complex order only: indices of the (p,q) block.
  std::vector<std::size_t> indices_of_bidegree(std::size_t p, std::size_t q) const;

  int degree(Mask m) const;
  /// Holomorphic part of the bidegree (complex order).
  int p_of(Mask m) const;
  int q_of(Mask m) const;

  /// Full-algebra matrix of the degree-1 antiderivation with the given values
  /// on generators (columns of `d_gen` = degree-2 coordinate vectors, one per
  /// generator, in this basis).
  Matrix antiderivation(const Matrix& d_gen) const;

  /// Global wedge of homogeneous elements given as global coordinate vectors.
  Vec wedge(const Vec& a, const Vec& b) const;

  /// Functorial extension of a generator substitution to the whole algebra:
  /// column j of `a` gives the image of generator j as a 1-form coordinate
  /// vector; the result maps this basis to `target` coordinates.
  Matrix extend_to_algebra(const Matrix& a, const ExteriorBasis& target) const;

 private:
  std::size_t n_ = 0;
  Order order_ = Order::ByMask;
  std::vector<Mask> masks_;
  std::vector<std::size_t> index_;
  std::vector<std::size_t> deg_offset_;
  std::vector<std::size_t> deg_size_;
};

/// The real invariant picture: Chevalley-Eilenberg differential, fundamental
/// form, volume normalization and Hodge star of (g, J) on the e-coframe.
class RealGeometry {
 public:
  explicit RealGeometry(const ManifoldSpec& spec);

  const ExteriorBasis& basis() const { return basis_; }
  std::size_t n() const { return basis_.n(); }

  const Matrix& d() const { return d_; }        // global, degree +1
  const Matrix& star() const { return star_; }  // global, degree k -> n-k
  const Matrix& j_action() const { return j_action_; }  // pullback by J, degree 0

  const Vec& omega() const { return omega_; }  // global degree-2 vector
  const Rational& volume_coefficient() const { return lambda_; }
  bool almost_kahler() const { return almost_kahler_; }

  /// d restricted to degree k, as a (dim_{k+1} x dim_k) block.
  Matrix d_block(std::size_t k) const;
  Matrix star_block(std::size_t k) const;

  std::string form_to_string(const Vec& global, const std::string& gen = "e") const;

 private:
  ExteriorBasis basis_;
  Matrix d_;
  Matrix star_;
  Matrix j_action_;
  Vec omega_;
  Rational lambda_;
  bool almost_kahler_ = false;
};

std::string mask_to_string(Mask m, const std::string& gen);

/// Renders a coordinate vector as a wedge polynomial. With a single name the
/// generators print as name1, name2, ...; otherwise one name per slot.
std::string basis_form_to_string(const ExteriorBasis& basis, const Vec& global,
                                 const std::vector<std::string>& gen_names);

}  // namespace invharm
