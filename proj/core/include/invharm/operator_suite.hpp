#pragma once

#include <memory>

#include "invharm/exterior.hpp"
#include "invharm/manifold_spec.hpp"
#include "invharm/subspace.hpp"

namespace invharm {

/// Every differential operator of an invariant almost Hermitian structure,
/// assembled once as exact matrices on the complexified invariant algebra.
///
/// All complex-side operators act on global coordinates over the basis
/// zeta^I, where zeta^1..zeta^m span the (1,0) coframe and zeta^{m+1}..zeta^{2m}
/// their conjugates; the bidegree of a basis element is read off its mask.
/// Construction throws std::invalid_argument when the spec does not validate
/// and std::logic_error when an internal operator identity fails.
class OperatorSuite {
 public:
  explicit OperatorSuite(const ManifoldSpec& spec);

  const ManifoldSpec& spec() const { return spec_; }
  const RealGeometry& real() const { return real_; }
  const ExteriorBasis& zbasis() const { return zbasis_; }
  std::size_t n() const { return spec_.dim; }
  std::size_t m() const { return spec_.dim / 2; }
  std::size_t total() const { return zbasis_.size(); }

  /// Rows of the (1,0) coframe, as complex coordinate vectors over e^1..e^n.
  const std::vector<Vec>& phi() const { return phi_; }

  // Complex-side operators (global square matrices over the zeta basis).
  const Matrix& d() const { return d_; }
  const Matrix& mu() const { return mu_; }
  const Matrix& del() const { return del_; }
  const Matrix& dbar() const { return dbar_; }
  const Matrix& mubar() const { return mubar_; }
  const Matrix& delta() const { return delta_; }        // del + mubar
  const Matrix& deltabar() const { return deltabar_; }  // dbar + mu
  const Matrix& dc() const { return dc_; }              // J^{-1} d J
  const Matrix& star() const { return star_; }
  const Matrix& j_forms() const { return j_forms_; }    // i^{p-q} per block

  /// Change of basis: zeta coordinates -> e coordinates (and back).
  const Matrix& to_real() const { return C_; }
  const Matrix& to_complex() const { return Cinv_; }

  /// Complex conjugation is antilinear: conj(v) = conj_mat * entrywise-conj(v).
  const Matrix& conj_mat() const { return conj_mat_; }
  Vec conj_vec(const Vec& v) const;
  Subspace conj_subspace(const Subspace& s) const;

  bool integrable() const { return integrable_; }
  bool almost_kahler() const { return real_.almost_kahler(); }

  /// Fundamental form in zeta coordinates (a real (1,1)-form).
  const Vec& omega() const { return omega_z_; }

  /// Selection matrix embedding a coordinate block into global coordinates.
  Matrix inclusion(const std::vector<std::size_t>& indices) const;

  const ValidationReport& validation() const { return validation_; }

 private:
  ManifoldSpec spec_;
  ValidationReport validation_;
  RealGeometry real_;
  ExteriorBasis zbasis_;
  std::vector<Vec> phi_;
  Matrix C_, Cinv_;
  Matrix d_, mu_, del_, dbar_, mubar_, delta_, deltabar_, dc_, star_, j_forms_;
  Matrix conj_mat_;
  Vec omega_z_;
  bool integrable_ = false;
};

}  // namespace invharm
