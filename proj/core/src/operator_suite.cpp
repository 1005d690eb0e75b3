#include "invharm/operator_suite.hpp"

#include <stdexcept>

namespace invharm {

namespace {

// Bidegree-shift component of an operator: keeps entries whose column block
// (p,q) maps to row block (p+dp, q+dq).
Matrix bidegree_component(const Matrix& op, const ExteriorBasis& basis, int dp, int dq) {
  Matrix out(op.rows(), op.cols());
  for (std::size_t j = 0; j < op.cols(); ++j) {
    Mask mj = basis.mask_at(j);
    int pj = basis.p_of(mj), qj = basis.q_of(mj);
    for (std::size_t i = 0; i < op.rows(); ++i) {
      if (op(i, j).is_zero()) continue;
      Mask mi = basis.mask_at(i);
      if (basis.p_of(mi) == pj + dp && basis.q_of(mi) == qj + dq) out(i, j) = op(i, j);
    }
  }
  return out;
}

Scalar i_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
  }
}

const ManifoldSpec& require_valid(const ManifoldSpec& spec, const ValidationReport& report) {
  if (!report.all_pass()) {
    std::string why = "spec failed validation:";
    for (const auto& it : report.items)
      if (!it.pass) why += " [" + it.id + "] " + it.detail;
    throw std::invalid_argument(why);
  }
  return spec;
}

}  // namespace

OperatorSuite::OperatorSuite(const ManifoldSpec& spec)
    : spec_(spec),
      validation_(validate(spec_)),
      real_(require_valid(spec_, validation_)),
      zbasis_(spec_.dim, ExteriorBasis::Order::ByBidegree) {
  const std::size_t n = spec_.dim;
  const std::size_t mm = n / 2;
  const std::size_t total = zbasis_.size();

  // (1,0) coframe: echelon basis of { e^j - i e^j o J }. Rank m is forced by
  // J^2 = -Id; the leading-one normalization makes the basis reproducible.
  Matrix p10(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Scalar v = -Scalar::i() * spec_.J(j, k);
      if (j == k) v += Scalar(1);
      p10(j, k) = Scalar(Rational(1, 2)) * v;
    }
  RrefResult rr = rref(p10);
  if (rr.rank != mm)
    throw std::logic_error("projected coframe has wrong rank; J^2 = -Id should prevent this");
  phi_.clear();
  for (std::size_t a = 0; a < mm; ++a) phi_.push_back(rr.r.row(a));

  // zeta^a = phi^a, zeta^{m+a} = conj(phi^a), as columns over the e-coframe.
  Matrix z(n, n);
  for (std::size_t a = 0; a < mm; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      z(i, a) = phi_[a][i];
      z(i, mm + a) = phi_[a][i].conj();
    }

  C_ = zbasis_.extend_to_algebra(z, real_.basis());
  Cinv_ = inverse_matrix(C_);

  d_ = Cinv_ * real_.d() * C_;
  star_ = Cinv_ * real_.star() * C_;
  conj_mat_ = Cinv_ * C_.conjugate();

  // The transported pullback by J must act on A^{p,q} as i^{p-q}; this pins
  // the sign conventions for d^c below.
  Vec jdiag(total), jdiag_inv(total);
  for (std::size_t i = 0; i < total; ++i) {
    Mask m = zbasis_.mask_at(i);
    int e = zbasis_.p_of(m) - zbasis_.q_of(m);
    jdiag[i] = i_power(e);
    jdiag_inv[i] = i_power(-e);
  }
  j_forms_ = Matrix::diagonal(jdiag);
  if (!(Cinv_ * real_.j_action() * C_ == j_forms_))
    throw std::logic_error("J does not act as i^(p-q) on the bigraded basis");

  mu_ = bidegree_component(d_, zbasis_, 2, -1);
  del_ = bidegree_component(d_, zbasis_, 1, 0);
  dbar_ = bidegree_component(d_, zbasis_, 0, 1);
  mubar_ = bidegree_component(d_, zbasis_, -1, 2);
  if (!(mu_ + del_ + dbar_ + mubar_ == d_))
    throw std::logic_error("d has components outside mu, del, dbar, mubar");

  delta_ = del_ + mubar_;
  deltabar_ = dbar_ + mu_;
  dc_ = Matrix::diagonal(jdiag_inv) * d_ * j_forms_;
  if (!(dc_ == Scalar::i() * (deltabar_ - delta_)))
    throw std::logic_error("d^c != i(deltabar - delta); sign convention error");

  // d^2 = 0 splits into the four bidegree relations; any failure here is a
  // basis or sign bug, not bad input.
  if (!(mubar_ * mubar_).is_zero() || !(mubar_ * dbar_ + dbar_ * mubar_).is_zero() ||
      !(dbar_ * dbar_ + mubar_ * del_ + del_ * mubar_).is_zero() ||
      !(mu_ * mubar_ + mubar_ * mu_ + del_ * dbar_ + dbar_ * del_).is_zero())
    throw std::logic_error("bigraded components of d violate the d^2 = 0 relations");

  if (n == 4) {
    if (!(star_ * star_ == Matrix::identity(total)))
      throw std::logic_error("star is not an involution");
    if (!(delta_ * deltabar_ == del_ * dbar_ + mubar_ * mu_))
      throw std::logic_error("delta deltabar != del dbar + mubar mu");
  }

  omega_z_ = Cinv_ * real_.omega();
  for (std::size_t i = 0; i < total; ++i) {
    Mask m = zbasis_.mask_at(i);
    if (!omega_z_[i].is_zero() && !(zbasis_.p_of(m) == 1 && zbasis_.q_of(m) == 1))
      throw std::logic_error("fundamental form is not of type (1,1)");
  }
  if (!(conj_vec(omega_z_) == omega_z_))
    throw std::logic_error("fundamental form is not real");

  integrable_ = mubar_.is_zero();
  if (integrable_ != validation_.integrable)
    throw std::logic_error("mubar = 0 disagrees with the Nijenhuis tensor");
}

Vec OperatorSuite::conj_vec(const Vec& v) const {
  Vec c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i].conj();
  return conj_mat_ * c;
}

Subspace OperatorSuite::conj_subspace(const Subspace& s) const {
  std::vector<Vec> vecs;
  vecs.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(conj_vec(s.basis_vector(i)));
  return Subspace::span(s.ambient_dimension(), vecs);
}

Matrix OperatorSuite::inclusion(const std::vector<std::size_t>& indices) const {
  Matrix inc(total(), indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) inc(indices[j], j) = Scalar(1);
  return inc;
}

}  // namespace invharm
