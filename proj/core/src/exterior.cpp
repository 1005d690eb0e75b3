#include "invharm/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace invharm {

int wedge_inversions(Mask a, Mask b) {
  int inv = 0;
  while (b) {
    Mask low = b & (~b + 1);  // lowest set bit of b
    inv += std::popcount(a & ~(low - 1) & ~low);  // bits of a strictly above it
    b &= b - 1;
  }
  return inv;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  return (wedge_inversions(a, b) % 2 == 0) ? 1 : -1;
}

ExteriorBasis::ExteriorBasis(std::size_t n, Order order) : n_(n), order_(order) {
  const std::size_t total = std::size_t(1) << n;
  masks_.reserve(total);
  deg_offset_.assign(n + 2, 0);
  deg_size_.assign(n + 1, 0);

  std::vector<Mask> all(total);
  for (Mask m = 0; m < total; ++m) all[m] = m;
  std::stable_sort(all.begin(), all.end(), [this](Mask a, Mask b) {
    int da = std::popcount(a), db = std::popcount(b);
    if (da != db) return da < db;
    if (order_ == Order::ByBidegree) {
      int pa = p_of(a), pb = p_of(b);
      if (pa != pb) return pa > pb;
    }
    return a < b;
  });
  masks_ = std::move(all);

  index_.assign(total, 0);
  for (std::size_t i = 0; i < total; ++i) {
    index_[masks_[i]] = i;
    deg_size_[std::popcount(masks_[i])]++;
  }
  for (std::size_t k = 0; k <= n; ++k) deg_offset_[k + 1] = deg_offset_[k] + deg_size_[k];
}

std::vector<std::size_t> ExteriorBasis::indices_of_degree(std::size_t k) const {
  std::vector<std::size_t> out(deg_size_[k]);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = deg_offset_[k] + i;
  return out;
}

std::vector<std::size_t> ExteriorBasis::indices_of_bidegree(std::size_t p, std::size_t q) const {
  std::vector<std::size_t> out;
  for (std::size_t i = deg_offset_[p + q]; i < deg_offset_[p + q + 1]; ++i)
    if (p_of(masks_[i]) == int(p)) out.push_back(i);
  return out;
}

int ExteriorBasis::degree(Mask m) const { return std::popcount(m); }

int ExteriorBasis::p_of(Mask m) const {
  const Mask low = (Mask(1) << (n_ / 2)) - 1;
  return std::popcount(m & low);
}

int ExteriorBasis::q_of(Mask m) const { return degree(m) - p_of(m); }

Matrix ExteriorBasis::antiderivation(const Matrix& d_gen) const {
  Matrix out(size(), size());
  for (std::size_t col = 0; col < size(); ++col) {
    Mask full = masks_[col];
    int t = 0;
    for (Mask rest = full; rest; rest &= rest - 1, ++t) {
      std::size_t gen = std::countr_zero(rest);
      Mask remainder = full & ~(Mask(1) << gen);
      Scalar sgn((t % 2 == 0) ? 1 : -1);
      for (std::size_t r = 0; r < size(); ++r) {
        const Scalar& coeff = d_gen(r, gen);
        if (coeff.is_zero()) continue;
        Mask b = masks_[r];
        int ws = wedge_sign(b, remainder);
        if (ws == 0) continue;
        out(index_[b | remainder], col) += Scalar(ws) * sgn * coeff;
      }
    }
  }
  return out;
}

Vec ExteriorBasis::wedge(const Vec& a, const Vec& b) const {
  Vec out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (b[j].is_zero()) continue;
      int ws = wedge_sign(masks_[i], masks_[j]);
      if (ws == 0) continue;
      out[index_[masks_[i] | masks_[j]]] += Scalar(ws) * a[i] * b[j];
    }
  }
  return out;
}

Matrix ExteriorBasis::extend_to_algebra(const Matrix& a, const ExteriorBasis& target) const {
  Matrix out(target.size(), size());
  for (std::size_t col = 0; col < size(); ++col) {
    Vec cur(target.size());
    cur[target.index_of(0)] = Scalar(1);
    Mask m = masks_[col];
    for (Mask rest = m; rest; rest &= rest - 1) {
      std::size_t gen = std::countr_zero(rest);
      Vec one(target.size());
      for (std::size_t i = 0; i < n_; ++i)
        one[target.index_of(Mask(1) << i)] = a(i, gen);
      cur = target.wedge(cur, one);
    }
    for (std::size_t r = 0; r < target.size(); ++r) out(r, col) = cur[r];
  }
  return out;
}

std::string mask_to_string(Mask m, const std::string& gen) {
  if (m == 0) return "1";
  std::string out;
  for (Mask rest = m; rest; rest &= rest - 1) {
    if (!out.empty()) out += "^";
    out += gen + std::to_string(std::countr_zero(rest) + 1);
  }
  return out;
}

namespace {

// Gram determinant <e^I, e^J> of the metric induced on k-forms.
Scalar gram_entry(const Matrix& ginv, Mask mi, Mask mj) {
  std::vector<std::size_t> ri, rj;
  for (Mask rest = mi; rest; rest &= rest - 1) ri.push_back(std::countr_zero(rest));
  for (Mask rest = mj; rest; rest &= rest - 1) rj.push_back(std::countr_zero(rest));
  const std::size_t k = ri.size();
  if (k == 0) return Scalar(1);
  Matrix minor(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) minor(a, b) = ginv(ri[a], rj[b]);
  return determinant(minor);
}

}  // namespace

RealGeometry::RealGeometry(const ManifoldSpec& spec)
    : basis_(spec.dim, ExteriorBasis::Order::ByMask) {
  const std::size_t n = spec.dim;
  const std::size_t total = basis_.size();
  const Mask top = (Mask(1) << n) - 1;

  // Chevalley-Eilenberg differential: d e^k = -sum_{i<j} c^k_{ij} e^i ^ e^j.
  Matrix d_gen(total, n);
  for (std::size_t gen = 0; gen < n; ++gen)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Rational& v = spec.structure_constant(gen, i, j);
        if (v != 0)
          d_gen(basis_.index_of((Mask(1) << i) | (Mask(1) << j)), gen) = Scalar(-v);
      }
  d_ = basis_.antiderivation(d_gen);

  // Pullback of forms along J, extended from alpha |-> alpha o J on 1-forms.
  Matrix jt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jt(i, j) = spec.J(j, i);
  j_action_ = basis_.extend_to_algebra(jt, basis_);

  // Fundamental form omega(X, Y) = g(JX, Y).
  omega_.assign(total, Scalar(0));
  Matrix jtg = spec.J.transpose() * spec.g;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      omega_[basis_.index_of((Mask(1) << i) | (Mask(1) << j))] = jtg(i, j);

  // The volume form is omega^(n/2) / (n/2)!; its top coefficient squares to
  // det g, which pins the orientation induced by J.
  Vec volume(total);
  volume[basis_.index_of(0)] = Scalar(1);
  Rational factorial(1);
  for (std::size_t s = 1; s <= n / 2; ++s) {
    volume = basis_.wedge(volume, omega_);
    factorial *= int(s);
  }
  Scalar lam = Scalar(Rational(1) / factorial) * volume[basis_.index_of(top)];
  if (!lam.is_real() || lam.re == 0)
    throw std::logic_error("degenerate fundamental form: omega^m is not a volume form");
  lambda_ = lam.re;
  Scalar detg = determinant(spec.g);
  if (Scalar(lambda_ * lambda_) != detg)
    throw std::logic_error("orientation error: volume coefficient does not square to det g");

  // Hodge star from e^I ^ star(e^J) = <e^I, e^J> vol, degree by degree.
  Matrix ginv = inverse_matrix(spec.g);
  star_ = Matrix(total, total);
  for (std::size_t col = 0; col < total; ++col) {
    Mask mj = basis_.mask_at(col);
    for (std::size_t row = 0; row < total; ++row) {
      Mask mk = basis_.mask_at(row);
      if (std::popcount(mk) + std::popcount(mj) != int(n)) continue;
      Mask mi = top & ~mk;  // the only I with e^I ^ e^K proportional to vol
      Scalar gij = gram_entry(ginv, mi, mj);
      if (gij.is_zero()) continue;
      star_(row, col) = Scalar(Rational(wedge_sign(mi, mk))) * Scalar(lambda_) * gij;
    }
  }
  // In dimension 4 the degree-3 block is sign-normalized so that star o star
  // is the identity on every degree; all kernel systems downstream are
  // insensitive to a scalar factor on star.
  if (n == 4) {
    for (std::size_t col = 0; col < total; ++col) {
      if (std::popcount(basis_.mask_at(col)) != 3) continue;
      for (std::size_t row = 0; row < total; ++row) star_(row, col) = -star_(row, col);
    }
  }

  almost_kahler_ = is_zero(d_ * omega_);
}

Matrix RealGeometry::d_block(std::size_t k) const {
  const std::size_t n = basis_.n();
  std::size_t rows = (k + 1 <= n) ? basis_.degree_size(k + 1) : 0;
  Matrix out(rows, basis_.degree_size(k));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = d_(basis_.degree_offset(k + 1) + i, basis_.degree_offset(k) + j);
  return out;
}

Matrix RealGeometry::star_block(std::size_t k) const {
  const std::size_t n = basis_.n();
  Matrix out(basis_.degree_size(n - k), basis_.degree_size(k));
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = star_(basis_.degree_offset(n - k) + i, basis_.degree_offset(k) + j);
  return out;
}

std::string RealGeometry::form_to_string(const Vec& global, const std::string& gen) const {
  return basis_form_to_string(basis_, global, {gen});
}

std::string basis_form_to_string(const ExteriorBasis& basis, const Vec& global,
                                 const std::vector<std::string>& gen_names) {
  auto name_of = [&](std::size_t slot) {
    if (gen_names.size() == 1) return gen_names[0] + std::to_string(slot + 1);
    return gen_names[slot];
  };
  std::string out;
  for (std::size_t i = 0; i < global.size(); ++i) {
    if (global[i].is_zero()) continue;
    Mask m = basis.mask_at(i);
    std::string term;
    for (Mask rest = m; rest; rest &= rest - 1) {
      if (!term.empty()) term += "^";
      term += name_of(std::countr_zero(rest));
    }
    const Scalar& coeff = global[i];
    std::string cs;
    if (term.empty()) {
      cs = to_string(coeff);
    } else if (coeff == Scalar(1)) {
      cs = term;
    } else if (coeff == -Scalar(1)) {
      cs = "-" + term;
    } else {
      std::string c = to_string(coeff);
      if (c.find('+') != std::string::npos || c.find('-', 1) != std::string::npos)
        c = "(" + c + ")";
      cs = c + "*" + term;
    }
    if (!out.empty()) out += (cs[0] == '-') ? " - " + cs.substr(1) : " + " + cs;
    else out = cs;
  }
  return out.empty() ? "0" : out;
}

}  // namespace invharm
