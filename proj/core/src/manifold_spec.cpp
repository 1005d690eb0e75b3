#include "invharm/manifold_spec.hpp"

#include <sstream>
#include <stdexcept>

#include "invharm/exterior.hpp"

namespace invharm {

ManifoldSpec ManifoldSpec::empty(std::size_t dim) {
  ManifoldSpec s;
  s.dim = dim;
  s.c.assign(dim * dim * dim, Rational(0));
  s.J = Matrix::zero(dim, dim);
  s.g = Matrix::identity(dim);
  return s;
}

Vec ManifoldSpec::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) {
        const Rational& ckij = structure_constant(k, i, j);
        if (ckij != 0) out[k] += f * Scalar(ckij);
      }
    }
  }
  return out;
}

bool ValidationReport::all_pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

const ValidationItem* ValidationReport::find(const std::string& id) const {
  for (const auto& it : items)
    if (it.id == id) return &it;
  return nullptr;
}

namespace {

Vec frame_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

std::string pair_witness(std::size_t i, std::size_t j, const Vec& value) {
  std::ostringstream os;
  os << "(e" << i + 1 << ", e" << j + 1 << ") -> " << to_string(value);
  return os.str();
}

}  // namespace

std::optional<Vec> non_spd_witness(const Matrix& g) {
  const std::size_t n = g.rows();
  Matrix m = g;
  Matrix t = Matrix::identity(n);  // m = t^T g t throughout

  auto witness = [&](const Vec& coords) { return t * coords; };

  for (std::size_t i = 0; i < n; ++i) {
    const Scalar d = m(i, i);
    if (d.re < 0) return witness(frame_vector(n, i));
    if (d.re == 0) {
      std::size_t j = i + 1;
      while (j < n && m(i, j).is_zero()) ++j;
      if (j == n) return witness(frame_vector(n, i));  // null vector, not PD
      const Rational cij = m(i, j).re;
      const Rational mjj = m(j, j).re;
      if (mjj < 0) return witness(frame_vector(n, j));
      // f(t) = 2 t c + t^2 mjj is negative at the chosen t
      Rational step = (mjj == 0) ? (cij > 0 ? Rational(-1) : Rational(1)) : Rational(-cij / mjj);
      Vec coords = frame_vector(n, i);
      coords[j] = Scalar(step);
      return witness(coords);
    }
    // symmetric elimination of row/column i
    for (std::size_t jj = i + 1; jj < n; ++jj) {
      if (m(i, jj).is_zero()) continue;
      Scalar f = m(i, jj) / d;
      for (std::size_t k = 0; k < n; ++k) m(k, jj) -= f * m(k, i);
      for (std::size_t k = 0; k < n; ++k) m(jj, k) -= f * m(i, k);
      for (std::size_t k = 0; k < n; ++k) t(k, jj) -= f * t(k, i);
    }
  }
  return std::nullopt;
}

ValidationReport validate(const ManifoldSpec& spec) {
  ValidationReport rep;
  const std::size_t n = spec.dim;

  auto add = [&rep](const std::string& id, bool pass, const std::string& detail) {
    rep.items.push_back({id, pass, detail});
  };

  if (n == 0 || n % 2 != 0 || spec.c.size() != n * n * n || spec.J.rows() != n ||
      spec.J.cols() != n || spec.g.rows() != n || spec.g.cols() != n) {
    add("shape", false, "dimension must be a positive even integer matching all tables");
    return rep;
  }
  add("shape", true, "");

  bool real_ok = true;
  for (const auto& r : spec.c)
    (void)r;  // structure constants are Rational by type
  for (std::size_t i = 0; i < n && real_ok; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!spec.J(i, j).is_real() || !spec.g(i, j).is_real()) {
        real_ok = false;
        break;
      }
  add("real-input", real_ok, real_ok ? "" : "J and g must have rational entries");
  if (!real_ok) return rep;

  // antisymmetry c^k_{ij} = -c^k_{ji}
  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < n && ok; ++k)
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (spec.structure_constant(k, i, j) != -spec.structure_constant(k, j, i)) {
            ok = false;
            w = "c(" + std::to_string(k + 1) + "," + std::to_string(i + 1) + "," +
                std::to_string(j + 1) + ") != -c(.,j,i)";
            break;
          }
    add("antisymmetry", ok, w);
  }

  // Jacobi identity on all triples
  bool jacobi_ok = true;
  {
    std::string w;
    for (std::size_t i = 0; i < n && jacobi_ok; ++i)
      for (std::size_t j = i + 1; j < n && jacobi_ok; ++j)
        for (std::size_t k = j + 1; k < n && jacobi_ok; ++k) {
          Vec ei = frame_vector(n, i), ej = frame_vector(n, j), ek = frame_vector(n, k);
          Vec s = spec.bracket(spec.bracket(ei, ej), ek) +
                  spec.bracket(spec.bracket(ej, ek), ei) +
                  spec.bracket(spec.bracket(ek, ei), ej);
          if (!is_zero(s)) {
            jacobi_ok = false;
            w = "triple (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
                std::to_string(k + 1) + ") -> " + to_string(s);
          }
        }
    add("jacobi", jacobi_ok, w);
  }

  // d^2 = 0 on the generated algebra; must agree with the Jacobi check.
  {
    ExteriorBasis basis(n, ExteriorBasis::Order::ByMask);
    Matrix d_gen(basis.size(), n);
    for (std::size_t gen = 0; gen < n; ++gen)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const Rational& v = spec.structure_constant(gen, i, j);
          if (v != 0) {
            Mask m = (Mask(1) << i) | (Mask(1) << j);
            d_gen(basis.index_of(m), gen) = Scalar(-v);
          }
        }
    Matrix d = basis.antiderivation(d_gen);
    bool d2_ok = (d * d).is_zero();
    add("d-squared", d2_ok, d2_ok ? "" : "d^2 != 0 on the invariant algebra");
    add("jacobi-d-squared-agreement", d2_ok == jacobi_ok,
        d2_ok == jacobi_ok ? "" : "Jacobi and d^2 = 0 checks disagree");
  }

  // unimodularity: trace(ad_{e_i}) = 0
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < n && ok; ++i) {
      Rational tr(0);
      for (std::size_t k = 0; k < n; ++k) tr += spec.structure_constant(k, i, k);
      if (tr != 0) {
        ok = false;
        w = "trace(ad e" + std::to_string(i + 1) + ") = " + to_string(tr);
      }
    }
    add("unimodular", ok, w);
  }

  // J^2 = -Id
  {
    bool ok = (spec.J * spec.J == -Matrix::identity(n));
    add("almost-complex", ok, ok ? "" : "J^2 != -Id");
  }

  // g symmetric positive definite
  {
    bool sym = (spec.g == spec.g.transpose());
    add("metric-symmetric", sym, sym ? "" : "g != g^T");
    if (sym) {
      auto w = non_spd_witness(spec.g);
      add("metric-positive", !w.has_value(),
          w ? "v = " + to_string(*w) + " has v^T g v <= 0" : "");
    } else {
      add("metric-positive", false, "not symmetric");
    }
  }

  // J-compatibility g(J., J.) = g
  {
    bool ok = (spec.J.transpose() * spec.g * spec.J == spec.g);
    add("metric-compatible", ok, ok ? "" : "J^T g J != g");
  }

  // Nijenhuis tensor on all frame pairs
  {
    bool all_zero = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vec ei = frame_vector(n, i), ej = frame_vector(n, j);
        Vec ji = spec.J * ei, jj = spec.J * ej;
        Vec nij = spec.bracket(ji, jj) - spec.J * spec.bracket(ji, ej) -
                  spec.J * spec.bracket(ei, jj) - spec.bracket(ei, ej);
        if (!is_zero(nij)) {
          all_zero = false;
          rep.nijenhuis.push_back(pair_witness(i, j, nij));
        }
      }
    rep.integrable = all_zero;
  }

  return rep;
}

}  // namespace invharm
