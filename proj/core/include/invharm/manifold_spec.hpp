#pragma once

#include <string>
#include <vector>

#include "invharm/matrix.hpp"

namespace invharm {

/// Input data: a real unimodular Lie algebra in a fixed frame e_1..e_n,
/// an almost complex structure J and a compatible metric g on that frame.
///
/// Structure constants follow [e_i, e_j] = sum_k c(k,i,j) e_k; the induced
/// coframe differential is d e^k = -sum_{i<j} c(k,i,j) e^i ^ e^j.
struct ManifoldSpec {
  std::size_t dim = 0;
  std::vector<Rational> c;  // dim^3 entries, c[(k*dim + i)*dim + j]
  Matrix J;                 // column j = J e_{j+1} in frame coordinates
  Matrix g;                 // symmetric positive definite, J-compatible
  std::string name;

  static ManifoldSpec empty(std::size_t dim);

  const Rational& structure_constant(std::size_t k, std::size_t i, std::size_t j) const {
    return c[(k * dim + i) * dim + j];
  }
  void set_structure_constant(std::size_t k, std::size_t i, std::size_t j, const Rational& v) {
    c[(k * dim + i) * dim + j] = v;
    c[(k * dim + j) * dim + i] = -v;
  }

  /// Bracket of frame vectors given by coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  friend bool operator==(const ManifoldSpec& a, const ManifoldSpec& b) {
    return a.dim == b.dim && a.c == b.c && a.J == b.J && a.g == b.g && a.name == b.name;
  }
};

struct ValidationItem {
  std::string id;
  bool pass = false;
  std::string detail;  // witness on failure, short note on success
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool integrable = false;  // N_J = 0 on all frame pairs
  std::vector<std::string> nijenhuis;  // nonzero N_J(e_i, e_j) witnesses

  bool all_pass() const;
  const ValidationItem* find(const std::string& id) const;
};

/// Checks antisymmetry, Jacobi (and d^2 = 0, which must agree), unimodularity,
/// J^2 = -Id, g symmetric positive definite and J-compatible. Never throws;
/// every failure is a report entry with a witness.
ValidationReport validate(const ManifoldSpec& spec);

/// Witness vector v != 0 with v^T g v <= 0, or nothing when g is SPD.
std::optional<Vec> non_spd_witness(const Matrix& g);

}  // namespace invharm
