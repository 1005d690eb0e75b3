#pragma once

#include <array>

#include "invharm/operator_suite.hpp"

namespace invharm {

/// Harmonic-form families. Each one names a kernel system solved verbatim on
/// the stated domain (dimension 4 throughout):
///
///   Dbar          (p,q):  dbar a = 0,  del * a = 0
///   DelDbar       (p,q):  del a = 0,   dbar a = 0,  del dbar * a = 0
///   Deltabar         k :  deltabar a = 0,  delta * a = 0
///   DeltaDeltabar    k :  delta a = 0, deltabar a = 0, delta deltabar * a = 0
///   D             (p,q):  d a = 0,  d * a = 0
///   DDc              k :  d a = 0,  dc a = 0,  dc d * a = 0
///   AntiInvariant     :  a in A(2,0)+A(0,2),  d a = 0,  d * a = 0
///   DeRham           k :  real k-forms,  d a = 0,  d * a = 0
enum class Family { Dbar, DelDbar, Deltabar, DeltaDeltabar, D, DDc, AntiInvariant, DeRham };

struct HarmonicQuery {
  Family family;
  int p = 0;  // bigraded families
  int q = 0;
  int k = 0;  // graded families

  static HarmonicQuery bigraded(Family f, int p, int q) { return {f, p, q, p + q}; }
  static HarmonicQuery graded(Family f, int k) { return {f, 0, 0, k}; }
};

/// Exact kernel intersection of the query's constraint system.
///
/// Complex families return subspaces in global zeta coordinates (ambient
/// 2^dim); DeRham returns real coordinates on degree-k forms (ambient
/// binom(dim, k)). Out-of-range degrees throw std::invalid_argument.
Subspace solve(const HarmonicQuery& query, const OperatorSuite& suite);

struct BettiNumbers {
  std::array<int, 5> b{};
  int b_plus = 0;
  int b_minus = 0;
};

/// Invariant harmonic Betti numbers plus the star eigensplit in degree 2.
/// Cross-checked against the cohomology of the invariant complex; a mismatch
/// (impossible for unimodular input) throws std::logic_error.
BettiNumbers betti(const OperatorSuite& suite);

/// Dimensions of every harmonic family on every degree, for one structure.
struct HarmonicReport {
  std::string name;
  std::string digest;
  bool integrable = false;
  bool almost_kahler = false;
  bool unimodular = true;

  std::array<std::array<int, 3>, 3> dbar{};       // [p][q]
  std::array<std::array<int, 3>, 3> del_dbar{};   // [p][q]
  std::array<std::array<int, 3>, 3> d_pq{};       // [p][q]
  std::array<int, 5> deltabar_k{};
  std::array<int, 5> delta_deltabar_k{};
  std::array<int, 5> ddc_k{};
  int h_minus_J = 0;
  BettiNumbers betti;
};

HarmonicReport full_report(const OperatorSuite& suite);
HarmonicReport full_report(const ManifoldSpec& spec);

/// Stable 64-bit digest of the geometric content (dim, c, J, g).
std::string digest_of(const ManifoldSpec& spec);

}  // namespace invharm
