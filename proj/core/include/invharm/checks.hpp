#pragma once

#include <map>
#include <set>

#include "invharm/harmonics.hpp"

namespace invharm {

enum class CheckStatus { Pass, Fail, NotApplicable };

/// Outcome of one mechanical identity check. `statement` spells the identity
/// in ASCII; `witness` carries the offending dimensions or form on failure.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string statement;
  std::string witness;
};

bool any_failed(const std::vector<CheckResult>& checks);
std::string to_string(CheckStatus s);

/// Matrix-level identities of the operator suite: the bigraded relations of
/// d^2 = 0, the component and delta splittings of d, the d^c commutation
/// formula, star properties, the fundamental-form normalization and the
/// integrability cross-checks. Purely structural; holds for every valid spec.
std::vector<CheckResult> verify_structural(const OperatorSuite& suite);

/// Degree-2 and degree-3 decompositions of the graded harmonic spaces into
/// bigraded pieces, their dimension identities, and Poincare-type duality of
/// the deltabar family. Requires dim 4; almost Kahler is NOT assumed.
std::vector<CheckResult> verify_almost_hermitian(const OperatorSuite& suite);
std::vector<CheckResult> verify_almost_hermitian(const ManifoldSpec& spec);

/// The almost Kahler dimension table (13 cells in terms of b_1, b^-,
/// h^1_{d+dc}, h^-_J) plus the subspace identities specific to d-omega = 0.
/// Not applicable unless dim 4 and the structure is almost Kahler.
std::vector<CheckResult> verify_almost_kahler(const OperatorSuite& suite);
std::vector<CheckResult> verify_almost_kahler(const ManifoldSpec& spec);

struct SweepSample {
  Rational value;
  bool valid = false;
  std::string error;          // set when invalid
  HarmonicReport report;      // meaningful when valid
};

struct SweepResult {
  std::string param;
  std::vector<SweepSample> samples;
  /// entry name -> distinct values attained across valid samples
  std::map<std::string, std::set<int>> variation;
  std::vector<CheckResult> checks;
};

/// Instantiates the parametrized spec text at each value and reports every
/// harmonic dimension per sample. Samples failing validation are marked
/// invalid and skipped. When every valid sample is almost Kahler and shares
/// one J (a metric sweep), the harmonic dimension families must be constant
/// across samples; that is emitted as a hard check.
SweepResult sweep(const std::string& spec_text, const std::string& param,
                  const std::vector<Rational>& values);

/// Flat name -> value view of a report, the entry set used by sweeps.
std::map<std::string, int> report_entries(const HarmonicReport& rep);

}  // namespace invharm
