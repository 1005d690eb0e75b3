#pragma once

#include <map>

#include "invharm/exterior.hpp"

namespace invharm {

/// Invariant complex form as a coefficient table over strictly increasing
/// multi-indices of the complexified coframe (bitmask representation).
struct Form {
  int degree = 0;
  std::map<Mask, Scalar> table;

  static Form from_global(const ExteriorBasis& basis, const Vec& v);
  Vec to_global(const ExteriorBasis& basis) const;

  /// Component in A^{p,q} (generators 0..m-1 holomorphic).
  Form projection(const ExteriorBasis& basis, int p, int q) const;

  bool is_zero() const;
  Form& operator+=(const Form& o);
};

/// Names zeta generators phi1..phim, phib1..phibm for display.
std::vector<std::string> phi_names(std::size_t m);

std::string to_string(const Form& f, const ExteriorBasis& basis);

}  // namespace invharm
