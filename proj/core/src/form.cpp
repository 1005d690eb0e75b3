#include "invharm/form.hpp"

#include <bit>

namespace invharm {

Form Form::from_global(const ExteriorBasis& basis, const Vec& v) {
  Form f;
  int deg = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Mask m = basis.mask_at(i);
    f.table[m] = v[i];
    deg = std::max(deg, std::popcount(m));
  }
  f.degree = deg < 0 ? 0 : deg;
  return f;
}

Vec Form::to_global(const ExteriorBasis& basis) const {
  Vec v(basis.size());
  for (const auto& [m, c] : table) v[basis.index_of(m)] = c;
  return v;
}

Form Form::projection(const ExteriorBasis& basis, int p, int q) const {
  Form f;
  f.degree = p + q;
  for (const auto& [m, c] : table)
    if (basis.p_of(m) == p && basis.q_of(m) == q) f.table[m] = c;
  return f;
}

bool Form::is_zero() const {
  for (const auto& [m, c] : table)
    if (!c.is_zero()) return false;
  return true;
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [m, c] : o.table) {
    auto it = table.find(m);
    if (it == table.end()) table[m] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) table.erase(it);
    }
  }
  degree = std::max(degree, o.degree);
  return *this;
}

std::vector<std::string> phi_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t a = 1; a <= m; ++a) names.push_back("phi" + std::to_string(a));
  for (std::size_t a = 1; a <= m; ++a) names.push_back("phib" + std::to_string(a));
  return names;
}

std::string to_string(const Form& f, const ExteriorBasis& basis) {
  return basis_form_to_string(basis, f.to_global(basis), phi_names(basis.n() / 2));
}

}  // namespace invharm
