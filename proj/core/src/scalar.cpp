#include "invharm/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace invharm {

Scalar inverse(const Scalar& s) {
  Rational n = s.norm();
  if (n == 0) {
    throw std::domain_error("division by zero Scalar");
  }
  return Scalar{s.re / n, -s.im / n};
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= inverse(o); }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.re != 0) out += to_string(s.re);
  if (s.im != 0) {
    if (s.im == 1) {
      out += out.empty() ? "i" : "+i";
    } else if (s.im == -1) {
      out += "-i";
    } else {
      std::string im = to_string(s.im);
      if (!out.empty() && im[0] != '-') out += '+';
      out += im + "*i";
    }
  }
  return out;
}

}  // namespace invharm
