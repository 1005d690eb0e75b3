#pragma once

#include <map>
#include <stdexcept>

#include "invharm/manifold_spec.hpp"

namespace invharm {

/// Parse failure with 1-based position information.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_, col_;
};

/// Parses a manifold spec document. Sections: [meta] (optional name and
/// params), [algebra] (dim plus coframe differentials "d e4 = e1^e2" or
/// bracket constants "c 4 1 2 = -1"), [J] and [metric] (matrix rows).
/// All numerals are exact rationals; decimal literals are rejected.
/// Parameter slots named in [meta] are substituted from `params`.
ManifoldSpec parse_spec_text(const std::string& text,
                             const std::map<std::string, Rational>& params = {});

/// Parameters a document requires before it can be instantiated.
std::vector<std::string> required_params(const std::string& text);

/// Canonical serialization; parse(serialize(parse(text))) == parse(text).
std::string serialize_spec(const ManifoldSpec& spec);

/// Single rational from "p/q" or integer text (CLI --values entries).
Rational parse_rational(const std::string& text);

}  // namespace invharm
