#include "invharm/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace invharm {

namespace {

struct ExprContext {
  const std::map<std::string, Rational>* env = nullptr;
  std::set<std::string>* collect = nullptr;  // when set, unknown names yield 0
};

// Recursive-descent evaluator for compact rational expressions:
//   expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
//   unary := ('-'|'+') unary | number | name | '(' expr ')'
// Numerals are integers; "1/2" arises from division. Decimal literals are
// rejected with the exact fraction suggested.
class ExprParser {
 public:
  ExprParser(const std::string& s, int line, int col0, const ExprContext& ctx)
      : s_(s), line_(line), col0_(col0), ctx_(ctx) {}

  Rational parse() {
    Rational v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col0_ + int(pos_), msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Rational expr() {
    Rational v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  Rational term() {
    Rational v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) {
        Rational d = unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Rational unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a value");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Rational v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("expected a value");
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      std::size_t dot = pos_++;
      std::size_t frac_start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string whole = s_.substr(start, dot - start);
      std::string frac = s_.substr(frac_start, pos_ - frac_start);
      Rational denom(1);
      for (std::size_t i = 0; i < frac.size(); ++i) denom *= 10;
      Rational value = Rational(boost::multiprecision::cpp_int(whole.empty() ? "0" : whole)) +
                       Rational(boost::multiprecision::cpp_int(frac.empty() ? "0" : frac)) / denom;
      pos_ = start;
      fail("floats forbidden; write " + to_string(value));
    }
    return Rational(boost::multiprecision::cpp_int(s_.substr(start, pos_ - start)));
  }

  Rational name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string id = s_.substr(start, pos_ - start);
    if (ctx_.env) {
      auto it = ctx_.env->find(id);
      if (it != ctx_.env->end()) return it->second;
    }
    if (ctx_.collect) {
      ctx_.collect->insert(id);
      return Rational(0);
    }
    pos_ = start;
    fail("unknown parameter '" + id + "' (provide it with --param/--values)");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
  const ExprContext& ctx_;
};

Rational eval_expr(const std::string& s, int line, int col0, const ExprContext& ctx) {
  return ExprParser(s, line, col0, ctx).parse();
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// "e7" -> 7; returns 0 when the token is not a coframe name.
std::size_t coframe_index(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'e') return 0;
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return 0;
  return std::stoul(tok.substr(1));
}

bool looks_like_wedge(const std::string& tok) {
  std::size_t caret = tok.find('^');
  if (caret == std::string::npos) return false;
  return coframe_index(tok.substr(0, caret)) != 0;
}

struct WedgePair {
  std::size_t i, j;  // 0-based, i < j
  int sign;          // +1 or -1 relative to the written order
};

WedgePair parse_wedge(const std::string& tok, std::size_t dim, int line, int col) {
  std::size_t caret = tok.find('^');
  if (caret == std::string::npos || tok.find('^', caret + 1) != std::string::npos)
    throw ParseError(line, col, "expected a two-form term like e1^e2");
  std::size_t a = coframe_index(tok.substr(0, caret));
  std::size_t b = coframe_index(tok.substr(caret + 1));
  if (a == 0 || b == 0)
    throw ParseError(line, col, "expected coframe names e1..e" + std::to_string(dim));
  if (a > dim || b > dim)
    throw ParseError(line, col, "coframe index out of range 1.." + std::to_string(dim));
  if (a == b) throw ParseError(line, col, "repeated index in wedge term");
  if (a < b) return {a - 1, b - 1, 1};
  return {b - 1, a - 1, -1};
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  ExprContext ctx;
  std::map<std::string, Rational> empty;
  ctx.env = &empty;
  return eval_expr(text, 1, 1, ctx);
}

namespace {

ManifoldSpec parse_impl(const std::string& text, const std::map<std::string, Rational>& params,
                        std::set<std::string>* collect) {
  ExprContext ctx;
  ctx.env = &params;
  ctx.collect = collect;

  ManifoldSpec spec;
  std::string name = "unnamed";
  std::size_t dim = 0;
  bool have_algebra = false, have_j = false, have_metric = false;
  std::vector<Vec> j_rows, g_rows;
  std::vector<std::string> dlines_seen;  // generator -> defined, index by k
  std::vector<bool> k_has_dline, k_has_cline;

  std::string section;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(lineno, 1, "malformed section header");
      section = line.substr(1, line.size() - 2);
      if (section == "algebra") have_algebra = true;
      else if (section == "J") have_j = true;
      else if (section == "metric") have_metric = true;
      else if (section != "meta")
        throw ParseError(lineno, 1, "unknown section [" + section + "]");
      continue;
    }

    if (section.empty())
      throw ParseError(lineno, 1, "content before the first section header");

    if (section == "meta") {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) throw ParseError(lineno, 1, "expected key = value");
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key == "name") name = value;
      else if (key == "params") {
        // declarative only; the expressions themselves name their parameters
      } else {
        throw ParseError(lineno, 1, "unknown meta key '" + key + "'");
      }
      continue;
    }

    if (section == "algebra") {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) throw ParseError(lineno, 1, "expected '='");
      std::string lhs = trim(line.substr(0, eq));
      std::string rhs = trim(line.substr(eq + 1));
      std::vector<std::string> lhs_toks = split_ws(lhs);

      if (lhs == "dim") {
        Rational v = eval_expr(rhs, lineno, int(eq) + 2, ctx);
        if (denominator(v) != 1 || v <= 0 || v > 8 || (numerator(v) % 2) != 0)
          throw ParseError(lineno, int(eq) + 2,
                           "dim must be a positive even integer (at most 8)");
        dim = std::size_t(numerator(v));
        spec = ManifoldSpec::empty(dim);
        k_has_dline.assign(dim, false);
        k_has_cline.assign(dim, false);
        continue;
      }
      if (dim == 0) throw ParseError(lineno, 1, "dim must come first in [algebra]");

      if (lhs_toks.size() == 2 && lhs_toks[0] == "d") {
        std::size_t k = coframe_index(lhs_toks[1]);
        if (k == 0 || k > dim)
          throw ParseError(lineno, 1, "expected d e1..e" + std::to_string(dim));
        if (k_has_dline[k - 1] || k_has_cline[k - 1])
          throw ParseError(lineno, 1, "duplicate definition for d e" + std::to_string(k));
        k_has_dline[k - 1] = true;

        // terms: [sign] [coefficient] ei^ej, coefficient defaults to 1
        std::vector<std::string> toks = split_ws(rhs);
        if (toks.size() == 1 && toks[0] == "0") continue;
        Rational coeff(1);
        bool have_coeff = false;
        int sign = 1;
        auto flush = [&](const WedgePair& w) {
          Rational value = coeff * sign * w.sign;
          // d e^k = -sum c^k_{ij} e^i ^ e^j
          if (spec.structure_constant(k - 1, w.i, w.j) != 0)
            throw ParseError(lineno, 1, "repeated wedge term in d-line");
          spec.set_structure_constant(k - 1, w.i, w.j, -value);
          coeff = 1;
          have_coeff = false;
          sign = 1;
        };
        for (std::size_t t = 0; t < toks.size(); ++t) {
          std::string tok = toks[t];
          if (tok == "+") continue;
          if (tok == "-") {
            sign = -sign;
            continue;
          }
          if (tok[0] == '-' && tok.size() > 1) {
            sign = -sign;
            tok = tok.substr(1);
          } else if (tok[0] == '+' && tok.size() > 1) {
            tok = tok.substr(1);
          }
          // combined coefficient*wedge in one token
          std::size_t split = std::string::npos;
          for (std::size_t p = 0; p + 1 < tok.size(); ++p) {
            if (tok[p] == '*' && tok[p + 1] == 'e' && p + 2 < tok.size() &&
                std::isdigit(static_cast<unsigned char>(tok[p + 2])) &&
                looks_like_wedge(tok.substr(p + 1))) {
              split = p;
              break;
            }
          }
          if (split != std::string::npos) {
            coeff *= eval_expr(tok.substr(0, split), lineno, 1, ctx);
            have_coeff = true;
            tok = tok.substr(split + 1);
          }
          if (looks_like_wedge(tok)) {
            flush(parse_wedge(tok, dim, lineno, 1));
          } else {
            if (have_coeff)
              throw ParseError(lineno, 1, "coefficient '" + tok + "' without a wedge term");
            coeff *= eval_expr(tok, lineno, 1, ctx);
            have_coeff = true;
          }
        }
        if (have_coeff) throw ParseError(lineno, 1, "trailing coefficient without wedge term");
        continue;
      }

      if (lhs_toks.size() == 4 && lhs_toks[0] == "c") {
        std::size_t k = 0, i = 0, j = 0;
        try {
          k = std::stoul(lhs_toks[1]);
          i = std::stoul(lhs_toks[2]);
          j = std::stoul(lhs_toks[3]);
        } catch (...) {
          throw ParseError(lineno, 1, "expected c k i j = value");
        }
        if (k == 0 || i == 0 || j == 0 || k > dim || i > dim || j > dim || i == j)
          throw ParseError(lineno, 1, "structure constant indices out of range");
        if (k_has_dline[k - 1])
          throw ParseError(lineno, 1, "mixing c-lines with a d-line for e" + std::to_string(k));
        if (spec.structure_constant(k - 1, i - 1, j - 1) != 0)
          throw ParseError(lineno, 1, "duplicate structure constant");
        k_has_cline[k - 1] = true;
        spec.set_structure_constant(k - 1, i - 1, j - 1,
                                    eval_expr(rhs, lineno, int(eq) + 2, ctx));
        continue;
      }
      throw ParseError(lineno, 1, "expected 'dim = ..', 'd ek = ..' or 'c k i j = ..'");
    }

    if (section == "J" || section == "metric") {
      if (dim == 0) throw ParseError(lineno, 1, "[algebra] with dim must come before matrices");
      std::vector<std::string> toks = split_ws(line);
      if (toks.size() != dim)
        throw ParseError(lineno, 1, "expected " + std::to_string(dim) +
                                        " entries per row, got " + std::to_string(toks.size()));
      Vec row(dim);
      int col = 1;
      for (std::size_t t = 0; t < dim; ++t) {
        row[t] = Scalar(eval_expr(toks[t], lineno, col, ctx));
        col += int(toks[t].size()) + 1;
      }
      (section == "J" ? j_rows : g_rows).push_back(std::move(row));
      continue;
    }
  }

  if (!have_algebra) throw ParseError(lineno, 1, "missing section [algebra]");
  if (dim == 0) throw ParseError(lineno, 1, "missing 'dim =' line in [algebra]");
  if (!have_j) throw ParseError(lineno, 1, "missing section [J]");
  if (!have_metric) throw ParseError(lineno, 1, "missing section [metric]");
  if (j_rows.size() != dim)
    throw ParseError(lineno, 1, "[J] must have exactly " + std::to_string(dim) + " rows");
  if (g_rows.size() != dim)
    throw ParseError(lineno, 1, "[metric] must have exactly " + std::to_string(dim) + " rows");

  spec.J = Matrix::from_rows(j_rows);
  spec.g = Matrix::from_rows(g_rows);
  spec.name = name;
  return spec;
}

}  // namespace

ManifoldSpec parse_spec_text(const std::string& text,
                             const std::map<std::string, Rational>& params) {
  return parse_impl(text, params, nullptr);
}

std::vector<std::string> required_params(const std::string& text) {
  std::set<std::string> names;
  std::map<std::string, Rational> empty;
  parse_impl(text, empty, &names);
  return {names.begin(), names.end()};
}

std::string serialize_spec(const ManifoldSpec& spec) {
  std::ostringstream os;
  os << "[meta]\n";
  os << "name = " << spec.name << "\n\n";
  os << "[algebra]\n";
  os << "dim = " << spec.dim << "\n";
  for (std::size_t k = 0; k < spec.dim; ++k) {
    os << "d e" << (k + 1) << " =";
    bool first = true;
    for (std::size_t i = 0; i < spec.dim; ++i)
      for (std::size_t j = i + 1; j < spec.dim; ++j) {
        Rational coeff = -spec.structure_constant(k, i, j);
        if (coeff == 0) continue;
        Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
        if (first) {
          os << " " << (coeff < 0 ? "-" : "");
          first = false;
        } else {
          os << (coeff < 0 ? " - " : " + ");
        }
        if (mag != 1) os << to_string(mag) << " ";
        os << "e" << (i + 1) << "^e" << (j + 1);
      }
    if (first) os << " 0";
    os << "\n";
  }
  auto matrix_rows = [&os](const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) os << " ";
        os << to_string(m(i, j).re);
      }
      os << "\n";
    }
  };
  os << "\n[J]\n";
  matrix_rows(spec.J);
  os << "\n[metric]\n";
  matrix_rows(spec.g);
  return os.str();
}

}  // namespace invharm
