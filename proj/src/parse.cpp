#include "fpde/parse.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <system_error>

namespace fpde {

const char* to_string(DiagnosticKind k) {
  switch (k) {
    case DiagnosticKind::syntax:
      return "syntax";
    case DiagnosticKind::non_polynomial_exponent:
      return "non-polynomial-exponent";
    case DiagnosticKind::numeric_literal_overflow:
      return "numeric-literal-overflow";
  }
  return "unknown";
}

namespace {

struct DiagError {
  ParseDiagnostic diag;
};

[[noreturn]] void fail(std::size_t pos, std::string msg,
                       DiagnosticKind kind = DiagnosticKind::syntax) {
  throw DiagError{ParseDiagnostic{pos, std::move(msg), kind}};
}

// Maximum '^' exponent; keeps pathological inputs from exploding the
// term count before anything useful happens.
constexpr int kMaxPowExponent = 255;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExpPoly run() {
    ExpPoly v = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail(pos_, "unexpected trailing input");
    return v;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == src_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExpPoly parse_sum() {
    bool negate = false;
    if (consume('-'))
      negate = true;
    else
      consume('+');
    ExpPoly acc = parse_term();
    if (negate) acc = -acc;
    for (;;) {
      if (consume('+')) {
        acc = acc + parse_term();
      } else if (consume('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  ExpPoly parse_term() {
    ExpPoly acc = parse_factor();
    for (;;) {
      if (consume('*')) {
        acc = acc * parse_factor();
      } else if (peek() == '/') {
        std::size_t slash = pos_;
        ++pos_;
        ExpPoly rhs = parse_factor();
        auto num = acc.as_constant();
        auto den = rhs.as_constant();
        if (!num || !den)
          fail(slash, "division is only allowed between constant values");
        if (*den == Cx(0.0, 0.0)) fail(slash, "division by zero");
        acc = ExpPoly::constant(*num / *den);
      } else {
        return acc;
      }
    }
  }

  ExpPoly parse_factor() {
    ExpPoly base = parse_atom();
    if (peek() != '^') return base;
    ++pos_;
    int e = parse_uint();
    if (e == 0) return ExpPoly::constant(1.0);
    return base.pow(e);
  }

  int parse_uint() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ == src_.size() ||
        !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail(start, "expected a nonnegative integer exponent after '^'");
    long v = 0;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      if (v > kMaxPowExponent)
        fail(start, "integer exponent exceeds the supported maximum of 255");
      ++pos_;
    }
    return static_cast<int>(v);
  }

  ExpPoly parse_atom() {
    skip_ws();
    if (pos_ == src_.size()) fail(pos_, "unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      ExpPoly inner = parse_sum();
      if (!consume(')')) fail(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    fail(pos_, std::string("unexpected character '") + c + "'");
  }

  ExpPoly parse_number() {
    std::size_t start = pos_;
    const char* begin = src_.data() + pos_;
    const char* end = src_.data() + src_.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec == std::errc::result_out_of_range)
      fail(start, "numeric literal overflows the double range",
           DiagnosticKind::numeric_literal_overflow);
    if (ec != std::errc() || ptr == begin)
      fail(start, "malformed numeric literal");
    pos_ += static_cast<std::size_t>(ptr - begin);
    if (pos_ < src_.size() && src_[pos_] == 'i' && !ident_continues(pos_ + 1)) {
      ++pos_;
      return ExpPoly::constant(Cx(0.0, v));
    }
    return ExpPoly::constant(Cx(v, 0.0));
  }

  bool ident_continues(std::size_t p) {
    return p < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[p])) ||
            src_[p] == '_');
  }

  ExpPoly parse_ident() {
    std::size_t start = pos_;
    while (ident_continues(pos_)) ++pos_;
    std::string_view name = src_.substr(start, pos_ - start);
    if (name == "i") return ExpPoly::constant(Cx(0.0, 1.0));
    if (name == "z1") return ExpPoly::from_poly(Poly2::z1());
    if (name == "z2") return ExpPoly::from_poly(Poly2::z2());
    if (name == "exp") {
      if (!consume('(')) fail(pos_, "expected '(' after exp");
      std::size_t arg_pos = pos_;
      ExpPoly arg = parse_sum();
      if (!consume(')')) fail(pos_, "expected ')'");
      auto p = arg.as_polynomial();
      if (!p)
        fail(arg_pos, "exp() argument must be a polynomial in z1, z2",
             DiagnosticKind::non_polynomial_exponent);
      return ExpPoly::exp_of(std::move(*p));
    }
    fail(start, "unknown identifier '" + std::string(name) + "'");
  }
};

}  // namespace

ParseResult parse_expr(std::string_view src) {
  try {
    return Parser(src).run();
  } catch (const DiagError& e) {
    return e.diag;
  } catch (const std::overflow_error& e) {
    return ParseDiagnostic{0, e.what(), DiagnosticKind::numeric_literal_overflow};
  }
}

std::variant<Cx, ParseDiagnostic> parse_complex(std::string_view src) {
  ParseResult r = parse_expr(src);
  if (auto* diag = std::get_if<ParseDiagnostic>(&r)) return *diag;
  auto c = std::get<ExpPoly>(r).as_constant();
  if (!c)
    return ParseDiagnostic{0, "expected a constant value",
                           DiagnosticKind::syntax};
  return *c;
}

namespace {

// Appends with sign-aware joining: the first piece keeps its own sign,
// later pieces contribute " + " or " - ".
void join_signed(std::string& out, const std::string& piece, bool first) {
  if (first) {
    out += piece;
  } else if (!piece.empty() && piece[0] == '-') {
    out += " - ";
    out += piece.substr(1);
  } else {
    out += " + ";
    out += piece;
  }
}

std::string format_monomial(Poly2::Key key, Cx c) {
  std::string vars;
  if (key.first > 0) {
    vars += "z1";
    if (key.first > 1) vars += "^" + std::to_string(key.first);
  }
  if (key.second > 0) {
    if (!vars.empty()) vars += "*";
    vars += "z2";
    if (key.second > 1) vars += "^" + std::to_string(key.second);
  }
  if (vars.empty()) return format_complex(c);
  if (c == Cx(1.0, 0.0)) return vars;
  if (c == Cx(-1.0, 0.0)) return "-" + vars;
  return format_complex(c) + "*" + vars;
}

bool single_monomial(const Poly2& p) { return p.terms().size() == 1; }

std::string format_term(const ExpTerm& t) {
  if (t.exponent.is_zero()) return format_poly(t.coeff);
  std::string e = "exp(" + format_poly(t.exponent) + ")";
  auto c = t.coeff.is_constant() ? t.coeff.constant_term() : Cx(0.0, 0.0);
  if (t.coeff.is_constant() && c == Cx(1.0, 0.0)) return e;
  if (t.coeff.is_constant() && c == Cx(-1.0, 0.0)) return "-" + e;
  if (single_monomial(t.coeff)) {
    const auto& [key, coeff] = *t.coeff.terms().begin();
    return format_monomial(key, coeff) + "*" + e;
  }
  return "(" + format_poly(t.coeff) + ")*" + e;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

std::string format_complex(Cx v) {
  double re = v.real(), im = v.imag();
  if (im == 0.0) return format_real(re);
  std::string imag;
  if (im == 1.0)
    imag = "i";
  else if (im == -1.0)
    imag = "-i";
  else
    imag = format_real(im) + "i";
  if (re == 0.0) return imag;
  std::string out = "(" + format_real(re);
  if (!imag.empty() && imag[0] == '-') {
    out += "-";
    out += imag.substr(1);
  } else {
    out += "+";
    out += imag;
  }
  return out + ")";
}

std::string format_poly(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Reverse map order prints z1-major monomials first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    join_signed(out, format_monomial(it->first, it->second), first);
    first = false;
  }
  return out;
}

std::string format_expr(const ExpPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    join_signed(out, format_term(t), first);
    first = false;
  }
  return out;
}

}  // namespace fpde
