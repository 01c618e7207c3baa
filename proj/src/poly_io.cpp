#include <cctype>
#include <sstream>

#include "glw/errors.hpp"
#include "glw/polyring.hpp"

namespace glw {

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](std::string_view part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size())
      return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("bad rational '" + s + "'");
  if (num.front() == '+')
    num.erase(0, 1);
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0)
    throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

namespace {

std::string format_magnitude(const Rational& c) {
  Rational a = abs(c);
  if (a.get_den() == 1)
    return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::string latex_name(Generator g) {
  switch (g.kind()) {
  case Generator::Kind::N: return "N";
  case Generator::Kind::C: return "C_{" + std::to_string(g.index()) + "}";
  case Generator::Kind::P: return "p_{" + std::to_string(g.index()) + "}";
  case Generator::Kind::K: return "K_{" + std::to_string(g.index()) + "}";
  }
  return "?";
}

} // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit_coeff = abs(c) == 1;
    if (m.is_unit()) {
      os << format_magnitude(c);
      continue;
    }
    if (!unit_coeff)
      os << format_magnitude(c) << "*";
    bool first_factor = true;
    for (const auto& [g, e] : m.factors()) {
      if (!first_factor)
        os << "*";
      first_factor = false;
      os << g.name();
      if (e > 1)
        os << "^" << e;
    }
  }
  return os.str();
}

std::string Polynomial::to_latex() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? "-" : "+");
    first = false;
    Rational a = abs(c);
    bool unit_coeff = a == 1;
    if (!unit_coeff || m.is_unit()) {
      if (a.get_den() == 1)
        os << a.get_num().get_str();
      else
        os << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
      if (!m.is_unit())
        os << " ";
    }
    bool first_factor = true;
    for (const auto& [g, e] : m.factors()) {
      if (!first_factor)
        os << " ";
      first_factor = false;
      os << latex_name(g);
      if (e > 1)
        os << "^{" << e << "}";
    }
  }
  return os.str();
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected token");
    return p;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])))
      ++end;
    std::string token(text_.substr(pos_, std::max<std::size_t>(end - pos_, pos_ < text_.size() ? 1 : 0)));
    throw ParseError(what + " at position " + std::to_string(pos_) +
                     (token.empty() ? std::string(" (end of input)") : " near '" + token + "'"));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Polynomial expr() {
    Polynomial result;
    char c = peek();
    int sign = 1;
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    result = term();
    if (sign < 0)
      result = -result;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-')
        break;
      ++pos_;
      Polynomial t = term();
      if (c == '+')
        result += t;
      else
        result -= t;
    }
    return result;
  }

  Polynomial term() {
    Polynomial result = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        result *= power();
      } else if (c == '/') {
        ++pos_;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero())
          fail("division by a non-constant or zero");
        result *= Rational(1) / d.terms()[0].second;
      } else if (starts_factor()) {
        result *= power();
      } else {
        break;
      }
    }
    return result;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_)
        fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')')
        fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return Polynomial(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      try {
        return Polynomial(Generator::from_name(name));
      } catch (const ParseError&) {
        pos_ = start;
        fail("unknown generator");
      }
    }
    fail("expected a number, generator or '('");
  }
};

} // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

} // namespace glw
