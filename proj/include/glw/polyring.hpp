#pragma once

// Exact sparse multivariate polynomials over Q in the generators
// N, C1, C2, ..., p1, p2, ..., K1, K2, ... and truncated power series
// with polynomial coefficients.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace glw {

using Rational = mpq_class;
using Integer = mpz_class;

/// Generator of the polynomial ring. Total order:
/// N < C(1) < C(2) < ... < P(1) < P(2) < ... < K(1) < K(2) < ...
/// K(n) is a formal symbol standing for the chord diagram K_n.
class Generator {
public:
  enum class Kind : std::uint8_t { N = 0, C = 1, P = 2, K = 3 };

  static Generator n() { return Generator(Kind::N, 0); }
  static Generator casimir(unsigned k);
  static Generator power_sum(unsigned k);
  static Generator chord(unsigned k);

  Kind kind() const { return static_cast<Kind>(code_ >> 24); }
  unsigned index() const { return code_ & 0xFFFFFFu; }
  std::uint32_t code() const { return code_; }

  /// "N", "C3", "p2", "K4".
  std::string name() const;
  /// Inverse of name(); throws ParseError.
  static Generator from_name(std::string_view s);

  auto operator<=>(const Generator&) const = default;

private:
  Generator(Kind kind, unsigned index);
  std::uint32_t code_;
};

/// A product of generators with positive exponents, sorted by generator.
class Monomial {
public:
  using Factor = std::pair<Generator, unsigned>;

  Monomial() = default;
  explicit Monomial(Generator g, unsigned exponent = 1);
  /// Factors may be unsorted and repeated; zero exponents are dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  unsigned exponent(Generator g) const;
  unsigned total_degree() const;
  /// Sum of k * exponent over C(k) factors.
  unsigned weighted_c_degree() const;
  /// Sum of k * exponent over C(k), P(k) and K(k) factors; N has weight 0.
  unsigned weighted_degree() const;

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
  /// Storage/print order: lexicographic on exponent vectors, earlier
  /// generators first, higher exponents first. The unit monomial is last.
  friend bool term_order_before(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

private:
  std::vector<Factor> factors_;
};

struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return term_order_before(a, b); }
};

/// Canonical sparse polynomial: terms sorted in TermOrder, no zero coefficients.
class Polynomial {
public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(long constant); // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Rational& constant);
  explicit Polynomial(Generator g, unsigned exponent = 1);
  Polynomial(const Monomial& m, const Rational& coeff);
  /// Sums like terms and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of m (zero when absent).
  Rational coefficient(const Monomial& m) const;
  bool is_constant() const;
  /// True when every coefficient has denominator 1.
  bool has_integer_coefficients() const;
  bool uses_only(std::initializer_list<Generator::Kind> kinds) const;
  /// Largest weighted C-degree over all terms (0 for the zero polynomial).
  unsigned max_weighted_c_degree() const;
  /// Largest index k with C(k) or P(k) or K(k) present.
  unsigned max_index(Generator::Kind kind) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;

  /// Human-readable form, e.g. "-N*C2 + C1^2 + C2^2".
  std::string to_string() const;
  std::string to_latex() const;

private:
  void canonicalize_sorted();
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

using Assignment = std::map<Generator, Polynomial>;
using Valuation = std::map<Generator, Rational>;

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// Simultaneous substitution; unmapped generators stay as they are.
Polynomial poly_substitute(const Polynomial& p, const Assignment& assignment);
/// Throws DomainError naming the first generator without a value.
Rational poly_eval_rational(const Polynomial& p, const Valuation& values);

/// Parses "2 C2 N^2 + (-2 C1^2 - 3 C2^2) N - 1/4*p1". Juxtaposition
/// multiplies; division is allowed by nonzero rational constants only.
Polynomial parse_polynomial(std::string_view text);

/// Rational to "num/den" (always with a denominator) and back.
std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Truncated power series sum_{j<=T} coeffs[j] u^j.
class PowerSeries {
public:
  explicit PowerSeries(unsigned truncation_order);
  PowerSeries(unsigned truncation_order, std::vector<Polynomial> coeffs);
  /// The single-term series c * u^power (zero when power > T).
  static PowerSeries monomial(unsigned truncation_order, unsigned power, const Polynomial& c);

  unsigned order() const { return order_; }
  const Polynomial& operator[](unsigned j) const { return coeffs_.at(j); }
  Polynomial& operator[](unsigned j) { return coeffs_.at(j); }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

  bool operator==(const PowerSeries&) const = default;

private:
  unsigned order_;
  std::vector<Polynomial> coeffs_;
};

/// Cauchy product; throws DomainError on mismatched truncation orders.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
/// exp(a) for a with zero constant term.
PowerSeries series_exp(const PowerSeries& a);
/// log(a) for a with constant term exactly 1.
PowerSeries series_log(const PowerSeries& a);
/// (1 - c u)^(-j) for j >= 0, expanded by the binomial series.
PowerSeries series_inverse_binomial(unsigned truncation_order, const Polynomial& c, unsigned j);

} // namespace glw

template <>
struct std::hash<glw::Monomial> {
  std::size_t operator()(const glw::Monomial& m) const { return m.hash(); }
};
