#pragma once

// Direct computation in U(gl_N) for small concrete N: PBW normal ordering,
// Casimir elements, the brute-force weight system and Harish-Chandra parts.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glw/diagrams.hpp"
#include "glw/hc.hpp"
#include "glw/polyring.hpp"

namespace glw {

/// E_ij with 1 <= i, j <= 63.
class MatrixUnit {
public:
  enum class Kind : std::uint8_t { Lowering = 0, Cartan = 1, Raising = 2 };

  MatrixUnit(unsigned i, unsigned j);
  unsigned row() const { return code_ >> 6 & 63u; }
  unsigned col() const { return code_ & 63u; }
  Kind kind() const { return static_cast<Kind>(code_ >> 12); }
  /// Position in the PBW order: lowering (lex), Cartan, raising (lex).
  char16_t code() const { return code_; }
  static MatrixUnit from_code(char16_t code);
  std::string to_string() const;
  auto operator<=>(const MatrixUnit&) const = default;

private:
  MatrixUnit() = default;
  char16_t code_ = 0;
};

/// Ordered product of matrix units, non-decreasing in the PBW order.
class PBWMonomial {
public:
  PBWMonomial() = default;
  /// Throws DomainError unless the letters are non-decreasing.
  explicit PBWMonomial(std::u16string letters);
  static PBWMonomial from_units(const std::vector<MatrixUnit>& units);

  const std::u16string& letters() const { return letters_; }
  std::size_t degree() const { return letters_.size(); }
  /// Runs of equal units as (unit, exponent), strictly increasing units.
  std::vector<std::pair<MatrixUnit, unsigned>> factors() const;
  bool only_cartan() const;
  std::string to_string() const;
  auto operator<=>(const PBWMonomial&) const = default;

private:
  std::u16string letters_;
};

/// Element of U(gl_N) in PBW normal form; no zero coefficients.
class UElement {
public:
  explicit UElement(unsigned n);
  static UElement unit(unsigned n, const Rational& c = 1);
  static UElement generator(unsigned n, unsigned i, unsigned j);

  unsigned rank() const { return n_; }
  const std::map<PBWMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Adds c times a normal-form monomial; throws DomainError if a unit is out of range.
  void add(const PBWMonomial& m, const Rational& c);

  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const Rational& c);
  bool operator==(const UElement& o) const = default;
  std::string to_string() const;

private:
  unsigned n_;
  std::map<PBWMonomial, Rational> terms_;
};

inline UElement operator+(UElement a, const UElement& b) { return a += b; }
inline UElement operator-(UElement a, const UElement& b) { return a -= b; }

/// PBW normal ordering for a fixed N. Keeps a memo of left insertions
/// x * W with W already in normal form. Not thread-safe; use one per thread.
class PBWAlgebra {
public:
  explicit PBWAlgebra(unsigned n);
  unsigned rank() const { return n_; }

  /// Normal form of an arbitrary product of matrix units.
  UElement normalize(const std::vector<MatrixUnit>& word);
  UElement multiply(const UElement& a, const UElement& b);
  std::size_t memo_size() const { return memo_.size(); }

  using Terms = std::vector<std::pair<std::u16string, Rational>>;
  /// Normal form of word * (sum of terms), accumulated into out.
  void multiply_word_into(const std::u16string& word, const Terms& right, const Rational& scale,
                          std::map<std::u16string, Rational>& out);

private:
  const Terms& insert(char16_t x, const std::u16string& w);

  unsigned n_;
  std::map<std::u16string, Terms> memo_;
};

/// Which adjacent inversion a reference rewriting fixes first.
enum class ReductionOrder { LeftmostFirst, RightmostFirst };

/// Unmemoized rewriting of a word into PBW form; used to cross-check
/// uniqueness of the normal form.
UElement normalize_by_rewriting(const std::vector<MatrixUnit>& word, unsigned n, ReductionOrder order);

/// Throws DomainError when N differs.
UElement u_mul(const UElement& a, const UElement& b);

/// Caps for the brute-force sum; exceeding them throws ResourceLimitError.
struct OracleLimits {
  unsigned max_rank = 3;
  unsigned max_length = 6;
};

/// sum over i_1..i_m of E_{i_1 i_sigma(1)} ... E_{i_m i_sigma(m)}, serial reference.
UElement w_direct_serial(const Permutation& p, unsigned n, const OracleLimits& limits = {});
/// Same sum split across OpenMP threads.
UElement w_direct(const Permutation& p, unsigned n, const OracleLimits& limits = {});

/// sum E_{i1 i2} E_{i2 i3} ... E_{ik i1}; throws DomainError for k = 0.
UElement casimir_element(unsigned k, unsigned n);

/// Substitutes N -> n and C_k -> casimir_element(k, n).
/// Throws DomainError for P or K generators.
UElement expand_polynomial(const Polynomial& p, unsigned n);

/// True iff a commutes with every E_ij.
bool is_central(const UElement& a);

/// The monomials made of Cartan units only.
UElement cartan_part(const UElement& a);
/// Substitutes E_ii -> lambda_i; throws DomainError if the rank differs
/// or a non-Cartan unit is present.
Rational evaluate_cartan(const UElement& cartan, const WeightVector& w);

} // namespace glw
