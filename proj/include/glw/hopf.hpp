#pragma once

// Projection of chord diagrams to primitive elements and the projected
// weight system wbar = w o pi.

#include <map>
#include <vector>

#include "glw/diagrams.hpp"
#include "glw/engine.hpp"
#include "glw/polyring.hpp"

namespace glw {

/// Formal product of chord diagrams, stored as a sorted list (multiset).
/// The empty list is the unit.
using DiagramProduct = std::vector<ChordDiagram>;

/// Integer combination of formal diagram products; no zero coefficients.
class DiagramCombination {
public:
  void add(DiagramProduct product, const Integer& coeff);
  const std::map<DiagramProduct, Integer>& terms() const { return terms_; }
  bool operator==(const DiagramCombination&) const = default;

private:
  std::map<DiagramProduct, Integer> terms_;
};

/// chords are indices into d.chords().
ChordDiagram chord_subdiagram(const ChordDiagram& d, const std::vector<std::size_t>& chords);
/// All 2^n pairs (D_J, D_complement), J enumerated by bitmask 0 .. 2^n - 1
/// (bit i selects chord i).
std::vector<std::pair<ChordDiagram, ChordDiagram>> coproduct(const ChordDiagram& d);

/// Unordered set partitions of {0..n-1}, blocks sorted, in restricted growth order.
std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n);

/// pi(D) = sum over set partitions of the chords into i blocks of
/// (-1)^(i+1) (i-1)! times the product of the block subdiagrams.
DiagramCombination primitive_projection(const ChordDiagram& d);

/// Replaces each diagram by w_GL and each formal product by a product.
Polynomial evaluate_combination(const DiagramCombination& c, Engine& engine);
/// w_GL(pi(d)).
Polynomial wbar(const ChordDiagram& d, Engine& engine);
Polynomial wbar(const ChordDiagram& d);

/// Coefficients of x^n/n! in log(1 + sum_n K_n x^n/n!), as polynomials in the
/// formal symbols K1, K2, ...; coefficients[n-1] belongs to x^n/n!.
struct KSeries {
  unsigned n_max = 0;
  std::vector<Polynomial> coefficients;
};
KSeries kn_primitive_series(unsigned n_max);

/// Reads a combination whose diagrams are all of the form K_j as a
/// polynomial in K1, K2, ...; throws DomainError otherwise.
Polynomial combination_to_k_polynomial(const DiagramCombination& c);

/// Substitutes K_j -> value(K_j).
Polynomial evaluate_k_polynomial(const Polynomial& p, const std::map<unsigned, Polynomial>& values);

/// Element of A (x) A for the free commutative algebra A on K1, K2, ...
class TensorElement {
public:
  using Key = std::pair<Monomial, Monomial>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const;
  };

  static TensorElement pure(const Polynomial& left, const Polynomial& right);

  TensorElement& operator+=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
  const std::map<Key, Rational, KeyLess>& terms() const { return terms_; }

private:
  void add_term(const Key& k, const Rational& c);
  std::map<Key, Rational, KeyLess> terms_;
};

/// Multiplicative extension of K_n -> sum_j binom(n, j) K_j (x) K_{n-j}, K_0 = 1.
TensorElement formal_coproduct(const Polynomial& k_polynomial);
bool is_primitive(const Polynomial& k_polynomial);

} // namespace glw
