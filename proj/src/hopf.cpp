#include "glw/hopf.hpp"

#include <algorithm>

#include "glw/errors.hpp"

namespace glw {

void DiagramCombination::add(DiagramProduct product, const Integer& coeff) {
  if (coeff == 0)
    return;
  std::sort(product.begin(), product.end());
  auto [it, inserted] = terms_.emplace(std::move(product), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

ChordDiagram chord_subdiagram(const ChordDiagram& d, const std::vector<std::size_t>& chords) {
  std::vector<unsigned> endpoints;
  for (std::size_t i : chords) {
    if (i >= d.chord_count())
      throw DomainError("chord index " + std::to_string(i) + " out of range");
    endpoints.push_back(d.chords()[i].first);
    endpoints.push_back(d.chords()[i].second);
  }
  std::sort(endpoints.begin(), endpoints.end());
  if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end())
    throw DomainError("chord index repeated in subdiagram selection");
  auto relabel = [&](unsigned v) {
    return static_cast<unsigned>(std::lower_bound(endpoints.begin(), endpoints.end(), v) - endpoints.begin() + 1);
  };
  std::vector<ChordDiagram::Chord> pairs;
  for (std::size_t i : chords)
    pairs.emplace_back(relabel(d.chords()[i].first), relabel(d.chords()[i].second));
  return ChordDiagram(std::move(pairs));
}

std::vector<std::pair<ChordDiagram, ChordDiagram>> coproduct(const ChordDiagram& d) {
  const std::size_t n = d.chord_count();
  if (n >= 24)
    throw ResourceLimitError("coproduct of a diagram with " + std::to_string(n) + " chords");
  std::vector<std::pair<ChordDiagram, ChordDiagram>> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> in, out_set;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1u ? in : out_set).push_back(i);
    out.emplace_back(chord_subdiagram(d, in), chord_subdiagram(d, out_set));
  }
  return out;
}

std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> result;
  if (n == 0) {
    result.emplace_back();
    return result;
  }
  if (n > 14)
    throw ResourceLimitError("set partitions of " + std::to_string(n) + " elements");
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0), running_max(n, 0);
  while (true) {
    std::size_t blocks = running_max[n - 1] + 1;
    std::vector<std::vector<std::size_t>> partition(blocks);
    for (std::size_t i = 0; i < n; ++i)
      partition[a[i]].push_back(i);
    result.push_back(std::move(partition));

    std::size_t i = n - 1;
    while (i > 0 && a[i] == running_max[i - 1] + 1)
      --i;
    if (i == 0)
      break;
    ++a[i];
    running_max[i] = std::max(running_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      running_max[j] = running_max[i];
    }
  }
  return result;
}

DiagramCombination primitive_projection(const ChordDiagram& d) {
  DiagramCombination c;
  if (d.chord_count() == 0) {
    // The unit is not primitive; pi kills it.
    return c;
  }
  for (const auto& partition : set_partitions(d.chord_count())) {
    const std::size_t blocks = partition.size();
    Integer coeff;
    mpz_fac_ui(coeff.get_mpz_t(), blocks - 1);
    if (blocks % 2 == 0)
      coeff = -coeff;
    DiagramProduct product;
    for (const auto& block : partition)
      product.push_back(chord_subdiagram(d, block));
    c.add(std::move(product), coeff);
  }
  return c;
}

Polynomial evaluate_combination(const DiagramCombination& c, Engine& engine) {
  std::map<ChordDiagram, Polynomial> values;
  Polynomial total;
  for (const auto& [product, coeff] : c.terms()) {
    Polynomial term{Rational(coeff)};
    for (const auto& d : product) {
      auto it = values.find(d);
      if (it == values.end())
        it = values.emplace(d, engine.wgl(d)).first;
      term *= it->second;
    }
    total += term;
  }
  return total;
}

Polynomial wbar(const ChordDiagram& d, Engine& engine) { return evaluate_combination(primitive_projection(d), engine); }

Polynomial wbar(const ChordDiagram& d) {
  Engine engine;
  return wbar(d, engine);
}

KSeries kn_primitive_series(unsigned n_max) {
  if (n_max < 1)
    throw DomainError("series needs n_max >= 1");
  PowerSeries egf(n_max);
  egf[0] = Polynomial(1L);
  Integer factorial = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    factorial *= n;
    egf[n] = Polynomial(Generator::chord(n)) * Rational(1, factorial);
  }
  PowerSeries log_egf = series_log(egf);
  KSeries out;
  out.n_max = n_max;
  factorial = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    factorial *= n;
    out.coefficients.push_back(log_egf[n] * Rational(factorial));
  }
  return out;
}

Polynomial combination_to_k_polynomial(const DiagramCombination& c) {
  Polynomial total;
  for (const auto& [product, coeff] : c.terms()) {
    std::vector<Monomial::Factor> factors;
    for (const auto& d : product) {
      const auto n = static_cast<unsigned>(d.chord_count());
      if (n == 0 || !(d == make_kn(n)))
        throw DomainError("diagram " + d.to_string() + " is not of the form K_n");
      factors.emplace_back(Generator::chord(n), 1);
    }
    total += Polynomial(Monomial::from_factors(std::move(factors)), Rational(coeff));
  }
  return total;
}

Polynomial evaluate_k_polynomial(const Polynomial& p, const std::map<unsigned, Polynomial>& values) {
  Assignment assignment;
  for (const auto& [n, v] : values)
    assignment.emplace(Generator::chord(n), v);
  return poly_substitute(p, assignment);
}

// ------------------------------------------------------------ TensorElement

bool TensorElement::KeyLess::operator()(const Key& a, const Key& b) const {
  if (!(a.first == b.first))
    return term_order_before(a.first, b.first);
  return term_order_before(a.second, b.second);
}

void TensorElement::add_term(const Key& k, const Rational& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

TensorElement TensorElement::pure(const Polynomial& left, const Polynomial& right) {
  TensorElement t;
  for (const auto& [ml, cl] : left.terms())
    for (const auto& [mr, cr] : right.terms())
      t.add_term({ml, mr}, cl * cr);
  return t;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_)
    add_term(k, c);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term({ka.first * kb.first, ka.second * kb.second}, ca * cb);
  return r;
}

TensorElement formal_coproduct(const Polynomial& k_polynomial) {
  if (!k_polynomial.uses_only({Generator::Kind::K}))
    throw DomainError("formal coproduct expects a polynomial in K_n only");
  auto delta_k = [](unsigned n) {
    TensorElement t;
    for (unsigned j = 0; j <= n; ++j) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), n, j);
      Polynomial left = j == 0 ? Polynomial(1L) : Polynomial(Generator::chord(j));
      Polynomial right = j == n ? Polynomial(1L) : Polynomial(Generator::chord(n - j));
      t += TensorElement::pure(left * Rational(binom), right);
    }
    return t;
  };
  TensorElement total;
  for (const auto& [m, c] : k_polynomial.terms()) {
    TensorElement term = TensorElement::pure(Polynomial(c), Polynomial(1L));
    for (const auto& [g, e] : m.factors()) {
      TensorElement d = delta_k(g.index());
      for (unsigned i = 0; i < e; ++i)
        term = term * d;
    }
    total += term;
  }
  return total;
}

bool is_primitive(const Polynomial& k_polynomial) {
  TensorElement expected = TensorElement::pure(Polynomial(1L), k_polynomial) +
                           TensorElement::pure(k_polynomial, Polynomial(1L));
  return formal_coproduct(k_polynomial) == expected;
}

} // namespace glw
