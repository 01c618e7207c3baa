#include "glw/polyring.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "glw/errors.hpp"

namespace glw {

// ---------------------------------------------------------------- Generator

Generator::Generator(Kind kind, unsigned index)
    : code_((static_cast<std::uint32_t>(kind) << 24) | index) {
  if (kind != Kind::N && index == 0)
    throw DomainError("generator index must be >= 1");
  if (index > 0xFFFFFFu)
    throw DomainError("generator index too large");
}

Generator Generator::casimir(unsigned k) { return Generator(Kind::C, k); }
Generator Generator::power_sum(unsigned k) { return Generator(Kind::P, k); }
Generator Generator::chord(unsigned k) { return Generator(Kind::K, k); }

std::string Generator::name() const {
  switch (kind()) {
  case Kind::N: return "N";
  case Kind::C: return "C" + std::to_string(index());
  case Kind::P: return "p" + std::to_string(index());
  case Kind::K: return "K" + std::to_string(index());
  }
  return "?";
}

Generator Generator::from_name(std::string_view s) {
  if (s == "N")
    return n();
  if (s.size() >= 2 && std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    unsigned long k = std::stoul(std::string(s.substr(1)));
    if (k >= 1 && k <= 0xFFFFFFu) {
      switch (s[0]) {
      case 'C': return casimir(static_cast<unsigned>(k));
      case 'p':
      case 'P': return power_sum(static_cast<unsigned>(k));
      case 'K': return chord(static_cast<unsigned>(k));
      default: break;
      }
    }
  }
  throw ParseError("unknown generator '" + std::string(s) + "'");
}

// ----------------------------------------------------------------- Monomial

Monomial::Monomial(Generator g, unsigned exponent) {
  if (exponent > 0)
    factors_.emplace_back(g, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [g, e] : factors) {
    if (e == 0)
      continue;
    if (!m.factors_.empty() && m.factors_.back().first == g)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(g, e);
  }
  return m;
}

unsigned Monomial::exponent(Generator g) const {
  for (const auto& [h, e] : factors_)
    if (h == g)
      return e;
  return 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_)
    d += f.second;
  return d;
}

unsigned Monomial::weighted_c_degree() const {
  unsigned d = 0;
  for (const auto& [g, e] : factors_)
    if (g.kind() == Generator::Kind::C)
      d += g.index() * e;
  return d;
}

unsigned Monomial::weighted_degree() const {
  unsigned d = 0;
  for (const auto& [g, e] : factors_)
    if (g.kind() != Generator::Kind::N)
      d += g.index() * e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first) {
      r.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, other.factors_.end());
  return r;
}

bool term_order_before(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first)
      return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second)
      return fa[i].second > fb[i].second;
  }
  return i < fa.size() && i == fb.size();
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& [g, e] : factors_) {
    h ^= (static_cast<std::size_t>(g.code()) << 8) ^ e;
    h *= 0x100000001b3ull;
  }
  return h;
}

// --------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0)
    terms_.emplace_back(Monomial(), constant);
}

Polynomial::Polynomial(Generator g, unsigned exponent) {
  terms_.emplace_back(Monomial(g, exponent), Rational(1));
}

Polynomial::Polynomial(const Monomial& m, const Rational& coeff) {
  if (coeff != 0)
    terms_.emplace_back(m, coeff);
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  std::stable_sort(p.terms_.begin(), p.terms_.end(),
                   [](const Term& x, const Term& y) { return term_order_before(x.first, y.first); });
  p.canonicalize_sorted();
  return p;
}

void Polynomial::canonicalize_sorted() {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return term_order_before(t.first, x); });
  if (it != terms_.end() && it->first == m)
    return it->second;
  return Rational(0);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit());
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second.get_den() == 1; });
}

bool Polynomial::uses_only(std::initializer_list<Generator::Kind> kinds) const {
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors())
      if (std::find(kinds.begin(), kinds.end(), f.first.kind()) == kinds.end())
        return false;
  return true;
}

unsigned Polynomial::max_weighted_c_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_)
    d = std::max(d, t.first.weighted_c_degree());
  return d;
}

unsigned Polynomial::max_index(Generator::Kind kind) const {
  unsigned k = 0;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors())
      if (f.first.kind() == kind)
        k = std::max(k, f.first.index());
  return k;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_)
    t.second = -t.second;
  return r;
}

namespace {

// Merge of two canonical term lists with b scaled by sign.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (term_order_before(i->first, j->first)) {
      out.push_back(*i++);
    } else if (term_order_before(j->first, i->first)) {
      out.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
      if (c != 0)
        out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  for (; j != b.end(); ++j)
    out.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
  return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty())
    return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty())
    return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  if (b.terms_.size() == 1 && b.terms_[0].first.is_unit())
    return a * b.terms_[0].second;
  if (a.terms_.size() == 1 && a.terms_[0].first.is_unit())
    return b * a.terms_[0].second;
  std::unordered_map<Monomial, Rational> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      acc[ma * mb] += ca * cb;
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0)
      terms.emplace_back(m, std::move(c));
  std::sort(terms.begin(), terms.end(),
            [](const Polynomial::Term& x, const Polynomial::Term& y) { return term_order_before(x.first, y.first); });
  Polynomial r;
  r.terms_ = std::move(terms);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_)
    t.second *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1L);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u)
      result *= base;
    e >>= 1u;
    if (e > 0)
      base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].first == o.terms_[i].first) || terms_[i].second != o.terms_[i].second)
      return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ------------------------------------------------------- free-function API

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial poly_substitute(const Polynomial& p, const Assignment& assignment) {
  // Powers of substituted generators are reused across terms.
  std::map<std::pair<Generator, unsigned>, Polynomial> powers;
  auto power_of = [&](Generator g, unsigned e, const Polynomial& image) -> const Polynomial& {
    auto key = std::make_pair(g, e);
    auto it = powers.find(key);
    if (it == powers.end())
      it = powers.emplace(key, image.pow(e)).first;
    return it->second;
  };

  Polynomial result;
  std::vector<Polynomial::Term> untouched;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    Polynomial product(c);
    bool substituted = false;
    for (const auto& [g, e] : m.factors()) {
      auto it = assignment.find(g);
      if (it == assignment.end()) {
        kept.emplace_back(g, e);
      } else {
        substituted = true;
        product *= power_of(g, e, it->second);
      }
    }
    if (!substituted) {
      untouched.emplace_back(m, c);
      continue;
    }
    result += product * Polynomial(Monomial::from_factors(std::move(kept)), Rational(1));
  }
  return result + Polynomial::from_terms(std::move(untouched));
}

Rational poly_eval_rational(const Polynomial& p, const Valuation& values) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [g, e] : m.factors()) {
      auto it = values.find(g);
      if (it == values.end())
        throw DomainError("no value bound for generator " + g.name());
      Rational v;
      mpz_pow_ui(v.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(v.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      term *= v;
    }
    total += term;
  }
  return total;
}

// -------------------------------------------------------------- PowerSeries

PowerSeries::PowerSeries(unsigned truncation_order)
    : order_(truncation_order), coeffs_(truncation_order + 1) {}

PowerSeries::PowerSeries(unsigned truncation_order, std::vector<Polynomial> coeffs)
    : order_(truncation_order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order_ + 1);
}

PowerSeries PowerSeries::monomial(unsigned truncation_order, unsigned power, const Polynomial& c) {
  PowerSeries s(truncation_order);
  if (power <= truncation_order)
    s.coeffs_[power] = c;
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  if (o.order_ != order_)
    throw DomainError("power series truncation orders differ");
  for (unsigned j = 0; j <= order_; ++j)
    coeffs_[j] += o.coeffs_[j];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  if (o.order_ != order_)
    throw DomainError("power series truncation orders differ");
  for (unsigned j = 0; j <= order_; ++j)
    coeffs_[j] -= o.coeffs_[j];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_)
    x *= c;
  return *this;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order())
    throw DomainError("power series truncation orders differ: " + std::to_string(a.order()) + " vs " +
                      std::to_string(b.order()));
  const unsigned t = a.order();
  PowerSeries r(t);
  for (unsigned i = 0; i <= t; ++i) {
    if (a[i].is_zero())
      continue;
    for (unsigned j = 0; i + j <= t; ++j)
      if (!b[j].is_zero())
        r[i + j] += a[i] * b[j];
  }
  return r;
}

PowerSeries series_exp(const PowerSeries& a) {
  if (!a[0].is_zero())
    throw DomainError("series_exp needs a zero constant term");
  const unsigned t = a.order();
  PowerSeries result = PowerSeries::monomial(t, 0, Polynomial(1L));
  PowerSeries power = result;
  for (unsigned j = 1; j <= t; ++j) {
    power = series_mul(power, a);
    power *= Rational(1, j);
    result += power;
  }
  return result;
}

PowerSeries series_log(const PowerSeries& a) {
  if (!(a[0] == Polynomial(1L)))
    throw DomainError("series_log needs constant term 1");
  const unsigned t = a.order();
  PowerSeries b = a;
  b[0] = Polynomial();
  PowerSeries result(t);
  PowerSeries power = PowerSeries::monomial(t, 0, Polynomial(1L));
  for (unsigned j = 1; j <= t; ++j) {
    power = series_mul(power, b);
    PowerSeries term = power;
    term *= Rational(j % 2 == 1 ? 1 : -1, j);
    result += term;
  }
  return result;
}

PowerSeries series_inverse_binomial(unsigned truncation_order, const Polynomial& c, unsigned j) {
  PowerSeries s(truncation_order);
  if (j == 0) {
    s[0] = Polynomial(1L);
    return s;
  }
  // (1 - c u)^(-j) = sum_i binom(j+i-1, i) c^i u^i
  Polynomial c_power(1L);
  for (unsigned i = 0; i <= truncation_order; ++i) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), j + i - 1, i);
    s[i] = c_power * Rational(binom);
    c_power *= c;
  }
  return s;
}

} // namespace glw
