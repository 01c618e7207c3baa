#include "glw/oracle.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <unordered_map>

#include <omp.h>

#include "glw/errors.hpp"

namespace glw {

namespace {

constexpr unsigned max_supported_rank = 63;

void check_rank(unsigned n) {
  if (n < 1 || n > max_supported_rank)
    throw DomainError("rank N must be in 1.." + std::to_string(max_supported_rank) + ", got " + std::to_string(n));
}

using Accumulator = std::map<std::u16string, Rational>;

void accumulate(Accumulator& acc, const std::u16string& key, const Rational& c) {
  if (c == 0)
    return;
  auto [it, inserted] = acc.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      acc.erase(it);
  }
}

UElement from_accumulator(unsigned n, const Accumulator& acc) {
  UElement u(n);
  for (const auto& [w, c] : acc)
    u.add(PBWMonomial(w), c);
  return u;
}

// [x, y] for x = E_ab, y = E_cd: delta_bc E_ad - delta_da E_cb.
std::vector<std::pair<Rational, char16_t>> bracket(char16_t x, char16_t y) {
  const MatrixUnit ux = MatrixUnit::from_code(x), uy = MatrixUnit::from_code(y);
  std::vector<std::pair<Rational, char16_t>> out;
  if (ux.col() == uy.row())
    out.emplace_back(1, MatrixUnit(ux.row(), uy.col()).code());
  if (uy.col() == ux.row())
    out.emplace_back(-1, MatrixUnit(uy.row(), ux.col()).code());
  if (out.size() == 2 && out[0].second == out[1].second)
    out.clear();
  return out;
}

std::u16string encode(const std::vector<MatrixUnit>& word) {
  std::u16string s;
  s.reserve(word.size());
  for (const auto& u : word)
    s.push_back(u.code());
  return s;
}

} // namespace

// ------------------------------------------------------------ MatrixUnit

MatrixUnit::MatrixUnit(unsigned i, unsigned j) {
  if (i < 1 || j < 1 || i > max_supported_rank || j > max_supported_rank)
    throw DomainError("matrix unit index out of range: E(" + std::to_string(i) + "," + std::to_string(j) + ")");
  const unsigned kind = i > j ? 0u : (i == j ? 1u : 2u);
  code_ = static_cast<char16_t>(kind << 12 | i << 6 | j);
}

MatrixUnit MatrixUnit::from_code(char16_t code) {
  MatrixUnit u;
  u.code_ = code;
  return u;
}

std::string MatrixUnit::to_string() const {
  if (row() < 10 && col() < 10)
    return "E" + std::to_string(row()) + std::to_string(col());
  return "E(" + std::to_string(row()) + "," + std::to_string(col()) + ")";
}

// ------------------------------------------------------------ PBWMonomial

PBWMonomial::PBWMonomial(std::u16string letters) : letters_(std::move(letters)) {
  if (!std::is_sorted(letters_.begin(), letters_.end()))
    throw DomainError("matrix units are not in PBW order");
}

PBWMonomial PBWMonomial::from_units(const std::vector<MatrixUnit>& units) { return PBWMonomial(encode(units)); }

std::vector<std::pair<MatrixUnit, unsigned>> PBWMonomial::factors() const {
  std::vector<std::pair<MatrixUnit, unsigned>> out;
  for (char16_t c : letters_) {
    if (!out.empty() && out.back().first.code() == c)
      ++out.back().second;
    else
      out.emplace_back(MatrixUnit::from_code(c), 1);
  }
  return out;
}

bool PBWMonomial::only_cartan() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](char16_t c) { return MatrixUnit::from_code(c).kind() == MatrixUnit::Kind::Cartan; });
}

std::string PBWMonomial::to_string() const {
  if (letters_.empty())
    return "1";
  std::string s;
  for (const auto& [u, e] : factors()) {
    if (!s.empty())
      s += "*";
    s += u.to_string();
    if (e > 1)
      s += "^" + std::to_string(e);
  }
  return s;
}

// ------------------------------------------------------------ UElement

UElement::UElement(unsigned n) : n_(n) { check_rank(n); }

UElement UElement::unit(unsigned n, const Rational& c) {
  UElement u(n);
  u.add(PBWMonomial(), c);
  return u;
}

UElement UElement::generator(unsigned n, unsigned i, unsigned j) {
  UElement u(n);
  u.add(PBWMonomial::from_units({MatrixUnit(i, j)}), 1);
  return u;
}

void UElement::add(const PBWMonomial& m, const Rational& c) {
  if (c == 0)
    return;
  for (char16_t code : m.letters()) {
    auto u = MatrixUnit::from_code(code);
    if (u.row() > n_ || u.col() > n_)
      throw DomainError(u.to_string() + " is outside gl_" + std::to_string(n_));
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  if (o.n_ != n_)
    throw DomainError("rank mismatch in U(gl_N) addition");
  for (const auto& [m, c] : o.terms_)
    add(m, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  if (o.n_ != n_)
    throw DomainError("rank mismatch in U(gl_N) subtraction");
  for (const auto& [m, c] : o.terms_)
    add(m, -c);
  return *this;
}

UElement& UElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_)
    v *= c;
  return *this;
}

std::string UElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = m.letters().empty();
    if (mag != 1 || unit) {
      os << mag;
      if (!unit)
        os << "*";
    }
    if (!unit)
      os << m.to_string();
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------ PBWAlgebra

PBWAlgebra::PBWAlgebra(unsigned n) : n_(n) { check_rank(n); }

const PBWAlgebra::Terms& PBWAlgebra::insert(char16_t x, const std::u16string& w) {
  std::u16string key;
  key.reserve(w.size() + 1);
  key.push_back(x);
  key += w;
  if (auto it = memo_.find(key); it != memo_.end())
    return it->second;

  Terms result;
  if (w.empty() || x <= w.front()) {
    result.emplace_back(key, 1);
  } else {
    // x w0 R = w0 (x R) + [x, w0] R
    const char16_t w0 = w.front();
    const std::u16string rest = w.substr(1);
    Accumulator acc;
    const Terms inner = insert(x, rest);
    for (const auto& [v, c] : inner)
      for (const auto& [v2, c2] : insert(w0, v))
        accumulate(acc, v2, c * c2);
    for (const auto& [coeff, z] : bracket(x, w0))
      for (const auto& [v, c] : insert(z, rest))
        accumulate(acc, v, coeff * c);
    result.assign(acc.begin(), acc.end());
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

void PBWAlgebra::multiply_word_into(const std::u16string& word, const Terms& right, const Rational& scale,
                                    Accumulator& out) {
  Terms current = right;
  for (auto letter = word.rbegin(); letter != word.rend(); ++letter) {
    Accumulator next;
    for (const auto& [v, c] : current)
      for (const auto& [v2, c2] : insert(*letter, v))
        accumulate(next, v2, c * c2);
    current.assign(next.begin(), next.end());
  }
  for (const auto& [v, c] : current)
    accumulate(out, v, scale * c);
}

UElement PBWAlgebra::normalize(const std::vector<MatrixUnit>& word) {
  for (const auto& u : word)
    if (u.row() > n_ || u.col() > n_)
      throw DomainError(u.to_string() + " is outside gl_" + std::to_string(n_));
  Accumulator acc;
  multiply_word_into(encode(word), Terms{{std::u16string(), Rational(1)}}, 1, acc);
  return from_accumulator(n_, acc);
}

UElement PBWAlgebra::multiply(const UElement& a, const UElement& b) {
  if (a.rank() != n_ || b.rank() != n_)
    throw DomainError("rank mismatch in U(gl_N) product");
  Terms right;
  for (const auto& [m, c] : b.terms())
    right.emplace_back(m.letters(), c);
  Accumulator acc;
  for (const auto& [m, c] : a.terms())
    multiply_word_into(m.letters(), right, c, acc);
  return from_accumulator(n_, acc);
}

// ------------------------------------------------------------ reference rewriting

UElement normalize_by_rewriting(const std::vector<MatrixUnit>& word, unsigned n, ReductionOrder order) {
  check_rank(n);
  Accumulator pending;
  accumulate(pending, encode(word), 1);
  Accumulator done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    std::u16string w = node.key();
    Rational c = node.mapped();
    std::size_t pos = std::u16string::npos;
    if (order == ReductionOrder::LeftmostFirst) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) {
          pos = i;
          break;
        }
    } else {
      for (std::size_t i = w.size(); i-- > 1;)
        if (w[i - 1] > w[i]) {
          pos = i - 1;
          break;
        }
    }
    if (pos == std::u16string::npos) {
      accumulate(done, w, c);
      continue;
    }
    std::u16string swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    accumulate(pending, swapped, c);
    for (const auto& [coeff, z] : bracket(w[pos], w[pos + 1])) {
      std::u16string shorter = w.substr(0, pos);
      shorter.push_back(z);
      shorter += w.substr(pos + 2);
      accumulate(pending, shorter, c * coeff);
    }
  }
  return from_accumulator(n, done);
}

// ------------------------------------------------------------ free functions

namespace {

PBWAlgebra& thread_algebra(unsigned n) {
  thread_local std::unordered_map<unsigned, std::unique_ptr<PBWAlgebra>> algebras;
  auto& slot = algebras[n];
  if (!slot || slot->memo_size() > 2'000'000)
    slot = std::make_unique<PBWAlgebra>(n);
  return *slot;
}

void check_limits(const Permutation& p, unsigned n, const OracleLimits& limits) {
  check_rank(n);
  if (n > limits.max_rank || p.size() > limits.max_length)
    throw ResourceLimitError("direct evaluation with N=" + std::to_string(n) + ", m=" + std::to_string(p.size()) +
                             " exceeds the limits N<=" + std::to_string(limits.max_rank) +
                             ", m<=" + std::to_string(limits.max_length));
}

std::uint64_t power(unsigned base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i)
    r *= base;
  return r;
}

// Word E_{i_1 i_sigma(1)} ... for the index tuple encoded in base n by t.
std::u16string direct_word(const Permutation& p, unsigned n, std::uint64_t t, std::vector<unsigned>& idx) {
  const std::size_t m = p.size();
  for (std::size_t k = 0; k < m; ++k) {
    idx[k] = static_cast<unsigned>(t % n) + 1;
    t /= n;
  }
  std::u16string w;
  w.reserve(m);
  for (std::size_t k = 1; k <= m; ++k)
    w.push_back(MatrixUnit(idx[k - 1], idx[p(k) - 1]).code());
  return w;
}

} // namespace

UElement u_mul(const UElement& a, const UElement& b) {
  if (a.rank() != b.rank())
    throw DomainError("rank mismatch in U(gl_N) product: " + std::to_string(a.rank()) + " vs " +
                      std::to_string(b.rank()));
  return thread_algebra(a.rank()).multiply(a, b);
}

UElement w_direct_serial(const Permutation& p, unsigned n, const OracleLimits& limits) {
  check_limits(p, n, limits);
  PBWAlgebra algebra(n);
  const PBWAlgebra::Terms one{{std::u16string(), Rational(1)}};
  const std::uint64_t total = power(n, p.size());
  std::vector<unsigned> idx(p.size());
  Accumulator acc;
  for (std::uint64_t t = 0; t < total; ++t)
    algebra.multiply_word_into(direct_word(p, n, t, idx), one, 1, acc);
  return from_accumulator(n, acc);
}

UElement w_direct(const Permutation& p, unsigned n, const OracleLimits& limits) {
  check_limits(p, n, limits);
  const PBWAlgebra::Terms one{{std::u16string(), Rational(1)}};
  const auto total = static_cast<std::int64_t>(power(n, p.size()));
  Accumulator acc;
#pragma omp parallel
  {
    PBWAlgebra algebra(n);
    std::vector<unsigned> idx(p.size());
    Accumulator local;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t t = 0; t < total; ++t)
      algebra.multiply_word_into(direct_word(p, n, static_cast<std::uint64_t>(t), idx), one, 1, local);
#pragma omp critical
    for (const auto& [w, c] : local)
      accumulate(acc, w, c);
  }
  return from_accumulator(n, acc);
}

UElement casimir_element(unsigned k, unsigned n) {
  check_rank(n);
  if (k == 0)
    throw DomainError("casimir_element needs k >= 1");
  PBWAlgebra& algebra = thread_algebra(n);
  const PBWAlgebra::Terms one{{std::u16string(), Rational(1)}};
  const std::uint64_t total = power(n, k);
  std::vector<unsigned> idx(k);
  Accumulator acc;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (unsigned a = 0; a < k; ++a) {
      idx[a] = static_cast<unsigned>(rest % n) + 1;
      rest /= n;
    }
    std::u16string w;
    for (unsigned a = 0; a < k; ++a)
      w.push_back(MatrixUnit(idx[a], idx[(a + 1) % k]).code());
    algebra.multiply_word_into(w, one, 1, acc);
  }
  return from_accumulator(n, acc);
}

UElement expand_polynomial(const Polynomial& p, unsigned n) {
  check_rank(n);
  if (!p.uses_only({Generator::Kind::N, Generator::Kind::C}))
    throw DomainError("expand_polynomial expects a polynomial in N and C_k only: " + p.to_string());
  std::map<unsigned, UElement> casimirs;
  UElement total(n);
  for (const auto& [mono, coeff] : p.terms()) {
    Rational scalar = coeff;
    UElement term = UElement::unit(n);
    for (const auto& [g, e] : mono.factors()) {
      if (g.kind() == Generator::Kind::N) {
        for (unsigned i = 0; i < e; ++i)
          scalar *= n;
        continue;
      }
      auto it = casimirs.find(g.index());
      if (it == casimirs.end())
        it = casimirs.emplace(g.index(), casimir_element(g.index(), n)).first;
      for (unsigned i = 0; i < e; ++i)
        term = u_mul(term, it->second);
    }
    term *= scalar;
    total += term;
  }
  return total;
}

bool is_central(const UElement& a) {
  const unsigned n = a.rank();
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      UElement e = UElement::generator(n, i, j);
      if (!(u_mul(e, a) == u_mul(a, e)))
        return false;
    }
  return true;
}

UElement cartan_part(const UElement& a) {
  UElement out(a.rank());
  for (const auto& [m, c] : a.terms())
    if (m.only_cartan())
      out.add(m, c);
  return out;
}

Rational evaluate_cartan(const UElement& cartan, const WeightVector& w) {
  if (w.rank() != cartan.rank())
    throw DomainError("weight of length " + std::to_string(w.rank()) + " for gl_" + std::to_string(cartan.rank()));
  Rational total = 0;
  for (const auto& [m, c] : cartan.terms()) {
    Rational v = c;
    for (char16_t code : m.letters()) {
      auto u = MatrixUnit::from_code(code);
      if (u.kind() != MatrixUnit::Kind::Cartan)
        throw DomainError("evaluate_cartan: non-Cartan unit " + u.to_string());
      v *= w[u.row() - 1];
    }
    total += v;
  }
  return total;
}

} // namespace glw
