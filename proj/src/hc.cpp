#include "glw/hc.hpp"

#include <deque>
#include <shared_mutex>

#include "glw/errors.hpp"

namespace glw {

WeightVector::WeightVector(std::vector<Rational> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.empty())
    throw DomainError("weight vector needs at least one entry");
}

WeightVector parse_weight(std::string_view text) {
  std::vector<Rational> values;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    std::string item(rest.substr(0, comma));
    std::erase_if(item, [](char c) { return c == ' ' || c == '\t'; });
    values.push_back(parse_rational(item));
    if (comma == std::string_view::npos)
      break;
    rest = rest.substr(comma + 1);
  }
  return WeightVector(std::move(values));
}

std::vector<Polynomial> phi_casimir_uncached(unsigned k_max) {
  const unsigned t = k_max + 1;
  const Polynomial n(Generator::n());
  const Polynomial alpha = (n - Polynomial(1L)) * Rational(1, 2); // (N-1)/2
  const Polynomial beta = (n + Polynomial(1L)) * Rational(1, 2);  // (N+1)/2

  PowerSeries exponent(t);
  for (unsigned j = 1; j < t; ++j) {
    PowerSeries diff = series_inverse_binomial(t, alpha, j) - series_inverse_binomial(t, beta, j);
    PowerSeries shifted = series_mul(diff, PowerSeries::monomial(t, j, Polynomial(Generator::power_sum(j))));
    shifted *= Rational(1, j);
    exponent += shifted;
  }
  PowerSeries one_minus_nu(t, {Polynomial(1L), -n});
  PowerSeries rhs = series_mul(one_minus_nu, series_exp(exponent));

  std::vector<Polynomial> out;
  out.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k)
    out.push_back(-rhs[k + 1]);
  return out;
}

namespace {

struct PhiTable {
  std::shared_mutex mutex;
  std::deque<Polynomial> values; // values[k-1] = phi(C_k); deque keeps references stable
};

PhiTable& phi_table() {
  static PhiTable table;
  return table;
}

} // namespace

const Polynomial& phi_casimir(unsigned k) {
  if (k < 1)
    throw DomainError("phi_casimir needs k >= 1");
  PhiTable& table = phi_table();
  {
    std::shared_lock lock(table.mutex);
    if (k <= table.values.size())
      return table.values[k - 1];
  }
  std::unique_lock lock(table.mutex);
  if (k > table.values.size()) {
    unsigned target = std::max<unsigned>(k, static_cast<unsigned>(2 * table.values.size()));
    auto fresh = phi_casimir_uncached(target);
    for (std::size_t i = table.values.size(); i < fresh.size(); ++i)
      table.values.push_back(std::move(fresh[i]));
  }
  return table.values[k - 1];
}

Polynomial to_p_basis(const Polynomial& p) {
  if (!p.uses_only({Generator::Kind::N, Generator::Kind::C}))
    throw DomainError("to_p_basis expects a polynomial in N and C_k only: " + p.to_string());
  Assignment assignment;
  for (unsigned k = 1, top = p.max_index(Generator::Kind::C); k <= top; ++k)
    assignment.emplace(Generator::casimir(k), phi_casimir(k));
  return poly_substitute(p, assignment);
}

Rational shifted_power_sum_value(unsigned k, const WeightVector& w) {
  const std::size_t n = w.rank();
  Rational total = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    Rational shift = Rational(static_cast<long>(n + 1)) / 2 - static_cast<long>(i);
    Rational a = w[i - 1] + shift;
    Rational pa = 1;
    Rational ps = 1;
    for (unsigned e = 0; e < k; ++e) {
      pa *= a;
      ps *= shift;
    }
    total += pa - ps;
  }
  return total;
}

Rational eigenvalue(const Polynomial& p, const WeightVector& w) {
  if (!p.uses_only({Generator::Kind::N, Generator::Kind::P}))
    throw DomainError("eigenvalue expects a polynomial in N and p_k only: " + p.to_string());
  Valuation values;
  values.emplace(Generator::n(), Rational(static_cast<long>(w.rank())));
  for (unsigned k = 1, top = p.max_index(Generator::Kind::P); k <= top; ++k)
    values.emplace(Generator::power_sum(k), shifted_power_sum_value(k, w));
  return poly_eval_rational(p, values);
}

} // namespace glw
