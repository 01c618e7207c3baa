#pragma once

// Harish-Chandra images of Casimir elements in shifted power sums p_k, and
// evaluation of shifted symmetric data at concrete weights.

#include <map>
#include <mutex>
#include <string_view>
#include <vector>

#include "glw/polyring.hpp"

namespace glw {

/// A weight (lambda_1, ..., lambda_N); E_ii acts by lambda_i.
class WeightVector {
public:
  /// Throws DomainError when empty.
  explicit WeightVector(std::vector<Rational> lambda);
  std::size_t rank() const { return lambda_.size(); }
  const Rational& operator[](std::size_t i) const { return lambda_[i]; }
  const std::vector<Rational>& values() const { return lambda_; }

private:
  std::vector<Rational> lambda_;
};

/// "1,0,0" or "1/2,-1/2".
WeightVector parse_weight(std::string_view text);

/// phi(C_k) in Q[N, p1..pk], read off the generating function
///   1 - N u - sum_k phi(C_k) u^{k+1}
///     = (1 - N u) exp( sum_k ((1 - (N-1)u/2)^{-k} - (1 - (N+1)u/2)^{-k}) u^k p_k / k ).
/// Results are cached; safe to call from several threads.
const Polynomial& phi_casimir(unsigned k);

/// Expands the generating function at truncation order k_max + 1 and
/// returns phi(C_1) .. phi(C_k_max) without touching the cache.
std::vector<Polynomial> phi_casimir_uncached(unsigned k_max);

/// Substitutes C_k -> phi(C_k). Throws DomainError if p has P or K generators.
Polynomial to_p_basis(const Polynomial& p);

/// sum_i ((lambda_i + (N+1)/2 - i)^k - ((N+1)/2 - i)^k).
Rational shifted_power_sum_value(unsigned k, const WeightVector& w);

/// Value of a polynomial in N and p_k at a weight: N = rank, p_k as above.
/// Throws DomainError if p has C or K generators.
Rational eigenvalue(const Polynomial& p, const WeightVector& w);

} // namespace glw
