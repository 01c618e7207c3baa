#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string_view>
#include <vector>

#include "glw/diagrams.hpp"
#include "glw/polyring.hpp"

namespace glw::testing {

inline Polynomial P(std::string_view text) { return parse_polynomial(text); }

inline std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<unsigned> images(m);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline Permutation random_permutation(std::mt19937& rng, std::size_t m) {
  std::vector<unsigned> images(m);
  std::iota(images.begin(), images.end(), 1u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

/// Small random polynomial over N, C1..C3, p1..p2 with coefficients in [-3, 3]/{1,2}.
inline Polynomial random_polynomial(std::mt19937& rng, unsigned max_terms = 4) {
  const std::vector<Generator> gens{Generator::n(), Generator::casimir(1), Generator::casimir(2),
                                    Generator::casimir(3), Generator::power_sum(1), Generator::power_sum(2)};
  std::uniform_int_distribution<int> coeff(-3, 3), den(1, 2), exp(0, 2), terms(0, static_cast<int>(max_terms));
  std::vector<Polynomial::Term> out;
  for (int t = terms(rng); t > 0; --t) {
    std::vector<Monomial::Factor> factors;
    for (const auto& g : gens)
      if (int e = exp(rng); e > 0 && rng() % 3 == 0)
        factors.emplace_back(g, static_cast<unsigned>(e));
    Rational c(coeff(rng), den(rng));
    c.canonicalize();
    out.emplace_back(Monomial::from_factors(std::move(factors)), c);
  }
  return Polynomial::from_terms(std::move(out));
}

} // namespace glw::testing
