#include "glw/poly_json.hpp"

#include <set>

#include "glw/errors.hpp"

namespace glw {

nlohmann::ordered_json polynomial_to_json(const Polynomial& p) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    for (const auto& [g, e] : m.factors())
      mono[g.name()] = e;
    terms.push_back({{"coeff", rational_to_string(c)}, {"mono", std::move(mono)}});
  }
  return {{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseError("polynomial JSON needs a \"terms\" array");
  std::vector<Polynomial::Term> terms;
  std::set<std::vector<std::pair<std::uint32_t, unsigned>>> seen;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string() || !t.contains("mono") ||
        !t["mono"].is_object())
      throw ParseError("polynomial term needs \"coeff\" string and \"mono\" object");
    Rational c = parse_rational(t["coeff"].get<std::string>());
    if (c == 0)
      throw ParseError("zero coefficient stored in polynomial JSON");
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, e] : t["mono"].items()) {
      if (!e.is_number_unsigned() || e.get<unsigned>() == 0)
        throw ParseError("exponent of " + name + " must be a positive integer");
      factors.emplace_back(Generator::from_name(name), e.get<unsigned>());
    }
    Monomial m = Monomial::from_factors(factors);
    std::vector<std::pair<std::uint32_t, unsigned>> key;
    for (const auto& [g, e] : m.factors())
      key.emplace_back(g.code(), e);
    if (!seen.insert(key).second)
      throw ParseError("duplicate monomial in polynomial JSON");
    terms.emplace_back(std::move(m), std::move(c));
  }
  return Polynomial::from_terms(std::move(terms));
}

} // namespace glw
