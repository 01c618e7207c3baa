#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "glw/engine.hpp"
#include "glw/errors.hpp"
#include "glw/hc.hpp"
#include "glw/oracle.hpp"
#include "test_support.hpp"

using namespace glw;
using glw::testing::P;

namespace {

Polynomial random_casimir_polynomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(0, 2);
  Polynomial out;
  for (int t = 0; t < 3; ++t) {
    Polynomial term(Rational(coeff(rng)));
    term *= P("N").pow(exp(rng));
    for (unsigned k = 1; k <= 3; ++k)
      if (rng() % 2 == 0)
        term *= Polynomial(Generator::casimir(k), static_cast<unsigned>(exp(rng)));
    out += term;
  }
  return out;
}

WeightVector random_weight(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Rational> v;
  for (unsigned i = 0; i < n; ++i)
    v.emplace_back(d(rng));
  return WeightVector(v);
}

} // namespace

TEST(PhiCasimir, ReferenceValues) {
  EXPECT_EQ(phi_casimir(1), P("p1"));
  EXPECT_EQ(phi_casimir(2), P("p2"));
  EXPECT_EQ(phi_casimir(3), P("-1/4 N^2 p1 + N p2/2 + p1/4 + p3 - p1^2/2"));
  EXPECT_EQ(phi_casimir(4), P("-1/4 N^3 p1 + N (-p1^2/2 + p1/4 + p3) - p1 p2 + p2/2 + p4"));
  EXPECT_THROW(phi_casimir(0), DomainError);
}

TEST(PhiCasimir, CachedMatchesUncached) {
  auto fresh = phi_casimir_uncached(9);
  ASSERT_EQ(fresh.size(), 9u);
  for (unsigned k = 1; k <= 9; ++k)
    EXPECT_EQ(phi_casimir(k), fresh[k - 1]);
}

TEST(PhiCasimir, ThreadSafe) {
  std::vector<std::thread> threads;
  std::vector<Polynomial> got(6);
  for (unsigned t = 0; t < 6; ++t)
    threads.emplace_back([&, t] { got[t] = phi_casimir(10 + t); });
  for (auto& th : threads)
    th.join();
  auto fresh = phi_casimir_uncached(15);
  for (unsigned t = 0; t < 6; ++t)
    EXPECT_EQ(got[t], fresh[9 + t]);
}

TEST(PhiCasimir, Triangularity) {
  for (unsigned k = 1; k <= 12; ++k) {
    Polynomial rest = phi_casimir(k) - Polynomial(Generator::power_sum(k));
    EXPECT_TRUE(rest.uses_only({Generator::Kind::N, Generator::Kind::P}));
    for (const auto& [m, c] : rest.terms())
      EXPECT_LT(m.weighted_degree(), k) << "k=" << k << " " << rest.to_string();
  }
}

TEST(ToPBasis, Examples) {
  EXPECT_EQ(to_p_basis(P("C2^2 + C1^2 - N*C2")), P("p2^2 + p1^2 - N*p2"));
  EXPECT_EQ(to_p_basis(Polynomial(1L)), Polynomial(1L));
  Polynomial k4 = to_p_basis(Engine().wgl(make_kn(4)));
  EXPECT_EQ(k4, P("-7 N^3 p2 + N^2 (8 p1^2 + 11 p2^2) + N (-6 p2^3 - 14 p1^2 p2 - p2 + 2 p4)"
                  " + 3 p1^4 + 6 p2^2 p1^2 - 8 p3 p1 + p2^4 + 6 p2^2"));
  EXPECT_THROW(to_p_basis(P("C2 + p1")), DomainError);
}

TEST(ToPBasis, IsAnAlgebraMorphism) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_casimir_polynomial(rng), b = random_casimir_polynomial(rng);
    EXPECT_EQ(to_p_basis(a * b), to_p_basis(a) * to_p_basis(b));
    EXPECT_EQ(to_p_basis(a + b), to_p_basis(a) + to_p_basis(b));
  }
}

TEST(ToPBasis, IntegerImagesOfKn) {
  Engine e;
  for (unsigned n = 2; n <= 6; ++n)
    EXPECT_TRUE(to_p_basis(e.wgl(make_kn(n))).has_integer_coefficients()) << "K" << n;
}

TEST(ShiftedPowerSum, Examples) {
  EXPECT_EQ(shifted_power_sum_value(1, WeightVector({0, 0, 0})), 0);
  EXPECT_EQ(shifted_power_sum_value(2, WeightVector({1, 0})), 2);
  EXPECT_EQ(shifted_power_sum_value(1, WeightVector({Rational(5, 3), -7})), Rational(5, 3) - 7);
  EXPECT_EQ(shifted_power_sum_value(3, WeightVector({2})), 8);
}

TEST(Eigenvalue, Examples) {
  EXPECT_EQ(eigenvalue(P("p1"), WeightVector({1, 0})), 1);
  EXPECT_EQ(eigenvalue(to_p_basis(P("C2")), WeightVector({1, 0})), 2);
  EXPECT_EQ(eigenvalue(Polynomial(1L), WeightVector({4, 2, 1})), 1);
  EXPECT_EQ(eigenvalue(P("N"), WeightVector({4, 2, 1})), 3);
  EXPECT_THROW(eigenvalue(P("C1"), WeightVector({1})), DomainError);
}

TEST(Weight, Parsing) {
  EXPECT_EQ(parse_weight("1,0,0").values(), (std::vector<Rational>{1, 0, 0}));
  EXPECT_EQ(parse_weight("1/2, -1/2").values(), (std::vector<Rational>{Rational(1, 2), Rational(-1, 2)}));
  EXPECT_THROW(WeightVector({}), DomainError);
  EXPECT_THROW(parse_weight("1,,2"), ParseError);
  EXPECT_THROW(parse_weight("a"), ParseError);
}

// The generating-function route to phi agrees with projecting the brute-force
// central element onto U(h) along the triangular decomposition.
TEST(HarishChandra, AgreesWithDirectProjection) {
  std::mt19937 rng(2718);
  for (unsigned n : {2u, 3u})
    for (int trial = 0; trial < 8; ++trial) {
      Polynomial z = random_casimir_polynomial(rng);
      UElement direct = cartan_part(expand_polynomial(z, n));
      Polynomial zp = to_p_basis(z);
      for (int w = 0; w < 3; ++w) {
        WeightVector lambda = random_weight(rng, n);
        EXPECT_EQ(eigenvalue(zp, lambda), evaluate_cartan(direct, lambda)) << z.to_string() << " N=" << n;
      }
    }
}
