#include <gtest/gtest.h>

#include <random>

#include "sandgraph/error.hpp"
#include "sandgraph/exactalg.hpp"
#include "sandgraph/multipoly.hpp"

using namespace sandgraph;

namespace {

VariablesPtr abc() { return make_variables({"a", "b", "c"}); }

SparsePoly var(const VariablesPtr& v, const char* name) { return SparsePoly::variable(v, name); }

SparsePoly random_poly(std::mt19937_64& rng, const VariablesPtr& vars, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::uint32_t> exp(0, 2);
  SparsePoly p(vars);
  std::vector<std::uint32_t> e(vars->size());
  for (int t = 0; t < terms; ++t) {
    for (auto& x : e) x = exp(rng);
    p.add_term(e, coef(rng));
  }
  return p;
}

}  // namespace

TEST(SparsePoly, ArithmeticAndCanonicalText) {
  const auto v = abc();
  const SparsePoly a = var(v, "a");
  const SparsePoly b = var(v, "b");
  EXPECT_EQ((a + b).pow(2).to_string(), "x_a^2 + 2*x_a*x_b + x_b^2");
  EXPECT_EQ((a - b).to_string(), "x_a - x_b");
  EXPECT_EQ((b - a).to_string(), "-x_a + x_b");
  EXPECT_EQ((a * b - a * b).to_string(), "0");
  EXPECT_EQ((SparsePoly::constant(v, 3) - a * Integer(2)).to_string(), "-2*x_a + 3");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a * a * b).total_degree(), 3u);
}

TEST(SparsePoly, TextIndependentOfVariableOrder) {
  const auto v1 = make_variables({"z", "y"});
  const auto v2 = make_variables({"y", "z"});
  const SparsePoly p1 = var(v1, "z") * var(v1, "z") + var(v1, "y");
  const SparsePoly p2 = var(v2, "y") + var(v2, "z").pow(2);
  EXPECT_EQ(p1.to_string(), p2.to_string());
  EXPECT_EQ(p1, p2);
}

TEST(SparsePoly, MixedVariableSetsAreUnioned) {
  const SparsePoly p = SparsePoly::variable(make_variables({"p"}), "p");
  const SparsePoly q = SparsePoly::variable(make_variables({"q"}), "q");
  EXPECT_EQ((p * q).to_string(), "x_p*x_q");
  EXPECT_EQ((p + q).variables()->size(), 2u);
  EXPECT_FALSE(p == q);
}

TEST(SparsePoly, ParseRoundTrip) {
  std::mt19937_64 rng(17);
  const auto v = abc();
  for (int trial = 0; trial < 100; ++trial) {
    const SparsePoly p = random_poly(rng, v, 6);
    const SparsePoly back = parse_poly(p.to_string());
    EXPECT_EQ(back, p) << p.to_string();
    EXPECT_EQ(back.to_string(), p.to_string());
  }
  EXPECT_EQ(parse_poly("0").to_string(), "0");
  EXPECT_EQ(parse_poly("-x_a^3*x_b + 12").to_string(), "-x_a^3*x_b + 12");
  EXPECT_THROW(parse_poly("x_a + * x_b"), Error);
  EXPECT_THROW(parse_poly(""), Error);
}

TEST(SparsePoly, EvaluateSpecializeCoefficient) {
  const auto v = abc();
  const SparsePoly p = parse_poly("x_a^2*x_b + 3*x_b*x_c - 2", v);
  EXPECT_EQ(p.evaluate({{"a", 2}, {"b", 3}, {"c", 5}}), 12 + 45 - 2);
  EXPECT_THROW(p.evaluate({{"a", 1}}), Error);
  EXPECT_EQ(p.specialize({{"b", 1}}).to_string(), "x_a^2 + 3*x_c - 2");
  EXPECT_EQ(p.coefficient_of("a", 2).to_string(), "x_b");
  EXPECT_EQ(p.coefficient_of("a", 0).to_string(), "3*x_b*x_c - 2");
  EXPECT_EQ(p.coefficient_of("a", 1).to_string(), "0");
  EXPECT_EQ(p.evaluate_all(1), 2);
}

TEST(SparsePoly, ExactDivision) {
  std::mt19937_64 rng(23);
  const auto v = abc();
  for (int trial = 0; trial < 50; ++trial) {
    const SparsePoly a = random_poly(rng, v, 4);
    const SparsePoly b = random_poly(rng, v, 3);
    if (b.is_zero()) continue;
    EXPECT_EQ((a * b).exact_divide(b), a);
  }
  EXPECT_THROW((var(v, "a") + SparsePoly::constant(v, 1)).exact_divide(var(v, "b")), Error);
}

TEST(PolyDeterminant, EvaluationCommutesWithDeterminant) {
  std::mt19937_64 rng(31);
  const auto v = abc();
  std::uniform_int_distribution<int> value(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    PolyMatrix m(4, v);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = random_poly(rng, v, 2);
    }
    const std::map<std::string, Integer> sigma{{"a", value(rng)}, {"b", value(rng)}, {"c", value(rng)}};
    IntMatrix numeric(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) numeric(r, c) = m(r, c).evaluate(sigma);
    }
    const SparsePoly det = poly_determinant(m);
    EXPECT_EQ(det.evaluate(sigma), determinant(numeric));
    EXPECT_EQ(poly_determinant_bareiss(m), det);
  }
}

TEST(PolyDeterminant, BareissMatchesCofactorAboveFour) {
  std::mt19937_64 rng(37);
  const auto v = make_variables({"a", "b"});
  for (int trial = 0; trial < 6; ++trial) {
    PolyMatrix m(6, v);
    for (std::size_t r = 0; r < 6; ++r) {
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = random_poly(rng, v, 2);
    }
    EXPECT_EQ(poly_determinant(m), poly_determinant_cofactor(m));
  }
}

TEST(PolyDeterminant, RowSwapAndMultilinearity) {
  std::mt19937_64 rng(41);
  const auto v = abc();
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m(5, v);
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) m(r, c) = random_poly(rng, v, 2);
    }
    PolyMatrix swapped = m;
    for (std::size_t c = 0; c < 5; ++c) std::swap(swapped(0, c), swapped(3, c));
    EXPECT_EQ(poly_determinant(swapped), -poly_determinant(m));

    // det is linear in row 2: det(r2 = u + w) = det(r2 = u) + det(r2 = w)
    PolyMatrix mu = m;
    PolyMatrix mw = m;
    PolyMatrix sum = m;
    for (std::size_t c = 0; c < 5; ++c) {
      mw(2, c) = random_poly(rng, v, 2);
      sum(2, c) = mu(2, c) + mw(2, c);
    }
    EXPECT_EQ(poly_determinant(sum), poly_determinant(mu) + poly_determinant(mw));
  }
}

TEST(PolyDeterminant, EmptyAndSymbolic) {
  const auto v = make_variables({"a", "b"});
  EXPECT_EQ(poly_determinant(PolyMatrix(0, v)).to_string(), "1");
  PolyMatrix m(2, v);
  m(0, 0) = var(v, "a");
  m(0, 1) = var(v, "b");
  m(1, 0) = var(v, "b");
  m(1, 1) = var(v, "a");
  EXPECT_EQ(poly_determinant(m).to_string(), "x_a^2 - x_b^2");
}
