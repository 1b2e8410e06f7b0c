#include <gtest/gtest.h>

#include <random>

#include "grm/errors.hpp"
#include "grm/function_space.hpp"
#include "grm/polynomial_text.hpp"

namespace grm {
namespace {

const char* kWitness = "y^2+x*y+y^2*z+x*y*z+y^2*z^2+x^2*z^2";

ReducedPolynomial random_poly(const Field& f, int m, std::mt19937_64& rng) {
  const PointIndexer idx(f->q(), m);
  std::vector<Elem> coeffs(idx.size());
  for (auto& c : coeffs) c = Elem(rng() % f->q());
  return from_dense(f, m, coeffs);
}

TEST(FunctionSpace, Evaluate) {
  const Field f3 = build_field(3, 1);
  const Elem p22[] = {2, 2};
  EXPECT_EQ(evaluate(parse_polynomial("x1*x2", f3, 2), p22), 1);
  const Elem p0[] = {0};
  EXPECT_EQ(evaluate(parse_polynomial("1+2*x1^2", f3, 1), p0), 1);
  const Elem origin[] = {0, 0, 0};
  EXPECT_EQ(evaluate(parse_polynomial(kWitness, f3, 3), origin), 0);
}

TEST(FunctionSpace, InterpolateIndicator) {
  const Field f3 = build_field(3, 1);
  const FunctionTable t{f3, 1, {1, 0, 0}};
  EXPECT_EQ(format_polynomial(interpolate(t)), "1+2*x^2");
  const auto ones = truth_table(ReducedPolynomial::constant(f3, 2, 1));
  EXPECT_EQ(ones.values, std::vector<Elem>(9, 1));
}

TEST(FunctionSpace, Reduction) {
  const Field f3 = build_field(3, 1);
  EXPECT_EQ(format_polynomial(parse_polynomial("x1^3", f3, 1)), "x");
  EXPECT_EQ(format_polynomial(parse_polynomial("x1^4", f3, 1)), "x^2");
  EXPECT_TRUE(parse_polynomial("3*x1*x2", f3, 2).is_zero());
  EXPECT_EQ(format_polynomial(parse_polynomial("x1 + 2*x1 + x2^5", f3, 2)), "y");
  EXPECT_THROW(parse_polynomial("5*x1", build_field(2, 2), 1), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("x4", f3, 3), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("x+", f3, 2), std::invalid_argument);
  EXPECT_THROW(parse_polynomial("x*y", f3, 4), std::invalid_argument);
}

TEST(FunctionSpace, RoundTripAndTextForms) {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {2, 3, 4, 5, 9}) {
    const Field f = field_of_order(q);
    for (int m = 1; m <= 3; ++m) {
      for (int rep = 0; rep < 5; ++rep) {
        const auto p = random_poly(f, m, rng);
        ASSERT_EQ(interpolate(truth_table(p)), p);
        ASSERT_EQ(parse_polynomial(format_polynomial(p), f, m), p);
      }
    }
  }
  const Field f3 = build_field(3, 1);
  EXPECT_EQ(format_polynomial(parse_polynomial("x4*x1^2", f3, 4)), "x1^2*x4");
}

TEST(FunctionSpace, WeightAndDistance) {
  const Field f3 = build_field(3, 1);
  const auto t = truth_table(parse_polynomial("x1*x2", f3, 2));
  EXPECT_EQ(weight(t), 4u);
  EXPECT_EQ(distance(t, t), 0u);
  EXPECT_EQ(weight(truth_table(ReducedPolynomial::constant(f3, 2, 1))), 9u);
  EXPECT_THROW(distance(t, zero_table(f3, 3)), DimensionError);
}

TEST(FunctionSpace, Indicators) {
  const Field f3 = build_field(3, 1);
  const Elem zero[] = {0};
  EXPECT_EQ(format_polynomial(indicator(f3, zero)), "1+2*x^2");
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field f = field_of_order(q);
    const PointIndexer idx(f->q(), 2);
    for (std::uint64_t b = 0; b < idx.size(); ++b) {
      const auto t = truth_table(indicator(f, idx.point(b)));
      EXPECT_EQ(weight(t), 1u);
      EXPECT_EQ(t.values[b], 1);
    }
  }
}

TEST(FunctionSpace, AffineAction) {
  const Field f3 = build_field(3, 1);
  const auto x2 = parse_polynomial("x^2", f3, 1);
  EXPECT_EQ(affine_action(AffineTransform::identity(1), x2), x2);
  EXPECT_EQ(format_polynomial(affine_action(AffineTransform::translation({1}), x2)), "1+2*x+x^2");

  Matrix singular(2, 2);
  singular(0, 0) = 1;
  EXPECT_THROW(affine_action(AffineTransform::linear(singular), zero_table(f3, 2)), std::invalid_argument);
}

TEST(FunctionSpace, ActionComposesAndMatchesTables) {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {3, 4, 5}) {
    const Field f = field_of_order(q);
    const int m = 2;
    auto random_sigma = [&] {
      while (true) {
        AffineTransform s{Matrix(2, 2), Vec(2)};
        for (std::size_t i = 0; i < 2; ++i) {
          for (std::size_t j = 0; j < 2; ++j) s.a(i, j) = Elem(rng() % q);
          s.v[i] = Elem(rng() % q);
        }
        if (is_invertible(*f, s.a)) return s;
      }
    };
    for (int rep = 0; rep < 10; ++rep) {
      const auto p = random_poly(f, m, rng);
      const auto s = random_sigma();
      const auto t = random_sigma();
      const auto table = truth_table(p);
      EXPECT_EQ(truth_table(affine_action(s, p)), affine_action(s, table));
      EXPECT_EQ(affine_action(compose(*f, s, t), table), affine_action(s, affine_action(t, table)));
      // Degree is invariant under the affine group.
      EXPECT_EQ(affine_action(s, p).degree(), p.degree());
    }
  }
}

TEST(FunctionSpace, ListingOrder) {
  const auto monos = monomials(3, 3, 2, 2);
  std::vector<std::string> text;
  for (const auto& e : monos) {
    text.push_back(format_polynomial(ReducedPolynomial::monomial(build_field(3, 1), 3, e)));
  }
  EXPECT_EQ(text, (std::vector<std::string>{"z^2", "y*z", "y^2", "x*z", "x*y", "x^2"}));
  EXPECT_EQ(monomials(3, 3, 2, 4).size(), 19u);
  EXPECT_EQ(monomials(3, 3, 2, 6).size(), 23u);
}

TEST(FunctionSpace, SizeGuard) {
  EXPECT_THROW(checked_power(3, 40, 1'000'000), SizeGuardError);
  EXPECT_EQ(checked_power(3, 5), 243u);
}

}  // namespace
}  // namespace grm
