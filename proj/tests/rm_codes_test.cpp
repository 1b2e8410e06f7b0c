#include <gtest/gtest.h>

#include <random>
#include <set>

#include "grm/distance_kernel.hpp"
#include "grm/errors.hpp"
#include "grm/polynomial_text.hpp"
#include "grm/rm_codes.hpp"

namespace grm {
namespace {

const char* kWitness = "y^2+x*y+y^2*z+x*y*z+y^2*z^2+x^2*z^2";

FunctionTable table(const char* text, std::uint64_t q, int m) {
  return truth_table(parse_polynomial(text, field_of_order(q), m));
}

CodeSpec code(std::uint64_t q, int r, int m) { return {field_of_order(q), r, m}; }

TEST(RmCodes, CodewordCounts) {
  EXPECT_EQ(codewords(code(3, 1, 2)).size(), 27u);
  EXPECT_EQ(codewords(code(2, 2, 3)).size(), 128u);
  EXPECT_EQ(codewords(code(5, 0, 2)).size(), 5u);
  EXPECT_THROW(codewords(code(3, 6, 3)), SizeGuardError);
  EXPECT_THROW(code(3, 7, 3).validate(), std::invalid_argument);
}

TEST(RmCodes, CodewordsAreDistinctAndLowDegree) {
  const auto words = codewords(code(3, 2, 2));
  const std::set<std::vector<Elem>> unique(words.begin(), words.end());
  EXPECT_EQ(unique.size(), words.size());
  for (const auto& w : words) {
    const auto d = interpolate(FunctionTable{field_of_order(3), 2, w}).degree();
    EXPECT_TRUE(!d || *d <= 2);
  }
}

TEST(RmCodes, DistanceToFirstOrder) {
  EXPECT_EQ(distance_to_first_order(table(kWitness, 3, 3)), 16u);
  EXPECT_EQ(distance_to_first_order(table("2*x+y+1", 3, 3)), 0u);
  EXPECT_EQ(distance_to_first_order(table("x1*x2", 3, 2)), 4u);
}

TEST(RmCodes, KernelAgreesWithOracle) {
  std::mt19937_64 rng(1);
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const Field f = field_of_order(q);
    for (int m = 1; m <= 3; ++m) {
      const DistanceKernel kernel(f, m);
      for (int rep = 0; rep < 10; ++rep) {
        FunctionTable t = zero_table(f, m);
        for (auto& v : t.values) v = Elem(rng() % q);
        const auto d = distance_to_first_order_oracle(t);
        ASSERT_EQ(kernel.distance(t.values), d);
        EXPECT_TRUE(kernel.at_least(t.values, d));
        EXPECT_FALSE(kernel.at_least(t.values, d + 1));
        const auto near = kernel.nearest(t.values);
        EXPECT_EQ(near.distance, d);
      }
    }
  }
}

TEST(RmCodes, DistanceIsAffineAndScalarInvariant) {
  std::mt19937_64 rng(2);
  const Field f = field_of_order(3);
  for (int rep = 0; rep < 20; ++rep) {
    FunctionTable t = zero_table(f, 3);
    for (auto& v : t.values) v = Elem(rng() % 3);
    AffineTransform s{Matrix(3, 3), Vec(3)};
    do {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) s.a(i, j) = Elem(rng() % 3);
        s.v[i] = Elem(rng() % 3);
      }
    } while (!is_invertible(*f, s.a));
    const auto d = distance_to_first_order(t);
    EXPECT_EQ(distance_to_first_order(affine_action(s, t)), d);
    EXPECT_EQ(distance_to_first_order(scale(t, 2)), d);
  }
}

TEST(RmCodes, CoveringRadii) {
  EXPECT_EQ(covering_radius_first_order_in(code(3, 2, 1)).radius, 1u);
  EXPECT_EQ(covering_radius_first_order_in(code(3, 2, 3)).radius, 15u);
  EXPECT_EQ(covering_radius_first_order_in(code(3, 4, 2)).radius, 5u);
  const auto r = covering_radius_first_order_in(code(2, 2, 4));
  EXPECT_EQ(r.radius, 6u);
  EXPECT_EQ(r.cosets, 64u);
  EXPECT_EQ(distance_to_first_order(truth_table(r.witness)), 6u);
  EXPECT_THROW(covering_radius_first_order_in(code(3, 6, 3)), SizeGuardError);
}

TEST(RmCodes, Rho2Formula) {
  EXPECT_EQ(rho2_formula(3, 3), 15);
  EXPECT_EQ(rho2_formula(2, 4), 6);
  EXPECT_EQ(rho2_formula(3, 2), 5);
  EXPECT_EQ(rho2_formula(4, 2), 11);
}

TEST(RmCodes, StrengthAndSelfComplementarity) {
  EXPECT_EQ(strength(codewords(code(3, 1, 2)), 3, 2), 3u);
  EXPECT_EQ(strength(codewords(code(2, 1, 3)), 2, 2), 4u);
  EXPECT_EQ(strength({{0, 0}}, 3, 1), std::nullopt);
  EXPECT_THROW(strength({}, 3, 1), std::invalid_argument);
  EXPECT_EQ(strength(codewords(code(2, 1, 3)), 2, 4), std::nullopt);

  EXPECT_TRUE(self_complementary(codewords(code(3, 1, 2)), *field_of_order(3)));
  EXPECT_FALSE(self_complementary({{0, 0}}, *field_of_order(3)));
  EXPECT_TRUE(self_complementary(codewords(code(3, 0, 2)), *field_of_order(3)));
}

TEST(RmCodes, StrengthTwoSquareSum) {
  std::mt19937_64 rng(4);
  for (std::uint64_t q : {2, 3}) {
    const auto words = codewords(code(q, 1, 2));
    const std::uint64_t n = words.front().size();
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<Elem> v(n);
      for (auto& x : v) x = Elem(rng() % q);
      EXPECT_EQ(q * q * shifted_square_weight_sum(words, v, *field_of_order(q)),
                strength2_square_sum_times_q2(n, q, words.size()));
    }
  }
}

TEST(RmCodes, GeneralBound) {
  auto g = general_upper_bound(27, 3);
  EXPECT_NEAR(g.value, 16.267949, 1e-6);
  EXPECT_EQ(g.floor, 16);
  EXPECT_EQ(general_upper_bound(243, 3).floor, 156);
  g = general_upper_bound(4, 2);
  EXPECT_DOUBLE_EQ(g.value, 1.0);
  EXPECT_EQ(g.floor, 1);
  // Perfect squares hit the boundary exactly: (1*16 - 4)/2 = 6.
  EXPECT_EQ(general_upper_bound(16, 2).floor, 6);
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    for (std::uint64_t n = 1; n < 2000; ++n) {
      const auto b = general_upper_bound(n, q);
      ASSERT_LE(double(b.floor), b.value + 1e-9);
      ASSERT_GT(double(b.floor) + 1, b.value - 1e-9);
    }
  }
}

TEST(RmCodes, Recursion) {
  EXPECT_EQ(recursion_lower_bound(3, 5, 3, 16), 156);
  EXPECT_EQ(recursion_lower_bound(3, 3, 1, 1), 15);
  EXPECT_EQ(recursion_lower_bound(3, 3, 3, 16), 16);
  EXPECT_THROW(recursion_lower_bound(3, 4, 1, 1), std::invalid_argument);
}

TEST(RmCodes, BoundsReports) {
  auto b = bounds_report(3, 3);
  EXPECT_EQ(b.lower, 16);
  EXPECT_EQ(b.upper, 16);
  EXPECT_EQ(b.exact, 16);
  EXPECT_EQ(b.lower_source, "exact");
  b = bounds_report(3, 5);
  EXPECT_EQ(b.lower, 156);
  EXPECT_EQ(b.upper, 156);
  EXPECT_EQ(b.exact, 156);
  b = bounds_report(3, 4);
  EXPECT_EQ(b.exact, 51);
  b = bounds_report(3, 7);
  EXPECT_EQ(b.lower, 1440);
  EXPECT_FALSE(b.exact.has_value());
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (int m = 1; m <= 8; ++m) {
      const auto r = bounds_report(q, m);
      ASSERT_LE(r.lower, r.upper);
      ASSERT_EQ(r.exact.has_value(), r.lower == r.upper);
      if (m % 2 == 0) ASSERT_TRUE(r.exact.has_value());
    }
  }
}

TEST(RmCodes, LiftWitness) {
  const auto v0 = table(kWitness, 3, 3);
  const auto u = lift_witness(v0);
  EXPECT_EQ(u.m, 5);
  EXPECT_EQ(distance_to_first_order(u), 156u);

  const auto zero = lift_witness(zero_table(field_of_order(3), 1));
  EXPECT_GE(distance_to_first_order(zero), 12u);

  std::mt19937_64 rng(9);
  const Field f2 = field_of_order(2);
  for (int rep = 0; rep < 20; ++rep) {
    FunctionTable v = zero_table(f2, 2);
    for (auto& x : v.values) x = Elem(rng() % 2);
    const auto bound = 1 * 4 + 2 * distance_to_first_order_oracle(v);
    EXPECT_GE(distance_to_first_order_oracle(lift_witness(v)), bound);
  }
}

}  // namespace
}  // namespace grm
