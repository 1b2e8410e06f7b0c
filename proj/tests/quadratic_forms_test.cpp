#include <gtest/gtest.h>

#include <random>

#include "grm/quadratic_forms.hpp"
#include "grm/rm_codes.hpp"

namespace grm {
namespace {

QuadraticForm form(const char* text, std::uint64_t q, int n) {
  return QuadraticForm::parse(text, field_of_order(q), n);
}

TEST(QuadraticForms, BilinearData) {
  auto d = bilinear_data(form("x1*x2", 3, 2));
  EXPECT_EQ(d.gram(0, 1), 1);
  EXPECT_EQ(d.gram(1, 0), 1);
  EXPECT_EQ(d.gram(0, 0), 0);
  EXPECT_EQ(d.v, 0);

  d = bilinear_data(form("x1^2", 3, 1));
  EXPECT_EQ(d.gram(0, 0), 2);
  EXPECT_EQ(d.v, 0);

  d = bilinear_data(form("x1^2", 2, 1));
  EXPECT_EQ(d.gram(0, 0), 0);
  EXPECT_EQ(d.kernel.size(), 1u);
  EXPECT_EQ(d.v, 0);
  EXPECT_TRUE(d.anisotropic_kernel_vector.has_value());
  EXPECT_EQ(classify(form("x1^2", 2, 1)).rank, 1);
}

TEST(QuadraticForms, ClassifyExamples) {
  auto c = classify(form("x1*x2", 3, 2));
  EXPECT_EQ(c.rank, 2);
  EXPECT_EQ(c.omega, 2);
  c = classify(form("x1^2+x2^2", 3, 2));
  EXPECT_EQ(c.rank, 2);
  EXPECT_EQ(c.omega, 0);
  c = classify(form("0", 3, 2));
  EXPECT_EQ(c.rank, 0);
  EXPECT_EQ(c.omega, 2);
  c = classify(form("x1^2+x1*x2+x2^2", 2, 2));
  EXPECT_EQ(c.rank, 2);
  EXPECT_EQ(c.omega, 0);
}

TEST(QuadraticForms, TransformRealisesCanonicalForm) {
  std::mt19937_64 rng(3);
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
    const Field f = field_of_order(q);
    for (int n = 1; n <= 5; ++n) {
      for (int rep = 0; rep < 40; ++rep) {
        QuadraticForm Q(f, n);
        for (int i = 0; i < n; ++i) {
          for (int j = i; j < n; ++j) Q.set(i, j, Elem(rng() % q));
        }
        const auto c = classify(Q);
        ASSERT_TRUE(is_invertible(*f, c.transform));
        ASSERT_EQ(Q.substitute(c.transform), c.canonical.to_form(f));
        ASSERT_EQ(c.omega == 1, c.rank % 2 == 1);
      }
    }
  }
}

TEST(QuadraticForms, ZeroCounts) {
  EXPECT_EQ(zero_count(form("x1*x2", 3, 2)), 5u);
  EXPECT_EQ(zero_count(form("x1^2+x2^2", 3, 2)), 1u);
  EXPECT_EQ(zero_count(form("x1^2", 3, 2)), 3u);
  EXPECT_EQ(zero_count_oracle(form("0", 3, 2)), 9u);
  EXPECT_EQ(zero_count_oracle(form("x1*x2", 3, 2)), 5u);
  EXPECT_EQ(zero_count_oracle(form("x1*x2+x3^2", 3, 3)), 9u);
  EXPECT_EQ(zero_count_formula(3, 3, 1, 1), 9u);
}

TEST(QuadraticForms, Homogenize) {
  const Field f3 = build_field(3, 1);
  AffineQuadric aq{form("x1*x2", 3, 2), {1, 0}, 0};
  EXPECT_EQ(homogenize(aq), form("x1*x2+x1*x3", 3, 3));
  AffineQuadric c{QuadraticForm(f3, 2), {0, 0}, 1};
  EXPECT_EQ(homogenize(c), form("x3^2", 3, 3));
}

TEST(QuadraticForms, AffineWeights) {
  const Field f3 = build_field(3, 1);
  EXPECT_EQ(affine_quadric_weight({form("x1*x2", 3, 2), {1, 0}, 0}).weight, 4u);
  EXPECT_EQ(affine_quadric_weight({QuadraticForm(f3, 2), {0, 0}, 1}).weight, 9u);
  EXPECT_EQ(affine_quadric_weight({QuadraticForm(f3, 2), {1, 0}, 0}).weight, 6u);
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2, 3, 4}) {
    const Field f = field_of_order(q);
    for (int rep = 0; rep < 60; ++rep) {
      const int m = 1 + int(rng() % 3);
      AffineQuadric aq{QuadraticForm::from_index(f, m, rng() % checked_power(q, QuadraticForm::coefficient_count(m))),
                       Vec(std::size_t(m)), Elem(rng() % q)};
      for (auto& a : aq.alpha) a = Elem(rng() % q);
      ASSERT_EQ(affine_quadric_weight(aq).weight, weight(aq.table()));
    }
  }
}

TEST(QuadraticForms, DistanceToAffine) {
  EXPECT_EQ(distance_quadratic_to_affine(form("x1^2", 3, 2)), 3u);
  EXPECT_EQ(distance_quadratic_to_affine(form("x1*x2", 3, 2)), 4u);
  EXPECT_EQ(distance_quadratic_to_affine(form("x1^2+x2^2", 3, 2)), 5u);
  for (std::uint64_t q : {2, 3, 4}) {
    const Field f = field_of_order(q);
    const int m = 2;
    const auto count = checked_power(q, QuadraticForm::coefficient_count(m));
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto Q = QuadraticForm::from_index(f, m, i);
      ASSERT_EQ(distance_quadratic_to_affine(Q),
                distance_to_first_order_oracle(truth_table(Q.to_polynomial())))
          << Q.to_text();
    }
  }
}

}  // namespace
}  // namespace grm
