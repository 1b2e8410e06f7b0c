#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "grm/finite_field.hpp"

namespace grm {
namespace {

// Schoolbook product of base-p digit vectors reduced by a monic modulus.
std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                           const std::vector<std::uint32_t>& mod) {
  const std::size_t t = mod.size() - 1;
  std::vector<std::uint32_t> da(t), db(t), prod(2 * t, 0);
  for (std::size_t i = 0; i < t; ++i, a /= p, b /= p) {
    da[i] = a % p;
    db[i] = b % p;
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (std::size_t k = 2 * t - 1; k >= t; --k) {
    const std::uint32_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < t; ++i) prod[k - t + i] = (prod[k - t + i] + p * p - c * mod[i]) % p;
  }
  std::uint32_t out = 0;
  for (std::size_t i = t; i-- > 0;) out = out * p + prod[i];
  return out;
}

TEST(FiniteField, PrimeFieldInverses) {
  EXPECT_EQ(build_field(3, 1)->inv(2), 2);
  EXPECT_EQ(build_field(5, 1)->inv(3), 2);
  EXPECT_THROW(build_field(5, 1)->inv(0), std::domain_error);
}

TEST(FiniteField, DefiningPolynomials) {
  EXPECT_EQ(build_field(2, 2)->spec().modulus, (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(build_field(3, 2)->spec().modulus, (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(build_field(2, 3)->spec().modulus, (std::vector<std::uint32_t>{1, 0, 1, 1}));
  EXPECT_EQ(build_field(5, 2)->spec().modulus, (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(FiniteField, F4Multiplication) {
  const Field f4 = build_field(2, 2);
  EXPECT_EQ(f4->mul(2, 3), 1);
  EXPECT_EQ(f4->add(2, 3), 1);
}

TEST(FiniteField, MultiplicationMatchesPolynomialArithmetic) {
  for (auto [p, t] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {2u, 4u}, {7u, 2u}}) {
    const Field f = build_field(p, t);
    for (std::uint32_t a = 0; a < f->q(); ++a) {
      for (std::uint32_t b = 0; b < f->q(); ++b) {
        ASSERT_EQ(f->mul(Elem(a), Elem(b)), poly_mul_mod(a, b, p, f->spec().modulus))
            << "q=" << f->q() << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(FiniteField, AxiomsHold) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
    EXPECT_EQ(field_of_order(q)->check_axioms(), "") << "q=" << q;
  }
}

TEST(FiniteField, LargeFieldSpotChecks) {
  const Field f = build_field(2, 16);
  EXPECT_EQ(f->q(), 65536u);
  for (Elem a : {Elem(1), Elem(2), Elem(12345), Elem(65535)}) {
    EXPECT_EQ(f->mul(a, f->inv(a)), 1);
    EXPECT_EQ(f->add(a, a), 0);
  }
  EXPECT_THROW(build_field(2, 17), std::invalid_argument);
  EXPECT_THROW(build_field(4, 1), std::invalid_argument);
  EXPECT_THROW(field_of_order(6), std::invalid_argument);
}

TEST(FiniteField, SquareRoots) {
  EXPECT_EQ(build_field(2, 2)->sqrt(2), Elem(3));
  EXPECT_EQ(build_field(3, 1)->sqrt(1), Elem(1));
  EXPECT_EQ(build_field(3, 1)->sqrt(2), std::nullopt);
  for (std::uint64_t q : {2, 3, 4, 5, 8, 9, 16, 25}) {
    const Field f = field_of_order(q);
    std::set<Elem> squares;
    for (std::uint32_t x = 0; x < f->q(); ++x) squares.insert(f->mul(Elem(x), Elem(x)));
    for (std::uint32_t a = 0; a < f->q(); ++a) {
      const auto r = f->sqrt(Elem(a));
      ASSERT_EQ(r.has_value(), squares.count(Elem(a)) == 1) << "q=" << q << " a=" << a;
      if (r) EXPECT_EQ(f->mul(*r, *r), a);
    }
  }
}

TEST(FiniteField, IrreducibleQuadratics) {
  const Field f3 = build_field(3, 1);
  EXPECT_TRUE(f3->is_irreducible_quadratic(1, 0, 1));
  EXPECT_FALSE(f3->is_irreducible_quadratic(1, 0, 2));
  EXPECT_TRUE(build_field(2, 1)->is_irreducible_quadratic(1, 1, 1));
  EXPECT_THROW(f3->is_irreducible_quadratic(0, 1, 1), std::invalid_argument);
}

TEST(FiniteField, ParsingAndNames) {
  EXPECT_EQ(parse_field("9")->name(), "3^2");
  EXPECT_EQ(parse_field("3^2"), parse_field("9"));
  EXPECT_EQ(parse_field("7")->name(), "7");
  EXPECT_THROW(parse_field("10"), std::invalid_argument);
  EXPECT_THROW(parse_field("x"), std::invalid_argument);
  EXPECT_EQ(build_field(3, 1)->from_integer(-1), 2);
  EXPECT_EQ(build_field(3, 1)->from_integer(7), 1);
}

TEST(FiniteField, PrimitiveElementGeneratesGroup) {
  for (std::uint64_t q : {3, 4, 9, 16, 25}) {
    const Field f = field_of_order(q);
    std::set<Elem> seen;
    Elem x = 1;
    for (std::uint32_t i = 0; i + 1 < f->q(); ++i, x = f->mul(x, f->primitive())) seen.insert(x);
    EXPECT_EQ(seen.size(), f->q() - 1);
  }
}

}  // namespace
}  // namespace grm
