#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <set>

#include "grm/coset_search.hpp"
#include "grm/polynomial_text.hpp"
#include "grm/quadratic_forms.hpp"
#include "grm/rm_codes.hpp"
#include "grm/search_io.hpp"

namespace grm {
namespace {

ReducedPolynomial poly(const char* text, std::uint64_t q, int m) {
  return parse_polynomial(text, field_of_order(q), m);
}

SearchSpec degree_space(std::uint64_t q, int m, int lo, int hi, std::uint64_t threshold) {
  SearchSpec s;
  s.field = field_of_order(q);
  s.m = m;
  s.space = "test";
  s.monomials = monomials(std::uint32_t(q), m, lo, hi);
  s.fixed = ReducedPolynomial(s.field, m);
  s.threshold = threshold;
  return s;
}

std::set<std::string> survivor_polys(const SearchReport& r) {
  std::set<std::string> out;
  for (const auto& s : r.survivors) out.insert(s.poly);
  return out;
}

TEST(CosetSearch, ReduceTopDegreeExamples) {
  auto r = reduce_top_degree(poly("x^2", 3, 1));
  EXPECT_EQ(r.sigma, AffineTransform::translation({0}));
  EXPECT_EQ(r.a, 1);
  EXPECT_TRUE(r.r.is_zero());

  r = reduce_top_degree(poly("x^2+x", 3, 1));
  EXPECT_EQ(r.sigma, AffineTransform::translation({1}));
  EXPECT_EQ(r.a, 1);
  EXPECT_EQ(format_polynomial(r.r), "2");

  EXPECT_THROW(reduce_top_degree(poly("x^2", 2, 1)), std::invalid_argument);
  EXPECT_THROW(reduce_top_degree(poly("x*y", 3, 2)), std::invalid_argument);
}

TEST(CosetSearch, ReduceNextDegreeExamples) {
  auto r = reduce_next_degree(poly("x1^2*x2", 3, 2));
  EXPECT_EQ(r.sigma, AffineTransform::identity(2));
  EXPECT_TRUE(r.r.is_zero());

  r = reduce_next_degree(poly("x1*x2^2", 3, 2));
  Matrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  EXPECT_EQ(r.sigma, AffineTransform::linear(swap));
  EXPECT_TRUE(r.r.is_zero());

  EXPECT_THROW(reduce_next_degree(poly("x1^2*x2^2", 3, 2)), std::invalid_argument);
}

TEST(CosetSearch, ReductionsOnRandomPolynomials) {
  std::mt19937_64 rng(21);
  for (auto [q, mmax] : {std::pair{3u, 3}, {4u, 2}}) {
    const Field f = field_of_order(q);
    for (int m = 1; m <= mmax; ++m) {
      const int top = m * int(q - 1);
      const auto all = monomials(q, m, 0, top);
      for (int rep = 0; rep < 25; ++rep) {
        ReducedPolynomial p(f, m);
        for (const auto& e : all) p.set(e, Elem(rng() % q));
        const Exponents full(std::size_t(m), std::uint16_t(q - 1));
        p.set(full, Elem(1 + rng() % (q - 1)));
        const auto t = reduce_top_degree(p);
        const auto d = t.r.degree();
        EXPECT_TRUE(!d || *d <= top - 2);
        EXPECT_EQ(affine_action(t.sigma, p), t.r + ReducedPolynomial::monomial(f, m, full, t.a));

        if (top - 1 < 1) continue;
        p.set(full, 0);
        Exponents sub = full;
        sub[std::size_t(rng() % std::uint64_t(m))] = std::uint16_t(q - 2);
        p.set(sub, Elem(1 + rng() % (q - 1)));
        const auto n = reduce_next_degree(p);
        const auto dn = n.r.degree();
        EXPECT_TRUE(!dn || *dn <= top - 2);
        EXPECT_TRUE(n.sigma.v == Vec(std::size_t(m), 0));
      }
    }
  }
}

TEST(CosetSearch, QuadraticSurvivorsAreTypeThree) {
  const auto spec = degree_space(3, 2, 2, 2, 5);
  const auto report = enumerate_cosets(spec);
  EXPECT_TRUE(report.complete);
  EXPECT_EQ(report.cosets_examined, 27u);

  std::set<std::string> expected;
  for (std::uint64_t i = 0; i < 27; ++i) {
    const auto Q = QuadraticForm::from_index(spec.field, 2, i);
    const auto c = classify(Q);
    if (c.rank == 2 && c.omega == 0) expected.insert(format_polynomial(Q.to_polynomial()));
  }
  EXPECT_EQ(expected.size(), 6u);
  EXPECT_EQ(survivor_polys(report), expected);
  for (const auto& s : report.survivors) EXPECT_EQ(s.distance, 5u);

  EXPECT_TRUE(enumerate_cosets(degree_space(3, 2, 2, 2, 6)).survivors.empty());
}

TEST(CosetSearch, MatchesUnprunedOracle) {
  for (std::uint64_t threshold : {3, 4, 5, 6}) {
    const auto spec = degree_space(3, 2, 2, 3, threshold);
    const auto report = enumerate_cosets(spec);
    std::set<std::string> expected;
    const PointIndexer digits(3, int(spec.monomials.size()));
    for (std::uint64_t i = 0; i < digits.size(); ++i) {
      const auto d = digits.point(i);
      ReducedPolynomial p(spec.field, 2);
      for (std::size_t k = 0; k < d.size(); ++k) p.set(spec.monomials[k], d[k]);
      if (distance_to_first_order_oracle(truth_table(p)) >= threshold) expected.insert(format_polynomial(p));
    }
    EXPECT_EQ(survivor_polys(report), expected) << "threshold " << threshold;
  }
}

TEST(CosetSearch, ShardsAndThreadsAgree) {
  auto spec = degree_space(3, 2, 2, 3, 5);
  const auto whole = enumerate_cosets(spec);
  ASSERT_FALSE(whole.survivors.empty());
  for (int shards : {2, 3, 7}) {
    std::vector<SearchReport> parts;
    for (int i = 0; i < shards; ++i) {
      spec.shards = shards;
      spec.shard_index = i;
      parts.push_back(enumerate_cosets(spec));
    }
    const auto merged = merge_reports(parts);
    EXPECT_EQ(merged.checksum, whole.checksum);
    EXPECT_EQ(merged.cosets_examined, whole.cosets_examined);
    EXPECT_EQ(report_to_json(merged, false, false), report_to_json(whole, false, false));
  }
  spec.shards = 1;
  spec.shard_index = 0;
  SearchOptions threaded;
  threaded.threads = 3;
  EXPECT_EQ(enumerate_cosets(spec, threaded).checksum, whole.checksum);
}

TEST(CosetSearch, BudgetAndResume) {
  const auto spec = degree_space(3, 2, 2, 3, 5);
  const auto whole = enumerate_cosets(spec);
  const auto path = (std::filesystem::temp_directory_path() / "grm_resume_test.json").string();
  std::filesystem::remove(path);
  SearchOptions opts;
  opts.checkpoint_path = path;
  opts.max_cosets = 20;
  const auto partial = enumerate_cosets(spec, opts);
  EXPECT_FALSE(partial.complete);
  EXPECT_LT(partial.cosets_examined, whole.cosets_examined);
  opts.max_cosets.reset();
  const auto resumed = enumerate_cosets(spec, opts);
  EXPECT_TRUE(resumed.complete);
  EXPECT_EQ(resumed.cosets_examined, whole.cosets_examined);
  EXPECT_EQ(resumed.checksum, whole.checksum);
  std::filesystem::remove(path);
}

TEST(CosetSearch, WitnessCosetSurvives) {
  SearchSpec s;
  s.field = field_of_order(3);
  s.m = 3;
  s.space = "witness";
  const auto low = monomials(3, 3, 2, 2);
  s.monomials.assign(low.begin(), low.begin() + 3);  // z^2, y*z, y^2
  s.fixed = poly("x*y+y^2*z+x*y*z+y^2*z^2+x^2*z^2", 3, 3);
  s.threshold = 16;
  const auto r = enumerate_cosets(s);
  ASSERT_EQ(r.cosets_examined, 27u);
  bool found = false;
  for (const auto& sv : r.survivors) {
    EXPECT_EQ(sv.distance, 16u);
    found = found || sv.poly == format_polynomial(poly("y^2+x*y+y^2*z+x*y*z+y^2*z^2+x^2*z^2", 3, 3));
  }
  EXPECT_TRUE(found);
}

TEST(CosetSearch, SpecValidation) {
  auto s = degree_space(3, 2, 2, 2, 5);
  s.shard_index = 1;
  EXPECT_THROW(enumerate_cosets(s), std::invalid_argument);
  s = degree_space(3, 2, 1, 2, 5);
  EXPECT_THROW(enumerate_cosets(s), std::invalid_argument);
  s = degree_space(3, 2, 2, 2, 5);
  s.fixed = poly("x^2", 3, 2);
  EXPECT_THROW(enumerate_cosets(s), std::invalid_argument);
  EXPECT_THROW(profile_search_specs(true, false), std::invalid_argument);
  EXPECT_EQ(named_space("deg4").monomials.size(), 19u);
  EXPECT_EQ(named_space("rho3").radices().back(), 2u);
}

TEST(CosetSearch, CheckpointRoundTrip) {
  const auto r = enumerate_cosets(degree_space(3, 2, 2, 3, 5));
  const auto back = report_from_json(report_to_json(r, true, true));
  EXPECT_EQ(back.checksum, r.checksum);
  EXPECT_EQ(back.spec.monomials, r.spec.monomials);
  EXPECT_EQ(back.survivors.size(), r.survivors.size());
  EXPECT_EQ(report_to_json(back, true, true), report_to_json(r, true, true));
}

}  // namespace
}  // namespace grm
