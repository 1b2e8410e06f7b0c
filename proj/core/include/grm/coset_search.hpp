#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grm/finite_field.hpp"
#include "grm/function_space.hpp"

namespace grm {

// Exhaustive search over f = fixed + sum_k d_k M_k for coset representatives
// with d(f, R_q(1, m)) >= threshold. Digit k belongs to monomials[k]; digit 0
// moves fastest.
struct SearchSpec {
  Field field;
  int m = 0;
  std::string space;  // label echoed in reports
  std::vector<Exponents> monomials;
  ReducedPolynomial fixed;
  std::uint64_t threshold = 0;
  // Restricts the last digit to {0, 1}. Valid when the fixed part is zero:
  // d(c f, R) = d(f, R) for c != 0, so every coset is reached up to scaling.
  bool scalar_symmetry = false;
  int shards = 1;
  int shard_index = 0;

  // Throws std::invalid_argument when an invariant fails.
  void validate() const;
  std::vector<std::uint32_t> radices() const;
  // Product of the radices, or nullopt beyond 2^63.
  std::optional<std::uint64_t> total() const;
};

struct Survivor {
  std::uint64_t index = 0;  // position in the unsharded odometer order
  std::vector<Elem> digits;
  std::string poly;
  std::uint64_t distance = 0;
};

struct SearchReport {
  SearchSpec spec;
  std::uint64_t cosets_examined = 0;
  std::vector<Survivor> survivors;  // sorted by index
  double elapsed_ms = 0;
  std::string checksum;
  bool complete = false;
  // Resume point: blocks of this shard already processed.
  std::uint64_t next_block = 0;
};

struct SearchOptions {
  int threads = 1;
  // Stop after roughly this many cosets and return an incomplete report.
  std::optional<std::uint64_t> max_cosets;
  // Read to resume when present, rewritten after every round of blocks.
  std::string checkpoint_path;
};

// The odometer is cut into blocks on its most significant digits; block b
// belongs to shard b mod shards. The cut depends only on the radices.
struct BlockLayout {
  int inner_digits = 0;
  std::uint64_t inner_size = 1;
  std::uint64_t blocks = 1;
};
BlockLayout block_layout(const SearchSpec& spec);

SearchReport enumerate_cosets(const SearchSpec& spec, const SearchOptions& options = {});

// Union of one complete report per shard of the same search, shaped like an
// unsharded run. Throws std::invalid_argument on mismatched or missing shards.
SearchReport merge_reports(const std::vector<SearchReport>& shards);

// FNV-1a over "poly:distance\n" for the survivors in index order.
std::string survivor_checksum(const std::vector<Survivor>& survivors);

struct TopDegreeReduction {
  AffineTransform sigma;
  Elem a = 0;
  ReducedPolynomial r;  // sigma.f - a prod x_i^{q-1}, degree <= m(q-1) - 2
};
// Requires q >= 3 and deg f = m(q-1). Throws std::invalid_argument otherwise.
TopDegreeReduction reduce_top_degree(const ReducedPolynomial& f);

struct NextDegreeReduction {
  AffineTransform sigma;  // linear
  ReducedPolynomial r;    // sigma.f - prod_{i<m} x_i^{q-1} x_m^{q-2}
};
// Requires deg f = m(q-1) - 1. Throws std::invalid_argument otherwise.
NextDegreeReduction reduce_next_degree(const ReducedPolynomial& f);

// Search spaces over B_3^3 with threshold 16:
//   rho3        all 23 coefficients of degree 2..6, last one in {0, 1}
//   deg4        the 19 coefficients of degree 2..4
//   deg5        deg4 plus the fixed term x^2 y^2 z
//   deg6        deg4 plus the fixed term x^2 y^2 z^2
//   deg4-slice, deg5-slice, deg6-slice
//               the first 15 coefficients free, the degree-4 coefficients of
//               x y^2 z, x^2 z^2, x^2 y z, x^2 y^2 fixed. deg4-slice fixes
//               x^2 z^2 to 1 so it holds y^2+xy+y^2z+xyz+y^2z^2+x^2z^2.
SearchSpec named_space(const std::string& name);
std::vector<std::string> named_space_names();

// The searches of the quick profile (slices) or the full profile
// (deg4, deg5, deg6). Full requires allow_long_run.
std::vector<SearchSpec> profile_search_specs(bool full, bool allow_long_run);
// Runs profile_search_specs in order. A checkpoint path gets one file per space.
std::vector<SearchReport> run_paper_searches(bool full, bool allow_long_run,
                                             const SearchOptions& options = {});

}  // namespace grm
