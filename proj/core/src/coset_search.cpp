#include "grm/coset_search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "grm/distance_kernel.hpp"
#include "grm/errors.hpp"
#include "grm/odometer.hpp"
#include "grm/polynomial_text.hpp"
#include "grm/rm_codes.hpp"
#include "grm/search_io.hpp"

namespace grm {

namespace {

constexpr std::uint64_t kMaxBlock = std::uint64_t(1) << 20;
constexpr std::uint64_t kMinBlocks = 64;
constexpr std::uint64_t kSpotCheckPeriod = std::uint64_t(1) << 20;

struct BlockResult {
  std::uint64_t cosets = 0;
  std::vector<Survivor> survivors;
};

class BlockWorker {
 public:
  BlockWorker(const SearchSpec& spec, const BlockLayout& layout)
      : spec_(spec),
        layout_(layout),
        odo_(spec.field, spec.m, spec.monomials, spec.radices(), spec.fixed),
        kernel_(spec.field, spec.m) {}

  BlockResult run(std::uint64_t block) {
    BlockResult out;
    const auto radices = odo_.radices();
    std::vector<Elem> digits(radices.size(), 0);
    std::uint64_t rest = block;
    for (std::size_t k = std::size_t(layout_.inner_digits); k < radices.size(); ++k) {
      digits[k] = Elem(rest % radices[k]);
      rest /= radices[k];
    }
    odo_.seek(digits);
    const std::uint64_t base = block * layout_.inner_size;
    for (std::uint64_t j = 0; j < layout_.inner_size; ++j) {
      if (kernel_.at_least(odo_.values(), spec_.threshold)) out.survivors.push_back(verify(base + j));
      ++out.cosets;
      if (++steps_ % kSpotCheckPeriod == 0 && odo_.values() != odo_.recompute()) {
        throw std::logic_error("incremental truth table diverged at coset " + std::to_string(base + j));
      }
      if (j + 1 < layout_.inner_size) odo_.advance(std::size_t(layout_.inner_digits));
    }
    return out;
  }

 private:
  Survivor verify(std::uint64_t index) const {
    Survivor s;
    s.index = index;
    s.digits = odo_.digits();
    const ReducedPolynomial p = odo_.polynomial();
    s.poly = format_polynomial(p);
    s.distance = distance_to_first_order_oracle(truth_table(p));
    if (s.distance < spec_.threshold) {
      throw std::logic_error("survivor " + s.poly + " failed re-verification");
    }
    return s;
  }

  const SearchSpec& spec_;
  BlockLayout layout_;
  CosetOdometer odo_;
  DistanceKernel kernel_;
  std::uint64_t steps_ = 0;
};

void write_checkpoint(const std::string& path, const SearchReport& report) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << report_to_json(report, true, true) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

bool same_search(const SearchSpec& a, const SearchSpec& b) {
  return a.field == b.field && a.m == b.m && a.monomials == b.monomials && a.fixed == b.fixed &&
         a.threshold == b.threshold && a.scalar_symmetry == b.scalar_symmetry;
}

ReducedPolynomial parse3(const std::string& text) { return parse_polynomial(text, build_field(3, 1), 3); }

}  // namespace

void SearchSpec::validate() const {
  if (!field) throw std::invalid_argument("search needs a field");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (shards < 1) throw std::invalid_argument("shards must be at least 1");
  if (shard_index < 0 || shard_index >= shards) {
    throw std::invalid_argument("shard index must lie in [0, shards)");
  }
  if (fixed.field() && (fixed.field() != field || fixed.m() != m)) {
    throw std::invalid_argument("fixed part lives in a different space");
  }
  std::set<Exponents> seen;
  for (const auto& e : monomials) {
    if (int(e.size()) != m) throw std::invalid_argument("monomial arity does not match m");
    for (auto x : e) {
      if (x >= field->q()) throw std::invalid_argument("monomial is not reduced");
    }
    if (total_degree(e) < 2) throw std::invalid_argument("search monomials must have degree >= 2");
    if (!seen.insert(e).second) throw std::invalid_argument("repeated search monomial");
    if (fixed.field() && fixed.coefficient(e) != 0) {
      throw std::invalid_argument("search monomial overlaps the fixed part");
    }
  }
  if (scalar_symmetry) {
    if (monomials.empty()) throw std::invalid_argument("scalar symmetry needs a free coefficient");
    if (fixed.field() && !fixed.is_zero()) {
      throw std::invalid_argument("scalar symmetry needs a zero fixed part");
    }
  }
}

std::vector<std::uint32_t> SearchSpec::radices() const {
  std::vector<std::uint32_t> r(monomials.size(), field->q());
  if (scalar_symmetry && !r.empty()) r.back() = 2;
  return r;
}

std::optional<std::uint64_t> SearchSpec::total() const {
  std::uint64_t t = 1;
  for (auto r : radices()) {
    if (t > (std::uint64_t(1) << 63) / r) return std::nullopt;
    t *= r;
  }
  return t;
}

BlockLayout block_layout(const SearchSpec& spec) {
  const auto radices = spec.radices();
  const auto total = spec.total();
  if (!total) throw SizeGuardError("search space exceeds 2^63 coefficient vectors");
  const std::uint64_t min_blocks = std::min(*total, kMinBlocks);
  BlockLayout best;
  best.blocks = *total;
  std::uint64_t inner = 1;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    inner *= radices[i];
    const std::uint64_t blocks = *total / inner;
    if (inner > kMaxBlock || blocks < min_blocks) break;
    best = {int(i + 1), inner, blocks};
  }
  return best;
}

std::string survivor_checksum(const std::vector<Survivor>& survivors) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& s : survivors) {
    const std::string line = s.poly + ":" + std::to_string(s.distance) + "\n";
    for (unsigned char c : line) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SearchReport enumerate_cosets(const SearchSpec& spec, const SearchOptions& options) {
  spec.validate();
  if (options.threads < 1) throw std::invalid_argument("threads must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const BlockLayout layout = block_layout(spec);

  SearchReport report;
  report.spec = spec;
  double prior_ms = 0;
  if (!options.checkpoint_path.empty() && std::filesystem::exists(options.checkpoint_path)) {
    std::ifstream in(options.checkpoint_path);
    std::stringstream ss;
    ss << in.rdbuf();
    SearchReport saved = report_from_json(ss.str());
    if (!same_search(saved.spec, spec) || saved.spec.shards != spec.shards ||
        saved.spec.shard_index != spec.shard_index) {
      throw std::invalid_argument("checkpoint " + options.checkpoint_path + " belongs to another search");
    }
    report.cosets_examined = saved.cosets_examined;
    report.survivors = std::move(saved.survivors);
    report.next_block = saved.next_block;
    prior_ms = saved.elapsed_ms;
  }

  // Blocks of this shard: shard_index, shard_index + shards, ...
  const std::uint64_t shards = std::uint64_t(spec.shards);
  const std::uint64_t my_blocks =
      layout.blocks > std::uint64_t(spec.shard_index)
          ? (layout.blocks - std::uint64_t(spec.shard_index) + shards - 1) / shards
          : 0;
  const std::uint64_t budget_start = report.cosets_examined;

  std::vector<std::unique_ptr<BlockWorker>> workers;
  for (int t = 0; t < options.threads; ++t) workers.push_back(std::make_unique<BlockWorker>(spec, layout));

  while (report.next_block < my_blocks) {
    if (options.max_cosets && report.cosets_examined - budget_start >= *options.max_cosets) break;
    const std::uint64_t round =
        std::min<std::uint64_t>(std::uint64_t(options.threads), my_blocks - report.next_block);
    std::vector<BlockResult> results(round);
    auto job = [&](std::uint64_t t) {
      const std::uint64_t block = std::uint64_t(spec.shard_index) + (report.next_block + t) * shards;
      results[t] = workers[t]->run(block);
    };
    if (round == 1) {
      job(0);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(round);
      for (std::uint64_t t = 0; t < round; ++t) {
        pool.emplace_back([&, t] {
          try {
            job(t);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (auto& r : results) {
      report.cosets_examined += r.cosets;
      for (auto& s : r.survivors) report.survivors.push_back(std::move(s));
    }
    report.next_block += round;
    if (!options.checkpoint_path.empty()) {
      report.elapsed_ms =
          prior_ms + std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report.complete = report.next_block >= my_blocks;
      std::sort(report.survivors.begin(), report.survivors.end(),
                [](const Survivor& a, const Survivor& b) { return a.index < b.index; });
      report.checksum = survivor_checksum(report.survivors);
      write_checkpoint(options.checkpoint_path, report);
    }
  }
  std::sort(report.survivors.begin(), report.survivors.end(),
            [](const Survivor& a, const Survivor& b) { return a.index < b.index; });
  report.complete = report.next_block >= my_blocks;
  report.checksum = survivor_checksum(report.survivors);
  report.elapsed_ms =
      prior_ms + std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!options.checkpoint_path.empty()) write_checkpoint(options.checkpoint_path, report);
  return report;
}

SearchReport merge_reports(const std::vector<SearchReport>& shards) {
  if (shards.empty()) throw std::invalid_argument("nothing to merge");
  const SearchSpec& first = shards.front().spec;
  std::vector<bool> seen(std::size_t(first.shards), false);
  SearchReport out;
  out.spec = first;
  out.spec.shards = 1;
  out.spec.shard_index = 0;
  out.complete = true;
  for (const auto& r : shards) {
    if (!same_search(r.spec, first) || r.spec.shards != first.shards) {
      throw std::invalid_argument("reports belong to different searches");
    }
    if (seen[std::size_t(r.spec.shard_index)]) throw std::invalid_argument("shard given twice");
    seen[std::size_t(r.spec.shard_index)] = true;
    out.complete = out.complete && r.complete;
    out.cosets_examined += r.cosets_examined;
    out.elapsed_ms += r.elapsed_ms;
    out.survivors.insert(out.survivors.end(), r.survivors.begin(), r.survivors.end());
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::invalid_argument("missing shard reports");
  }
  std::sort(out.survivors.begin(), out.survivors.end(),
            [](const Survivor& a, const Survivor& b) { return a.index < b.index; });
  out.checksum = survivor_checksum(out.survivors);
  out.next_block = block_layout(out.spec).blocks;
  return out;
}

TopDegreeReduction reduce_top_degree(const ReducedPolynomial& f) {
  const FieldTable& field = *f.field();
  const std::uint32_t q = field.q();
  const int m = f.m();
  if (q < 3) throw std::invalid_argument("top-degree reduction needs q >= 3");
  const int top = m * int(q - 1);
  if (f.degree() != top) {
    throw std::invalid_argument("top-degree reduction needs deg f = m(q-1) = " + std::to_string(top));
  }
  const Exponents full(std::size_t(m), std::uint16_t(q - 1));
  const Elem a = f.coefficient(full);
  Vec shift(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Exponents e = full;
    e[std::size_t(i)] = std::uint16_t(q - 2);
    shift[std::size_t(i)] = field.div(f.coefficient(e), a);
  }
  TopDegreeReduction out;
  out.sigma = AffineTransform::translation(shift);
  out.a = a;
  out.r = affine_action(out.sigma, f) - ReducedPolynomial::monomial(f.field(), m, full, a);
  const auto d = out.r.degree();
  if (d && *d > top - 2) throw std::logic_error("top-degree reduction left degree " + std::to_string(*d));
  return out;
}

NextDegreeReduction reduce_next_degree(const ReducedPolynomial& f) {
  const FieldTable& field = *f.field();
  const std::uint32_t q = field.q();
  const int m = f.m();
  const int next = m * int(q - 1) - 1;
  if (next < 1 || f.degree() != next) {
    throw std::invalid_argument("next-degree reduction needs deg f = m(q-1) - 1 = " + std::to_string(next));
  }
  const Exponents full(std::size_t(m), std::uint16_t(q - 1));
  Vec alpha(static_cast<std::size_t>(m));
  int pivot = -1;
  for (int i = 0; i < m; ++i) {
    Exponents e = full;
    e[std::size_t(i)] = std::uint16_t(q - 2);
    alpha[std::size_t(i)] = f.coefficient(e);
    if (pivot < 0 && alpha[std::size_t(i)] != 0) pivot = i;
  }
  if (pivot < 0) throw std::invalid_argument("coefficients of degree m(q-1) - 1 vanish");
  // alpha' = A^{-1} alpha under f -> f(A x): make alpha the last column.
  std::vector<Vec> cols;
  for (int j = 0; j < m; ++j) {
    if (j == pivot) continue;
    Vec e(static_cast<std::size_t>(m), 0);
    e[std::size_t(j)] = 1;
    cols.push_back(e);
  }
  cols.push_back(alpha);
  NextDegreeReduction out;
  out.sigma = AffineTransform::linear(Matrix::from_columns(cols, std::size_t(m)));
  Exponents target = full;
  target[std::size_t(m - 1)] = std::uint16_t(q - 2);
  out.r = affine_action(out.sigma, f) - ReducedPolynomial::monomial(f.field(), m, target);
  const auto d = out.r.degree();
  if (d && *d > next - 1) throw std::logic_error("next-degree reduction left degree " + std::to_string(*d));
  return out;
}

std::vector<std::string> named_space_names() {
  return {"rho3", "deg4", "deg5", "deg6", "deg4-slice", "deg5-slice", "deg6-slice"};
}

SearchSpec named_space(const std::string& name) {
  const Field f3 = build_field(3, 1);
  SearchSpec s;
  s.field = f3;
  s.m = 3;
  s.space = name;
  s.threshold = 16;
  s.fixed = ReducedPolynomial(f3, 3);
  const auto low = monomials(3, 3, 2, 4);  // the 19 coefficients L1..L19
  if (name == "rho3") {
    s.monomials = monomials(3, 3, 2, 6);
    s.scalar_symmetry = true;
  } else if (name == "deg4") {
    s.monomials = low;
  } else if (name == "deg5") {
    s.monomials = low;
    s.fixed = parse3("x^2*y^2*z");
  } else if (name == "deg6") {
    s.monomials = low;
    s.fixed = parse3("x^2*y^2*z^2");
  } else if (name == "deg4-slice" || name == "deg5-slice" || name == "deg6-slice") {
    s.monomials.assign(low.begin(), low.begin() + 15);
    if (name == "deg4-slice") s.fixed = parse3("x^2*z^2");
    if (name == "deg5-slice") s.fixed = parse3("x^2*y^2*z");
    if (name == "deg6-slice") s.fixed = parse3("x^2*y^2*z^2");
  } else {
    throw std::invalid_argument("unknown search space '" + name + "'");
  }
  return s;
}

std::vector<SearchSpec> profile_search_specs(bool full, bool allow_long_run) {
  if (full && !allow_long_run) {
    throw std::invalid_argument("the full profile runs for a long time; pass the long-run acknowledgment");
  }
  if (full) return {named_space("deg4"), named_space("deg5"), named_space("deg6")};
  return {named_space("deg4-slice"), named_space("deg5-slice"), named_space("deg6-slice")};
}

std::vector<SearchReport> run_paper_searches(bool full, bool allow_long_run, const SearchOptions& options) {
  std::vector<SearchReport> out;
  for (const auto& spec : profile_search_specs(full, allow_long_run)) {
    SearchOptions o = options;
    if (!o.checkpoint_path.empty()) o.checkpoint_path += "." + spec.space + ".json";
    out.push_back(enumerate_cosets(spec, o));
  }
  return out;
}

}  // namespace grm
