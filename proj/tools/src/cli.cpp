#include "grm_tools/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "grm/coset_search.hpp"
#include "grm/distance_kernel.hpp"
#include "grm/equivalence.hpp"
#include "grm/errors.hpp"
#include "grm/polynomial_text.hpp"
#include "grm/quadratic_forms.hpp"
#include "grm/rm_codes.hpp"
#include "grm/search_io.hpp"
#include "grm_tools/acceptance.hpp"

namespace grm::tools {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Request {
  std::string q;
  std::uint32_t p = 0;
  std::uint32_t t = 1;
  int m = -1;
  int n = -1;
  std::string poly;
  std::string poly2;
  std::string table_file;
  std::string values;
  std::string point;
  std::string linear;
  std::uint64_t constant = 0;
  int r = -1;
  int s = 2;
  std::uint64_t threshold = 0;
  bool threshold_set = false;
  int shards = 1;
  int shard_index = 0;
  int threads = 1;
  std::string format = "json";
  std::string checkpoint;
  std::string profile = "quick";
  std::string space;
  std::uint64_t max_cosets = 0;
  bool allow_long_run = false;
  bool timing = false;
};

Field field_of(const Request& rq) {
  if (!rq.q.empty() && rq.p != 0) {
    const Field a = parse_field(rq.q);
    const Field b = build_field(rq.p, rq.t);
    if (a != b) throw UsageError("--q " + rq.q + " disagrees with --p/--t");
    return a;
  }
  if (!rq.q.empty()) return parse_field(rq.q);
  if (rq.p != 0) return build_field(rq.p, rq.t);
  throw UsageError("a field is required: --q Q or --p P [--t T]");
}

int need_m(const Request& rq) {
  if (rq.m < 1) throw UsageError("--m must be given and at least 1");
  return rq.m;
}

int need_n(const Request& rq) {
  if (rq.n >= 1) return rq.n;
  if (rq.m >= 1) return rq.m;
  throw UsageError("--n must be given and at least 1");
}

std::vector<std::uint64_t> parse_numbers(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',' || c == '[' || c == ']' || c == '\n' || c == '\t') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("expected non-negative integers, got '" + tok + "'");
    }
    out.push_back(std::stoull(tok));
  }
  return out;
}

Vec parse_vector(const std::string& text, const FieldTable& f, std::size_t expected, const char* what) {
  const auto nums = parse_numbers(text);
  if (nums.size() != expected) {
    throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " entries");
  }
  Vec out;
  for (auto v : nums) {
    if (v >= f.q()) throw UsageError(std::string(what) + " entry " + std::to_string(v) + " is not an element code");
    out.push_back(Elem(v));
  }
  return out;
}

// Truth table from --table FILE (JSON array, {"values": [...]}, or a plain
// list) or --values.
FunctionTable table_of(const Request& rq, const Field& f, int m) {
  std::string text = rq.values;
  if (!rq.table_file.empty()) {
    std::ifstream in(rq.table_file);
    if (!in) throw UsageError("cannot read table file " + rq.table_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      const json j = json::parse(text);
      text = j.at("values").dump();
    }
  }
  const std::uint64_t n = checked_power(f->q(), m);
  return FunctionTable{f, m, parse_vector(text, *f, n, "truth table")};
}

FunctionTable function_of(const Request& rq, const Field& f, int m) {
  if (!rq.poly.empty()) return truth_table(parse_polynomial(rq.poly, f, m));
  if (!rq.table_file.empty() || !rq.values.empty()) return table_of(rq, f, m);
  throw UsageError("a function is required: --poly, --table FILE or --values");
}

json matrix_json(const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(row);
  }
  return rows;
}

double six_places(double x) { return std::round(x * 1e6) / 1e6; }

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(const json& j, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << j.dump() << "\n";
  } else if (format == "text") {
    for (const auto& [k, v] : j.items()) out << k << ": " << scalar_text(v) << "\n";
  } else {
    std::string header, row;
    for (const auto& [k, v] : j.items()) {
      header += (header.empty() ? "" : ",") + k;
      std::string cell = scalar_text(v);
      if (cell.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        cell = quoted + "\"";
      }
      row += (row.empty() ? "" : ",") + cell;
    }
    out << header << "\n" << row << "\n";
  }
}

json cmd_field_check(const Request& rq) {
  const Field f = field_of(rq);
  const std::string err = f->check_axioms();
  return {{"q", f->q()},
          {"p", f->p()},
          {"t", f->degree()},
          {"field", f->name()},
          {"modulus", f->spec().modulus},
          {"primitive", f->primitive()},
          {"axioms_ok", err.empty()},
          {"axioms_error", err.empty() ? json(nullptr) : json(err)}};
}

json cmd_eval(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_m(rq);
  if (rq.poly.empty()) throw UsageError("eval needs --poly");
  const auto p = parse_polynomial(rq.poly, f, m);
  json j{{"q", f->q()}, {"m", m}, {"poly", format_polynomial(p)}};
  if (!rq.point.empty()) {
    const Vec x = parse_vector(rq.point, *f, std::size_t(m), "point");
    j["point"] = x;
    j["value"] = evaluate(p, x);
  } else {
    j["values"] = truth_table(p).values;
  }
  return j;
}

json cmd_interpolate(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_m(rq);
  const auto p = interpolate(table_of(rq, f, m));
  const auto d = p.degree();
  return {{"q", f->q()}, {"m", m}, {"poly", format_polynomial(p)}, {"degree", d ? json(*d) : json(nullptr)}};
}

json cmd_weight(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_m(rq);
  return {{"q", f->q()}, {"m", m}, {"weight", weight(function_of(rq, f, m))}};
}

json cmd_distance(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_m(rq);
  const auto t = function_of(rq, f, m);
  json j{{"q", f->q()}, {"m", m}};
  if (!rq.poly2.empty()) {
    j["distance"] = distance(t, truth_table(parse_polynomial(rq.poly2, f, m)));
    j["to"] = "poly2";
    return j;
  }
  const DistanceKernel kernel(f, m);
  const auto near = kernel.nearest(t.values);
  ReducedPolynomial affine = ReducedPolynomial::constant(f, m, near.constant);
  for (int i = 0; i < m; ++i) {
    Exponents e(std::size_t(m), 0);
    e[std::size_t(i)] = 1;
    affine.add_to(e, near.linear[std::size_t(i)]);
  }
  j["distance"] = near.distance;
  j["nearest_affine"] = format_polynomial(affine);
  j["to"] = "R(1,m)";
  return j;
}

QuadraticForm form_of(const Request& rq, const Field& f, int n) {
  if (rq.poly.empty()) throw UsageError("a quadratic form is required: --poly");
  return QuadraticForm::parse(rq.poly, f, n);
}

json canonical_json(const CanonicalForm& c, const Field& f) {
  const char* tail = c.tail == TailKind::kNone ? "none" : c.tail == TailKind::kSquare ? "square" : "anisotropic";
  return {{"hyperbolic_pairs", c.hyperbolic_pairs},
          {"tail", tail},
          {"a", c.a},
          {"b", c.b},
          {"c", c.c},
          {"form", c.to_form(f).to_text()}};
}

json cmd_quadric_classify(const Request& rq) {
  const Field f = field_of(rq);
  const int n = need_n(rq);
  const auto Q = form_of(rq, f, n);
  const auto c = classify(Q);
  const auto bd = bilinear_data(Q);
  return {{"q", f->q()},
          {"n", n},
          {"form", Q.to_text()},
          {"rank", c.rank},
          {"omega", c.omega},
          {"v", bd.v},
          {"radical_dim", bd.kernel.size()},
          {"canonical", canonical_json(c.canonical, f)},
          {"transform", matrix_json(c.transform)}};
}

json cmd_quadric_zeros(const Request& rq) {
  const Field f = field_of(rq);
  const int n = need_n(rq);
  const auto Q = form_of(rq, f, n);
  const auto c = classify(Q);
  json j{{"q", f->q()}, {"n", n}, {"form", Q.to_text()}, {"rank", c.rank}, {"omega", c.omega},
         {"formula", zero_count(Q)}};
  try {
    j["oracle"] = zero_count_oracle(Q);
  } catch (const SizeGuardError&) {
    j["oracle"] = nullptr;
  }
  if (!rq.linear.empty() || rq.constant != 0) {
    AffineQuadric aq{Q, rq.linear.empty() ? Vec(std::size_t(n), 0) : parse_vector(rq.linear, *f, std::size_t(n), "--linear"),
                     Elem(rq.constant % f->q())};
    if (rq.constant >= f->q()) throw UsageError("--constant is not an element code");
    const auto w = affine_quadric_weight(aq);
    j["affine"] = {{"polynomial", format_polynomial(aq.to_polynomial())},
                   {"r", w.r},
                   {"omega_q0", w.omega_q0},
                   {"homogenized_rank", w.big_r},
                   {"omega_homogenized", w.omega_q},
                   {"zeros_at_infinity", w.zeros_at_infinity},
                   {"projective_zeros", w.projective_zeros},
                   {"affine_zeros", w.affine_zeros},
                   {"weight", w.weight},
                   {"weight_oracle", weight(aq.table())}};
  }
  return j;
}

json cmd_quadric_distance(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_n(rq);
  const auto Q = form_of(rq, f, m);
  const auto c = classify(Q);
  json j{{"q", f->q()}, {"m", m}, {"form", Q.to_text()}, {"rank", c.rank}, {"omega", c.omega},
         {"formula", distance_quadratic_to_affine(Q)}};
  try {
    j["oracle"] = distance_to_first_order_oracle(truth_table(Q.to_polynomial()));
  } catch (const SizeGuardError&) {
    j["oracle"] = nullptr;
  }
  return j;
}

json cmd_rho2(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_m(rq);
  return {{"q", f->q()}, {"m", m}, {"rho2", rho2_formula(f->q(), m)}};
}

json cmd_bounds(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_m(rq);
  const auto b = bounds_report(f->q(), m);
  json prov = json::array();
  for (const auto& s : b.provenance) {
    prov.push_back({{"source", s.source},
                    {"kind", s.kind},
                    {"value", s.value},
                    {"applicable", s.applicable},
                    {"note", s.note}});
  }
  return {{"q", b.q},
          {"m", b.m},
          {"lower", b.lower},
          {"lower_source", b.lower_source},
          {"upper", b.upper},
          {"general_bound", {{"value", six_places(b.upper_real)}, {"floor", general_upper_bound(checked_power(b.q, m, std::uint64_t(1) << 62), b.q).floor}}},
          {"exact", b.exact ? json(*b.exact) : json(nullptr)},
          {"provenance", prov}};
}

json cmd_radius(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_m(rq);
  const int r = rq.r < 0 ? m * int(f->q() - 1) : rq.r;
  const auto res = covering_radius_first_order_in(CodeSpec{f, r, m});
  return {{"q", f->q()},
          {"m", m},
          {"r", r},
          {"full_space", r == m * int(f->q() - 1)},
          {"radius", res.radius},
          {"cosets", res.cosets},
          {"witness", format_polynomial(res.witness)},
          {"rho2", r == 2 ? json(rho2_formula(f->q(), m)) : json(nullptr)}};
}

json cmd_strength(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_m(rq);
  const int r = rq.r < 0 ? 1 : rq.r;
  const auto words = codewords(CodeSpec{f, r, m});
  const auto mult = strength(words, f->q(), rq.s);
  return {{"q", f->q()},
          {"m", m},
          {"r", r},
          {"s", rq.s},
          {"size", words.size()},
          {"length", words.front().size()},
          {"multiplicity", mult ? json(*mult) : json(nullptr)},
          {"self_complementary", self_complementary(words, *f)}};
}

json cmd_lift_witness(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_m(rq);
  const auto v0 = function_of(rq, f, m);
  const auto u = lift_witness(v0);
  const auto d0 = distance_to_first_order(v0);
  const auto du = distance_to_first_order(u);
  const std::uint64_t q = f->q();
  const std::uint64_t bound = (q - 1) * (q - 1) * checked_power(q, m) + q * d0;
  return {{"q", q},
          {"m", m},
          {"distance_v0", d0},
          {"distance_u", du},
          {"lower_bound", bound},
          {"bound_holds", du >= bound},
          {"u", format_polynomial(interpolate(u))}};
}

SearchSpec search_spec_of(const Request& rq) {
  SearchSpec s;
  if (!rq.space.empty()) {
    s = named_space(rq.space);
  } else {
    s.field = field_of(rq);
    s.m = need_m(rq);
    const int top = s.m * int(s.field->q() - 1);
    const int r = rq.r < 0 ? 2 : rq.r;
    if (r < 2 || r > top) throw UsageError("--r must lie in [2, m(q-1)]");
    s.space = "R(" + std::to_string(r) + "," + std::to_string(s.m) + ")/R(1," + std::to_string(s.m) + ")";
    s.monomials = monomials(s.field->q(), s.m, 2, r);
    s.fixed = ReducedPolynomial(s.field, s.m);
    if (!rq.threshold_set) throw UsageError("--threshold is required");
  }
  if (rq.threshold_set) s.threshold = rq.threshold;
  s.shards = rq.shards;
  s.shard_index = rq.shard_index;
  return s;
}

json report_json(const SearchReport& r, bool timing) {
  return json::parse(report_to_json(r, timing, false));
}

json cmd_search(const Request& rq) {
  const SearchSpec spec = search_spec_of(rq);
  spec.validate();
  const auto total = spec.total();
  const std::uint64_t mine = total ? *total / std::uint64_t(spec.shards) : ~std::uint64_t(0);
  constexpr std::uint64_t kLongRun = 100'000'000;
  if (mine > kLongRun && !rq.allow_long_run && rq.max_cosets == 0) {
    throw SizeGuardError("search covers about " + std::to_string(mine) +
                         " cosets; pass --allow-long-run or --max-cosets N");
  }
  SearchOptions opts;
  opts.threads = rq.threads;
  opts.checkpoint_path = rq.checkpoint;
  if (rq.max_cosets) opts.max_cosets = rq.max_cosets;
  return report_json(enumerate_cosets(spec, opts), rq.timing);
}

json cmd_equiv(const Request& rq) {
  const Field f = field_of(rq);
  const int m = need_m(rq);
  if (rq.poly.empty() || rq.poly2.empty()) throw UsageError("equiv needs --poly and --poly2");
  const auto a = truth_table(parse_polynomial(rq.poly, f, m));
  const auto b = truth_table(parse_polynomial(rq.poly2, f, m));
  const auto w = equivalence_witness(a, b);
  json j{{"q", f->q()},
         {"m", m},
         {"distance_f", distance_to_first_order(a)},
         {"distance_g", distance_to_first_order(b)},
         {"equivalent", w.has_value()}};
  if (w) {
    j["sigma"] = {{"matrix", matrix_json(w->sigma.a)}, {"translation", w->sigma.v}};
    j["affine"] = format_polynomial(w->affine);
  } else {
    j["sigma"] = nullptr;
    j["affine"] = nullptr;
  }
  return j;
}

// PASS/FAIL lines on stdout; with an explicit --format json the lines move to
// stderr and stdout carries one JSON summary.
int cmd_verify(const Request& rq, bool json_summary, std::ostream& out, std::ostream& err) {
  if (rq.profile != "quick" && rq.profile != "full") throw UsageError("--profile must be quick or full");
  AcceptanceOptions opts;
  opts.full = rq.profile == "full";
  opts.allow_long_run = rq.allow_long_run;
  opts.threads = rq.threads;
  opts.checkpoint_dir = rq.checkpoint;
  if (opts.full && !opts.allow_long_run) {
    throw UsageError("--profile full runs the whole searches; add --allow-long-run");
  }
  const auto results = run_acceptance(opts, json_summary ? err : out);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  if (json_summary) {
    json criteria = json::array();
    for (const auto& r : results) {
      criteria.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                          {"seconds", rq.timing ? json(std::round(r.seconds * 1000) / 1000) : json(nullptr)}});
    }
    out << json{{"profile", rq.profile}, {"passed", ok}, {"criteria", criteria}}.dump() << "\n";
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reed-Muller covering radius toolkit", "grm"};
  app.require_subcommand(1, 1);
  Request rq;

  auto field_opts = [&](CLI::App* c) {
    c->add_option("--q", rq.q, "field order, e.g. 9 or 3^2");
    c->add_option("--p", rq.p, "characteristic");
    c->add_option("--t", rq.t, "extension degree (with --p)");
    c->add_option("--format", rq.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto function_opts = [&](CLI::App* c) {
    c->add_option("--m", rq.m, "number of variables");
    c->add_option("--poly", rq.poly, "polynomial text");
    c->add_option("--table", rq.table_file, "truth table file")->check(CLI::ExistingFile);
    c->add_option("--values", rq.values, "truth table as a comma list");
  };

  std::string command;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* c = app.add_subcommand(name, help);
    field_opts(c);
    c->callback([&command, name] { command = name; });
    return c;
  };

  sub("field-check", "build a field and check its axioms");
  auto* ev = sub("eval", "evaluate a polynomial at a point or everywhere");
  function_opts(ev);
  ev->add_option("--point", rq.point, "point as a comma list");
  function_opts(sub("interpolate", "polynomial of a truth table"));
  function_opts(sub("weight", "Hamming weight"));
  auto* dist = sub("distance", "distance to R(1,m), or to --poly2");
  function_opts(dist);
  dist->add_option("--poly2", rq.poly2, "second polynomial");
  for (const char* name : {"quadric-classify", "quadric-zeros", "quadric-distance"}) {
    auto* c = sub(name, "quadratic form commands");
    c->add_option("--n", rq.n, "number of variables");
    c->add_option("--m", rq.m, "number of variables (alias of --n)");
    c->add_option("--poly", rq.poly, "homogeneous quadratic polynomial");
    if (std::string(name) == "quadric-zeros") {
      c->add_option("--linear", rq.linear, "linear part for the affine weight");
      c->add_option("--constant", rq.constant, "constant term for the affine weight");
    }
  }
  sub("rho2", "covering radius of R(1,m) in R(2,m), closed form")->add_option("--m", rq.m);
  sub("bounds", "bounds on rho(1,m) with provenance")->add_option("--m", rq.m);
  auto* rad = sub("radius", "brute-force covering radius of R(1,m) in R(r,m)");
  rad->add_option("--m", rq.m);
  rad->add_option("--r", rq.r, "ambient order; default m(q-1)");
  auto* st = sub("strength", "strength and self-complementarity of R(r,m)");
  st->add_option("--m", rq.m);
  st->add_option("--r", rq.r, "order; default 1");
  st->add_option("--s", rq.s, "strength to test; default 2");
  function_opts(sub("lift-witness", "lift v0 to F_q^{m+2} and measure it"));
  auto* se = sub("search", "coset search with threshold pruning");
  se->add_option("--m", rq.m);
  se->add_option("--r", rq.r, "search R(r,m) modulo R(1,m); default 2");
  se->add_option("--space", rq.space, "named space over B_3^3")->check(CLI::IsMember(named_space_names()));
  se->add_option("--threshold", rq.threshold, "report cosets at distance >= threshold")
      ->each([&](const std::string&) { rq.threshold_set = true; });
  se->add_option("--shards", rq.shards)->check(CLI::PositiveNumber);
  se->add_option("--shard-index", rq.shard_index)->check(CLI::NonNegativeNumber);
  se->add_option("--threads", rq.threads)->check(CLI::PositiveNumber);
  se->add_option("--checkpoint", rq.checkpoint, "checkpoint file, resumed when present");
  se->add_option("--max-cosets", rq.max_cosets, "stop after about this many cosets");
  se->add_flag("--allow-long-run", rq.allow_long_run, "accept searches over 10^8 cosets");
  se->add_flag("--timing", rq.timing, "fill elapsed_ms");
  auto* eq = sub("equiv", "affine equivalence modulo R(1,m)");
  eq->add_option("--m", rq.m);
  eq->add_option("--poly", rq.poly);
  eq->add_option("--poly2", rq.poly2);
  auto* ve = sub("verify", "run the acceptance suite");
  ve->add_option("--profile", rq.profile, "quick or full");
  ve->add_flag("--allow-long-run", rq.allow_long_run);
  ve->add_option("--threads", rq.threads)->check(CLI::PositiveNumber);
  ve->add_option("--checkpoint", rq.checkpoint, "directory for search checkpoints");
  ve->add_flag("--timing", rq.timing, "fill seconds in the JSON summary");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (command == "verify") return cmd_verify(rq, ve->get_option("--format")->count() > 0 && rq.format == "json", out, err);
    json j;
    if (command == "field-check") j = cmd_field_check(rq);
    else if (command == "eval") j = cmd_eval(rq);
    else if (command == "interpolate") j = cmd_interpolate(rq);
    else if (command == "weight") j = cmd_weight(rq);
    else if (command == "distance") j = cmd_distance(rq);
    else if (command == "quadric-classify") j = cmd_quadric_classify(rq);
    else if (command == "quadric-zeros") j = cmd_quadric_zeros(rq);
    else if (command == "quadric-distance") j = cmd_quadric_distance(rq);
    else if (command == "rho2") j = cmd_rho2(rq);
    else if (command == "bounds") j = cmd_bounds(rq);
    else if (command == "radius") j = cmd_radius(rq);
    else if (command == "strength") j = cmd_strength(rq);
    else if (command == "lift-witness") j = cmd_lift_witness(rq);
    else if (command == "search") j = cmd_search(rq);
    else if (command == "equiv") j = cmd_equiv(rq);
    emit(j, rq.format, out);
    if (command == "field-check" && !j.at("axioms_ok").get<bool>()) return kExitFailure;
    return 0;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace grm::tools
