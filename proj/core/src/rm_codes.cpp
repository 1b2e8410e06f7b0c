#include "grm/rm_codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "grm/distance_kernel.hpp"
#include "grm/errors.hpp"
#include "grm/odometer.hpp"

namespace grm {

namespace {

__extension__ typedef __int128 Wide;

constexpr std::uint64_t kCodewordGuard = 100'000'000;
constexpr std::uint64_t kCosetGuard = 1'000'000'000;

std::int64_t ipow(std::uint64_t q, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= std::int64_t(q);
  return v;
}

// q^k or nullopt when it exceeds 2^63.
std::optional<std::uint64_t> power_or_overflow(std::uint64_t q, std::uint64_t k) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (v > (std::uint64_t(1) << 63) / q) return std::nullopt;
    v *= q;
  }
  return v;
}

}  // namespace

void CodeSpec::validate() const {
  if (!field) throw std::invalid_argument("code needs a field");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (r < 0 || r > m * int(field->q() - 1)) {
    throw std::invalid_argument("order r must lie in [0, m(q-1)] = [0, " +
                                std::to_string(m * int(field->q() - 1)) + "]");
  }
}

std::vector<Exponents> code_basis(const CodeSpec& spec) {
  spec.validate();
  return monomials(spec.q(), spec.m, 0, spec.r);
}

int code_dimension(const CodeSpec& spec) { return int(code_basis(spec).size()); }

void for_each_codeword(const CodeSpec& spec,
                       const std::function<bool(const std::vector<Elem>&)>& visit) {
  auto basis = code_basis(spec);
  const auto count = power_or_overflow(spec.q(), basis.size());
  if (!count || *count > kCodewordGuard) {
    throw SizeGuardError("R_" + spec.field->name() + "(" + std::to_string(spec.r) + "," +
                         std::to_string(spec.m) + ") has q^" + std::to_string(basis.size()) +
                         " codewords, above the limit of 10^8");
  }
  std::vector<std::uint32_t> radices(basis.size(), spec.q());
  CosetOdometer odo(spec.field, spec.m, std::move(basis), std::move(radices),
                    ReducedPolynomial(spec.field, spec.m));
  do {
    if (!visit(odo.values())) return;
  } while (odo.advance());
}

std::vector<std::vector<Elem>> codewords(const CodeSpec& spec) {
  std::vector<std::vector<Elem>> out;
  for_each_codeword(spec, [&](const std::vector<Elem>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::uint64_t distance_to_first_order(const FunctionTable& f) {
  return DistanceKernel(f.field, f.m).distance(f.values);
}

std::uint64_t distance_to_first_order_oracle(const FunctionTable& f) {
  const FieldTable& field = *f.field;
  const std::uint64_t n = checked_power(field.q(), f.m);
  if (f.values.size() != n) throw DimensionError("truth table length does not match q^m");
  if (n * n * field.q() > 1'000'000'000) throw SizeGuardError("affine enumeration above 10^9 steps");
  const PointIndexer idx(field.q(), f.m);
  std::vector<Vec> pts(n);
  for (std::uint64_t x = 0; x < n; ++x) pts[x] = idx.point(x);
  std::uint64_t best = n;
  for (std::uint64_t l = 0; l < n; ++l) {
    for (std::uint32_t c = 0; c < field.q(); ++c) {
      std::uint64_t d = 0;
      for (std::uint64_t x = 0; x < n; ++x) {
        Elem a = Elem(c);
        for (int i = 0; i < f.m; ++i) a = field.add(a, field.mul(pts[l][i], pts[x][i]));
        d += a != f.values[x];
      }
      best = std::min(best, d);
    }
  }
  return best;
}

std::optional<std::uint64_t> coset_count(const CodeSpec& ambient) {
  ambient.validate();
  return power_or_overflow(ambient.q(), monomials(ambient.q(), ambient.m, 2, ambient.r).size());
}

RadiusResult covering_radius_first_order_in(const CodeSpec& ambient) {
  ambient.validate();
  auto monos = monomials(ambient.q(), ambient.m, 2, ambient.r);
  const auto count = power_or_overflow(ambient.q(), monos.size());
  if (!count || *count > kCosetGuard) {
    throw SizeGuardError("covering radius needs " +
                         (count ? std::to_string(*count)
                                : std::to_string(ambient.q()) + "^" + std::to_string(monos.size())) +
                         " cosets, above the limit of 10^9");
  }
  std::vector<std::uint32_t> radices(monos.size(), ambient.q());
  CosetOdometer odo(ambient.field, ambient.m, std::move(monos), std::move(radices),
                    ReducedPolynomial(ambient.field, ambient.m));
  const DistanceKernel kernel(ambient.field, ambient.m);
  RadiusResult out;
  out.radius = kernel.distance(odo.values());
  out.witness = odo.polynomial();
  out.cosets = 1;
  while (odo.advance()) {
    ++out.cosets;
    if (kernel.at_least(odo.values(), out.radius + 1)) {
      out.radius = kernel.distance(odo.values());
      out.witness = odo.polynomial();
    }
  }
  return out;
}

std::int64_t rho2_formula(std::uint64_t q, int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  return std::int64_t(q - 1) * ipow(q, m - 1) - ipow(q, (m + 1) / 2 - 1);
}

std::optional<std::uint64_t> strength(const std::vector<std::vector<Elem>>& code, std::uint32_t q,
                                      int s) {
  if (code.empty()) throw std::invalid_argument("strength of an empty code");
  const std::size_t n = code.front().size();
  if (s < 0 || std::size_t(s) > n) throw std::invalid_argument("strength s must lie in [0, n]");
  const std::uint64_t patterns = std::uint64_t(ipow(q, s));
  if (code.size() % patterns != 0) return std::nullopt;
  const std::uint64_t expected = code.size() / patterns;

  std::vector<std::size_t> pick(s);
  for (int j = 0; j < s; ++j) pick[j] = std::size_t(j);
  std::vector<std::uint64_t> counts(patterns);
  while (true) {
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto& c : code) {
      std::uint64_t idx = 0;
      for (int j = s - 1; j >= 0; --j) idx = idx * q + c[pick[j]];
      ++counts[idx];
    }
    for (auto k : counts) {
      if (k != expected) return std::nullopt;
    }
    // Next s-subset in lexicographic order.
    int j = s - 1;
    while (j >= 0 && pick[j] == n - std::size_t(s - j)) --j;
    if (j < 0) break;
    ++pick[j];
    for (int k = j + 1; k < s; ++k) pick[k] = pick[k - 1] + 1;
  }
  return expected;
}

bool self_complementary(const std::vector<std::vector<Elem>>& code, const FieldTable& field) {
  const std::set<std::vector<Elem>> members(code.begin(), code.end());
  for (const auto& c : code) {
    for (std::uint32_t w = 1; w < field.q(); ++w) {
      std::vector<Elem> shifted(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) shifted[i] = field.add(c[i], Elem(w));
      if (!members.count(shifted)) return false;
    }
  }
  return true;
}

GeneralBound general_upper_bound(std::uint64_t n, std::uint64_t q) {
  if (n < 1) throw std::invalid_argument("length n must be at least 1");
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  GeneralBound out;
  out.value = (double(q - 1) * double(n) - std::sqrt(double(n))) / double(q);
  // Largest k with q k <= A - sqrt(n), A = (q-1) n, i.e. A - q k >= 0 and
  // (A - q k)^2 >= n.
  const Wide a = Wide(q - 1) * n;
  auto fits = [&](std::int64_t k) {
    const Wide d = a - Wide(q) * k;
    return d >= 0 && d * d >= Wide(n);
  };
  std::int64_t k = std::int64_t(std::floor(out.value));
  while (!fits(k)) --k;
  while (fits(k + 1)) ++k;
  out.floor = k;
  return out;
}

std::int64_t recursion_lower_bound(std::uint64_t q, int m, int base_m, std::int64_t base_value) {
  if (base_m < 1 || base_m > m) throw std::invalid_argument("anchor must satisfy 1 <= m0 <= m");
  if ((m - base_m) % 2 != 0) {
    throw std::invalid_argument("anchor parity does not match m: " + std::to_string(base_m) +
                                " vs " + std::to_string(m));
  }
  const int u = (m - base_m) / 2;
  return std::int64_t(q - 1) * (ipow(q, m - 1) - ipow(q, m - 1 - u)) + ipow(q, u) * base_value;
}

FunctionTable lift_witness(const FunctionTable& v0) {
  const FieldTable& f = *v0.field;
  const std::uint64_t q = f.q();
  const std::uint64_t n = checked_power(q, v0.m);
  if (v0.values.size() != n) throw DimensionError("truth table length does not match q^m");
  FunctionTable u{v0.field, v0.m + 2, {}};
  u.values.resize(n * q * q);
  for (std::uint64_t t = 0; t < q; ++t) {
    for (std::uint64_t s = 0; s < q; ++s) {
      const Elem st = f.mul(Elem(s), Elem(t));
      const std::uint64_t base = (t * q + s) * n;
      for (std::uint64_t x = 0; x < n; ++x) u.values[base + x] = f.add(v0.values[x], st);
    }
  }
  return u;
}

std::uint64_t shifted_square_weight_sum(const std::vector<std::vector<Elem>>& code,
                                        const std::vector<Elem>& v, const FieldTable& field) {
  std::uint64_t sum = 0;
  for (const auto& c : code) {
    if (c.size() != v.size()) throw DimensionError("shift length does not match the code");
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < c.size(); ++i) w += field.add(v[i], c[i]) != 0;
    sum += w * w;
  }
  return sum;
}

std::uint64_t strength2_square_sum_times_q2(std::uint64_t n, std::uint64_t q, std::uint64_t size) {
  return n * (q - 1) * ((n - 1) * (q - 1) + q) * size;
}

std::vector<ExactAnchor> exact_anchors(std::uint64_t q) {
  std::vector<ExactAnchor> out{{q, 1, std::int64_t(q) - 2, "rho(1,1) = q - 2"}};
  if (q == 3) {
    out.push_back({3, 3, 16, "coset search over B_3^3 (witness at distance 16)"});
    out.push_back({3, 5, 156, "recursion from rho(1,3) = 16 meets the general bound"});
  }
  if (q == 2) {
    out.push_back({2, 5, 12, "literature value, not recomputed"});
    out.push_back({2, 7, 56, "literature value, not recomputed"});
  }
  return out;
}

BoundsReport bounds_report(std::uint64_t q, int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (!field_of_order(q)) throw std::invalid_argument("q must be a prime power");
  const std::uint64_t n = checked_power(q, m, std::uint64_t(1) << 62);

  BoundsReport rep;
  rep.q = q;
  rep.m = m;
  const auto gen = general_upper_bound(n, q);
  rep.upper = gen.floor;
  rep.upper_real = gen.value;
  rep.provenance.push_back({"general-bound", "upper", gen.floor, true, ""});

  rep.lower = rho2_formula(q, m);
  rep.lower_source = "rho2";
  rep.provenance.push_back({"rho2", "lower", rep.lower, true, ""});
  auto offer_lower = [&](BoundSource s) {
    if (s.value > rep.upper) {
      s.applicable = false;
      s.note = "exceeds the general upper bound";
    }
    rep.provenance.push_back(s);
    if (s.applicable && s.value > rep.lower) {
      rep.lower = s.value;
      rep.lower_source = s.source;
    }
  };

  if (q == 3 && m >= 3 && m % 2 == 1) {
    offer_lower({"min2", "lower", 2 * ipow(3, m - 1) - 2 * ipow(3, (m - 3) / 2), true, ""});
  }
  std::optional<ExactAnchor> here;
  for (const auto& a : exact_anchors(q)) {
    if (a.m == m) {
      here = a;
    } else if (a.m < m && (m - a.m) % 2 == 0) {
      offer_lower({"rec-recursion", "lower", recursion_lower_bound(q, m, a.m, a.value), true,
                   "from rho(1," + std::to_string(a.m) + ") = " + std::to_string(a.value)});
    }
  }
  if (m % 2 == 0) {
    // Even m: the rho2 value meets the general bound.
    here = ExactAnchor{q, m, rho2_formula(q, m), "even-m closed form"};
  }
  if (here) {
    rep.provenance.push_back({"exact", "exact", here->value, true, here->reference});
    if (here->value >= rep.lower) {
      rep.lower = here->value;
      rep.lower_source = "exact";
    }
    rep.upper = std::min(rep.upper, here->value);
  }
  if (rep.lower > rep.upper) {
    throw std::logic_error("inconsistent bounds for q=" + std::to_string(q) + ", m=" + std::to_string(m));
  }
  if (rep.lower == rep.upper) rep.exact = rep.lower;
  return rep;
}

}  // namespace grm
