#include "grm/finite_field.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace grm {
namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over F_p.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + (p - lead) * g[i]) % p;
    }
    trim(f);
  }
  return f;
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t t = f.size() - 1;
  if (t <= 1) return true;
  for (std::size_t d = 1; d <= t / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g(d + 1, 0);
      std::uint64_t rest = n;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = std::uint32_t(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t t) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < t; ++i) count *= p;
  // Lexicographic order with c_0 compared first: c_0 is the most significant
  // digit of the enumeration counter.
  for (std::uint64_t n = 0; n < count; ++n) {
    Poly f(t + 1, 0);
    std::uint64_t rest = n;
    for (std::uint32_t i = 0; i < t; ++i) {
      f[t - 1 - i] = std::uint32_t(rest % p);
      rest /= p;
    }
    f[t] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Elem FieldTable::add_digits(Elem a, Elem b) const {
  std::uint32_t out = 0, scale = 1;
  std::uint32_t x = a, y = b;
  for (std::uint32_t i = 0; i < spec_.t; ++i) {
    out += ((x % spec_.p + y % spec_.p) % spec_.p) * scale;
    x /= spec_.p;
    y /= spec_.p;
    scale *= spec_.p;
  }
  return Elem(out);
}

Elem FieldTable::mul_poly(Elem a, Elem b) const {
  const std::uint32_t p = spec_.p, t = spec_.t;
  Poly fa(t, 0), fb(t, 0);
  std::uint32_t x = a, y = b;
  for (std::uint32_t i = 0; i < t; ++i) {
    fa[i] = x % p;
    fb[i] = y % p;
    x /= p;
    y /= p;
  }
  Poly prod(2 * t, 0);
  for (std::uint32_t i = 0; i < t; ++i) {
    for (std::uint32_t j = 0; j < t; ++j) {
      prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p;
    }
  }
  const Poly r = poly_mod(prod, spec_.modulus, p);
  std::uint32_t out = 0, scale = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    out += r[i] * scale;
    scale *= p;
  }
  return Elem(out);
}

Elem FieldTable::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  return inv_[a];
}

Elem FieldTable::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = spec_.q - 1;
  return exp_[(std::uint64_t(log_[a]) * (e % order)) % order];
}

std::optional<Elem> FieldTable::sqrt(Elem a) const {
  const std::int32_t r = sqrt_[a];
  if (r < 0) return std::nullopt;
  return Elem(r);
}

bool FieldTable::is_irreducible_quadratic(Elem a, Elem c, Elem b) const {
  if (a == 0) {
    throw std::invalid_argument("is_irreducible_quadratic: leading coefficient is zero");
  }
  for (std::uint32_t x = 0; x < spec_.q; ++x) {
    const Elem e = Elem(x);
    if (add(add(mul(a, mul(e, e)), mul(c, e)), b) == 0) return false;
  }
  return true;
}

Elem FieldTable::from_integer(std::int64_t n) const {
  std::int64_t r = n % std::int64_t(spec_.p);
  if (r < 0) r += spec_.p;
  return Elem(r);
}

std::string FieldTable::name() const {
  if (spec_.t == 1) return std::to_string(spec_.p);
  return std::to_string(spec_.p) + "^" + std::to_string(spec_.t);
}

std::string FieldTable::check_axioms() const {
  const std::uint32_t q = spec_.q;
  std::ostringstream err;
  for (std::uint32_t a = 0; a < q; ++a) {
    const Elem ea = Elem(a);
    if (add(ea, 0) != ea) err << "0 is not additive identity at " << a;
    if (mul(ea, 1) != ea) err << "1 is not multiplicative identity at " << a;
    if (add(ea, neg(ea)) != 0) err << "neg fails at " << a;
    if (a != 0 && mul(ea, inv(ea)) != 1) err << "inv fails at " << a;
    if (pow(ea, q) != ea) err << "a^q != a at " << a;
    for (std::uint32_t b = 0; b < q; ++b) {
      const Elem eb = Elem(b);
      if (add(ea, eb) != add(eb, ea)) err << "add not commutative at " << a << "," << b;
      if (mul(ea, eb) != mul(eb, ea)) err << "mul not commutative at " << a << "," << b;
      for (std::uint32_t c = 0; c < q; ++c) {
        const Elem ec = Elem(c);
        if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) err << "add not associative";
        if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) err << "mul not associative";
        if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) err << "not distributive";
      }
      if (!err.str().empty()) return err.str();
    }
  }
  return err.str();
}

Field build_field(std::uint32_t p, std::uint32_t t) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (t == 0) throw std::invalid_argument("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < t; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(t) +
                                  " exceeds the 2^16 guard");
    }
  }

  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, t}); it != cache.end()) return it->second;

  std::shared_ptr<FieldTable> f(new FieldTable());
  f->spec_.p = p;
  f->spec_.t = t;
  f->spec_.q = std::uint32_t(q);
  f->spec_.modulus = smallest_irreducible(p, t);

  const std::uint32_t n = f->spec_.q;
  if (n <= 256) {
    f->add_table_.resize(std::size_t(n) * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        f->add_table_[std::size_t(a) * n + b] = f->add_digits(Elem(a), Elem(b));
      }
    }
  }
  f->neg_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t out = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < t; ++i) {
      out += ((p - x % p) % p) * scale;
      x /= p;
      scale *= p;
    }
    f->neg_[a] = Elem(out);
  }

  // Primitive element: smallest code whose order is q - 1.
  const std::uint64_t order = n - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](Elem g, std::uint64_t e) {
    Elem acc = 1, base = g;
    while (e) {
      if (e & 1) acc = f->mul_poly(acc, base);
      base = f->mul_poly(base, base);
      e >>= 1;
    }
    return acc;
  };
  Elem g = 1;
  if (n > 2) {
    for (std::uint32_t cand = 2; cand < n; ++cand) {
      bool ok = true;
      for (auto r : factors) {
        if (slow_pow(Elem(cand), order / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = Elem(cand);
        break;
      }
    }
  }
  f->primitive_ = g;
  f->exp_.resize(2 * order);
  f->log_.assign(n, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    f->exp_[i] = cur;
    f->exp_[i + order] = cur;
    f->log_[cur] = std::uint32_t(i);
    cur = f->mul_poly(cur, g);
  }

  f->inv_.assign(n, 0);
  for (std::uint32_t a = 1; a < n; ++a) {
    f->inv_[a] = f->exp_[(order - f->log_[a]) % order];
  }

  f->sqrt_.assign(n, -1);
  for (std::int32_t x = std::int32_t(n) - 1; x >= 0; --x) {
    f->sqrt_[f->mul(Elem(x), Elem(x))] = x;  // descending, so the smallest root wins
  }

  if (n <= 64) {
    if (auto err = f->check_axioms(); !err.empty()) {
      throw std::logic_error("field table for " + f->name() + " failed axiom check: " + err);
    }
  }
  cache.emplace(std::pair{p, t}, f);
  return f;
}

Field field_of_order(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t t = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++t;
  }
  if (rest != 1) {
    throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  }
  if (q > kMaxFieldOrder) {
    throw std::invalid_argument("field order " + std::to_string(q) + " exceeds the 2^16 guard");
  }
  return build_field(std::uint32_t(p), t);
}

Field parse_field(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("malformed field '" + std::string(text) + "'");
    }
    return v;
  };
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    const auto p = parse_int(text.substr(0, caret));
    const auto t = parse_int(text.substr(caret + 1));
    if (p > kMaxFieldOrder || t > 64) {
      throw std::invalid_argument("field order " + std::string(text) + " exceeds the 2^16 guard");
    }
    return build_field(std::uint32_t(p), std::uint32_t(t));
  }
  return field_of_order(parse_int(text));
}

}  // namespace grm
