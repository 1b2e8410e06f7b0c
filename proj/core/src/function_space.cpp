#include "grm/function_space.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "grm/errors.hpp"

namespace grm {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::uint64_t checked_power(std::uint64_t q, int m, std::uint64_t guard) {
  if (m < 0) throw DimensionError("negative number of variables");
  std::uint64_t out = 1;
  for (int i = 0; i < m; ++i) {
    if (out > guard / q) {
      throw SizeGuardError(std::to_string(q) + "^" + std::to_string(m) + " exceeds guard " +
                           std::to_string(guard));
    }
    out *= q;
  }
  if (out > guard) {
    throw SizeGuardError(std::to_string(q) + "^" + std::to_string(m) + " exceeds guard " +
                         std::to_string(guard));
  }
  return out;
}

PointIndexer::PointIndexer(std::uint32_t q, int m) : q_(q), m_(m), size_(checked_power(q, m)) {}

std::uint64_t PointIndexer::index(std::span<const Elem> point) const {
  if (point.size() != std::size_t(m_)) {
    throw DimensionError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                         std::to_string(m_));
  }
  std::uint64_t idx = 0;
  for (int i = m_ - 1; i >= 0; --i) idx = idx * q_ + point[i];
  return idx;
}

Vec PointIndexer::point(std::uint64_t index) const {
  Vec x(m_);
  for (int i = 0; i < m_; ++i) {
    x[i] = Elem(index % q_);
    index /= q_;
  }
  return x;
}

std::uint64_t PointIndexer::index_of_exponents(const Exponents& e) const {
  std::uint64_t idx = 0;
  for (int i = m_ - 1; i >= 0; --i) idx = idx * q_ + e[i];
  return idx;
}

Exponents PointIndexer::exponents(std::uint64_t index) const {
  Exponents e(m_);
  for (int i = 0; i < m_; ++i) {
    e[i] = std::uint16_t(index % q_);
    index /= q_;
  }
  return e;
}

FunctionTable zero_table(Field field, int m) {
  const auto n = checked_power(field->q(), m);
  return FunctionTable{std::move(field), m, std::vector<Elem>(n, 0)};
}

// ---------------------------------------------------------------------------
// ReducedPolynomial

ReducedPolynomial ReducedPolynomial::constant(Field field, int m, Elem c) {
  ReducedPolynomial p(std::move(field), m);
  p.set(Exponents(m, 0), c);
  return p;
}

ReducedPolynomial ReducedPolynomial::monomial(Field field, int m, Exponents e, Elem c) {
  ReducedPolynomial p(std::move(field), m);
  p.set(e, c);
  return p;
}

void ReducedPolynomial::check(const Exponents& e) const {
  if (e.size() != std::size_t(m_)) throw DimensionError("monomial arity mismatch");
  for (auto x : e) {
    if (x >= field_->q()) throw std::invalid_argument("exponent exceeds q-1 in reduced polynomial");
  }
}

Elem ReducedPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Elem(0) : it->second;
}

void ReducedPolynomial::set(const Exponents& e, Elem c) {
  check(e);
  if (c == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = c;
  }
}

void ReducedPolynomial::add_to(const Exponents& e, Elem c) { set(e, field_->add(coefficient(e), c)); }

std::optional<int> ReducedPolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

ReducedPolynomial ReducedPolynomial::slice(int lo, int hi) const {
  ReducedPolynomial out(field_, m_);
  for (const auto& [e, c] : terms_) {
    const int d = total_degree(e);
    if (d >= lo && d <= hi) out.terms_.emplace(e, c);
  }
  return out;
}

ReducedPolynomial ReducedPolynomial::operator+(const ReducedPolynomial& o) const {
  if (o.m_ != m_ || o.field_ != field_) throw DimensionError("polynomial (q, m) mismatch");
  ReducedPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_to(e, c);
  return out;
}

ReducedPolynomial ReducedPolynomial::operator-(const ReducedPolynomial& o) const {
  return *this + o.scaled(field_->neg(1));
}

ReducedPolynomial ReducedPolynomial::scaled(Elem s) const {
  ReducedPolynomial out(field_, m_);
  if (s == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, field_->mul(s, c));
  return out;
}

ReducedPolynomial reduce(const RawPolynomial& raw) {
  const FieldTable& f = *raw.field;
  const std::uint32_t q = f.q();
  ReducedPolynomial out(raw.field, raw.m);
  for (const auto& term : raw.terms) {
    if (term.exponents.size() != std::size_t(raw.m)) {
      throw DimensionError("term has " + std::to_string(term.exponents.size()) +
                           " exponents, expected " + std::to_string(raw.m));
    }
    Elem c;
    if (term.coefficient < q) {
      c = Elem(term.coefficient);
    } else if (f.degree() == 1) {
      c = Elem(term.coefficient % f.p());
    } else {
      throw std::invalid_argument("coefficient " + std::to_string(term.coefficient) +
                                  " is not an element code of F_" + f.name());
    }
    Exponents e(raw.m);
    for (int i = 0; i < raw.m; ++i) {
      const std::uint32_t x = term.exponents[i];
      e[i] = std::uint16_t(x == 0 ? 0 : (x - 1) % (q - 1) + 1);
    }
    out.add_to(e, c);
  }
  return out;
}

Elem evaluate(const ReducedPolynomial& p, std::span<const Elem> point) {
  if (point.size() != std::size_t(p.m())) {
    throw DimensionError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                         std::to_string(p.m()));
  }
  const FieldTable& f = *p.field();
  Elem acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Elem term = c;
    for (std::size_t i = 0; i < e.size() && term != 0; ++i) term = f.mul(term, f.pow(point[i], e[i]));
    acc = f.add(acc, term);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Dense transforms

Interpolator::Interpolator(Field field) : field_(std::move(field)) {
  const FieldTable& f = *field_;
  const std::uint32_t q = f.q();
  vandermonde_ = Matrix(q, q);
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t e = 0; e < q; ++e) vandermonde_(x, e) = f.pow(Elem(x), e);
  }
  auto inv = inverse(f, vandermonde_);
  if (!inv) throw std::logic_error("evaluation matrix is singular");
  inverse_ = std::move(*inv);
}

std::vector<Elem> Interpolator::apply(int m, std::span<const Elem> in, const Matrix& mat) const {
  const FieldTable& f = *field_;
  const std::uint64_t q = f.q();
  const std::uint64_t n = checked_power(q, m);
  if (in.size() != n) throw DimensionError("dense vector length does not match q^m");
  std::vector<Elem> cur(in.begin(), in.end()), fiber(q);
  std::uint64_t stride = 1;
  for (int axis = 0; axis < m; ++axis) {
    for (std::uint64_t base = 0; base < n; ++base) {
      if ((base / stride) % q != 0) continue;
      for (std::uint64_t j = 0; j < q; ++j) fiber[j] = cur[base + j * stride];
      for (std::uint64_t k = 0; k < q; ++k) {
        Elem acc = 0;
        for (std::uint64_t j = 0; j < q; ++j) acc = f.add(acc, f.mul(mat(k, j), fiber[j]));
        cur[base + k * stride] = acc;
      }
    }
    stride *= q;
  }
  return cur;
}

std::vector<Elem> Interpolator::evaluate(int m, std::span<const Elem> coeffs) const {
  return apply(m, coeffs, vandermonde_);
}

std::vector<Elem> Interpolator::interpolate(int m, std::span<const Elem> values) const {
  return apply(m, values, inverse_);
}

std::vector<Elem> dense_coefficients(const ReducedPolynomial& p) {
  const PointIndexer idx(p.field()->q(), p.m());
  std::vector<Elem> out(idx.size(), 0);
  for (const auto& [e, c] : p.terms()) out[idx.index_of_exponents(e)] = c;
  return out;
}

ReducedPolynomial from_dense(Field field, int m, std::span<const Elem> coeffs) {
  const PointIndexer idx(field->q(), m);
  if (coeffs.size() != idx.size()) throw DimensionError("dense vector length does not match q^m");
  ReducedPolynomial out(field, m);
  for (std::uint64_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out.set(idx.exponents(i), coeffs[i]);
  }
  return out;
}

FunctionTable truth_table(const ReducedPolynomial& p) {
  const Interpolator interp(p.field());
  return FunctionTable{p.field(), p.m(), interp.evaluate(p.m(), dense_coefficients(p))};
}

ReducedPolynomial interpolate(const FunctionTable& f) {
  const Interpolator interp(f.field);
  return from_dense(f.field, f.m, interp.interpolate(f.m, f.values));
}

// ---------------------------------------------------------------------------
// Weights

namespace {

void check_same(const FunctionTable& f, const FunctionTable& g) {
  if (f.field != g.field || f.m != g.m || f.values.size() != g.values.size()) {
    throw DimensionError("function tables differ in (q, m)");
  }
}

}  // namespace

std::uint64_t weight(const FunctionTable& f) {
  return std::uint64_t(std::count_if(f.values.begin(), f.values.end(), [](Elem e) { return e != 0; }));
}

std::uint64_t distance(const FunctionTable& f, const FunctionTable& g) {
  check_same(f, g);
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i) d += f.values[i] != g.values[i];
  return d;
}

FunctionTable subtract(const FunctionTable& f, const FunctionTable& g) {
  check_same(f, g);
  FunctionTable out = f;
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = f.field->sub(f.values[i], g.values[i]);
  return out;
}

FunctionTable add(const FunctionTable& f, const FunctionTable& g) {
  check_same(f, g);
  FunctionTable out = f;
  for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = f.field->add(f.values[i], g.values[i]);
  return out;
}

FunctionTable scale(const FunctionTable& f, Elem s) {
  FunctionTable out = f;
  for (auto& v : out.values) v = f.field->mul(s, v);
  return out;
}

// ---------------------------------------------------------------------------
// Indicators

namespace {

// binom(n, k) mod p by Lucas' theorem.
std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  std::uint64_t result = 1;
  while (n || k) {
    const std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * (ni - i) % p;
      den = den * (i + 1) % p;
    }
    // den^{p-2} is its inverse mod p.
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return std::uint32_t(result);
}

}  // namespace

ReducedPolynomial indicator(Field field, std::span<const Elem> b) {
  const FieldTable& f = *field;
  const std::uint32_t q = f.q();
  const int m = int(b.size());
  // Univariate factors 1 - (x - b_i)^{q-1}, coefficients by power of x.
  std::vector<std::vector<Elem>> factors(m, std::vector<Elem>(q, 0));
  for (int i = 0; i < m; ++i) {
    const Elem nb = f.neg(b[i]);
    for (std::uint32_t k = 0; k <= q - 1; ++k) {
      const Elem binom = f.from_integer(binom_mod_p(q - 1, k, f.p()));
      factors[i][k] = f.neg(f.mul(binom, f.pow(nb, q - 1 - k)));
    }
    factors[i][0] = f.add(factors[i][0], 1);
  }
  const PointIndexer idx(q, m);
  std::vector<Elem> dense(idx.size());
  for (std::uint64_t j = 0; j < idx.size(); ++j) {
    const Exponents e = idx.exponents(j);
    Elem c = 1;
    for (int i = 0; i < m && c != 0; ++i) c = f.mul(c, factors[i][e[i]]);
    dense[j] = c;
  }
  return from_dense(field, m, dense);
}

// ---------------------------------------------------------------------------
// Affine group

Vec AffineTransform::apply(const FieldTable& f, std::span<const Elem> x) const {
  Vec y(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Elem acc = v[i];
    for (std::size_t k = 0; k < x.size(); ++k) acc = f.add(acc, f.mul(a(i, k), x[k]));
    y[i] = acc;
  }
  return y;
}

AffineTransform AffineTransform::identity(int m) { return {Matrix::identity(m), Vec(m, 0)}; }

AffineTransform AffineTransform::translation(Vec v) {
  const auto m = v.size();
  return {Matrix::identity(m), std::move(v)};
}

AffineTransform AffineTransform::linear(Matrix a) {
  const auto m = a.rows();
  return {std::move(a), Vec(m, 0)};
}

AffineTransform compose(const FieldTable& f, const AffineTransform& s, const AffineTransform& t) {
  return {mat_mul(f, t.a, s.a), vec_add(f, mat_vec(f, t.a, s.v), t.v)};
}

FunctionTable affine_action(const AffineTransform& sigma, const FunctionTable& f) {
  const FieldTable& field = *f.field;
  if (sigma.a.rows() != std::size_t(f.m) || sigma.a.cols() != std::size_t(f.m) ||
      sigma.v.size() != std::size_t(f.m)) {
    throw DimensionError("affine transform arity does not match function");
  }
  if (!is_invertible(field, sigma.a)) throw std::invalid_argument("affine transform is singular");
  const PointIndexer idx(field.q(), f.m);
  FunctionTable out = f;
  for (std::uint64_t i = 0; i < idx.size(); ++i) {
    const Vec x = idx.point(i);
    out.values[i] = f.values[idx.index(sigma.apply(field, x))];
  }
  return out;
}

ReducedPolynomial affine_action(const AffineTransform& sigma, const ReducedPolynomial& p) {
  return interpolate(affine_action(sigma, truth_table(p)));
}

// ---------------------------------------------------------------------------
// Monomial listings

bool listing_less(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

std::vector<Exponents> monomials(std::uint32_t q, int m, int lo, int hi) {
  const PointIndexer idx(q, m);
  std::vector<Exponents> out;
  for (std::uint64_t j = 0; j < idx.size(); ++j) {
    Exponents e = idx.exponents(j);
    const int d = total_degree(e);
    if (d >= lo && d <= hi) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), listing_less);
  return out;
}

}  // namespace grm
