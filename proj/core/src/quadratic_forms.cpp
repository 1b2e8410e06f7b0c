#include "grm/quadratic_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "grm/errors.hpp"
#include "grm/polynomial_text.hpp"

namespace grm {

// ---------------------------------------------------------------------------
// QuadraticForm

QuadraticForm::QuadraticForm(Field field, int n)
    : field_(std::move(field)), n_(n), c_(std::size_t(coefficient_count(n)), 0) {
  if (n < 0) throw DimensionError("negative number of variables");
}

std::size_t QuadraticForm::slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n_) throw DimensionError("quadratic form index out of range");
  // Row-major upper triangle: rows before i contribute n + (n-1) + ... terms.
  return std::size_t(i * n_ - i * (i - 1) / 2 + (j - i));
}

Elem QuadraticForm::coeff(int i, int j) const { return c_[slot(i, j)]; }
void QuadraticForm::set(int i, int j, Elem c) { c_[slot(i, j)] = c; }

QuadraticForm QuadraticForm::from_raw(const RawPolynomial& raw) {
  QuadraticForm q(raw.field, raw.m);
  const FieldTable& f = *raw.field;
  for (const auto& t : raw.terms) {
    std::vector<int> vars;
    for (int i = 0; i < raw.m; ++i) {
      for (std::uint32_t k = 0; k < t.exponents[i]; ++k) vars.push_back(i);
    }
    if (vars.size() != 2) {
      throw std::invalid_argument("quadratic form terms must have degree exactly 2");
    }
    Elem c;
    if (t.coefficient < f.q()) {
      c = Elem(t.coefficient);
    } else if (f.degree() == 1) {
      c = Elem(t.coefficient % f.p());
    } else {
      throw std::invalid_argument("coefficient is not an element code");
    }
    q.set(vars[0], vars[1], f.add(q.coeff(vars[0], vars[1]), c));
  }
  return q;
}

QuadraticForm QuadraticForm::parse(std::string_view text, Field field, int n) {
  if (text == "0") return QuadraticForm(std::move(field), n);
  return from_raw(parse_raw_polynomial(text, std::move(field), n));
}

QuadraticForm QuadraticForm::from_index(Field field, int n, std::uint64_t index) {
  QuadraticForm q(field, n);
  const std::uint32_t base = field->q();
  for (auto& c : q.c_) {
    c = Elem(index % base);
    index /= base;
  }
  return q;
}

Elem QuadraticForm::evaluate(std::span<const Elem> x) const {
  if (x.size() != std::size_t(n_)) throw DimensionError("point arity mismatch");
  const FieldTable& f = *field_;
  Elem acc = 0;
  std::size_t k = 0;
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) {
      k += std::size_t(n_ - i);
      continue;
    }
    Elem row = 0;
    for (int j = i; j < n_; ++j, ++k) row = f.add(row, f.mul(c_[k], x[j]));
    acc = f.add(acc, f.mul(x[i], row));
  }
  return acc;
}

Matrix QuadraticForm::gram() const {
  const FieldTable& f = *field_;
  Matrix g(n_, n_);
  for (int i = 0; i < n_; ++i) {
    g(i, i) = f.add(coeff(i, i), coeff(i, i));
    for (int j = i + 1; j < n_; ++j) {
      g(i, j) = coeff(i, j);
      g(j, i) = coeff(i, j);
    }
  }
  return g;
}

Elem QuadraticForm::polar(std::span<const Elem> x, std::span<const Elem> y) const {
  const FieldTable& f = *field_;
  const Matrix g = gram();
  Elem acc = 0;
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) acc = f.add(acc, f.mul(x[i], f.mul(g(i, j), y[j])));
  }
  return acc;
}

QuadraticForm QuadraticForm::substitute(const Matrix& s) const {
  if (s.rows() != std::size_t(n_) || s.cols() != std::size_t(n_)) {
    throw DimensionError("substitution matrix shape mismatch");
  }
  const FieldTable& f = *field_;
  QuadraticForm out(field_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      const Elem c = coeff(i, j);
      if (c == 0) continue;
      for (int k = 0; k < n_; ++k) {
        if (s(i, k) == 0) continue;
        for (int l = 0; l < n_; ++l) {
          const Elem t = f.mul(c, f.mul(s(i, k), s(j, l)));
          if (t != 0) out.set(k, l, f.add(out.coeff(k, l), t));
        }
      }
    }
  }
  return out;
}

ReducedPolynomial QuadraticForm::to_polynomial() const {
  RawPolynomial raw{field_, n_, {}};
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      const Elem c = coeff(i, j);
      if (c == 0) continue;
      RawTerm t;
      t.coefficient = c;
      t.exponents.assign(n_, 0);
      t.exponents[i] += 1;
      t.exponents[j] += 1;
      raw.terms.push_back(std::move(t));
    }
  }
  return reduce(raw);
}

std::string QuadraticForm::to_text() const {
  auto var = [&](int i) { return n_ <= 3 ? std::string(1, char('x' + i)) : "x" + std::to_string(i + 1); };
  // Listing order: by exponent tuple, variable 1 most significant.
  std::vector<std::pair<Exponents, std::string>> terms;
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      const Elem c = coeff(i, j);
      if (c == 0) continue;
      Exponents e(n_, 0);
      e[i] += 1;
      e[j] += 1;
      std::string mono = i == j ? var(i) + "^2" : var(i) + "*" + var(j);
      terms.emplace_back(e, c == 1 ? mono : std::to_string(c) + "*" + mono);
    }
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [e, s] : terms) out += (out.empty() ? "" : "+") + s;
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Bilinear data and classification

BilinearData bilinear_data(const QuadraticForm& q) {
  const FieldTable& f = *q.field();
  BilinearData out;
  out.gram = q.gram();
  out.kernel = kernel(f, out.gram);

  std::vector<Elem> values;
  std::size_t pivot = out.kernel.size();
  for (std::size_t i = 0; i < out.kernel.size(); ++i) {
    values.push_back(q.evaluate(out.kernel[i]));
    if (values.back() != 0 && pivot == out.kernel.size()) pivot = i;
  }
  if (pivot == out.kernel.size()) {
    out.v_basis = out.kernel;
  } else {
    // Q is additive on the radical only in characteristic 2; there
    // Q(n_i + l n_j) = Q(n_i) + l^2 Q(n_j) and l = sqrt(Q(n_i)/Q(n_j)).
    if (!f.characteristic_two()) {
      throw std::logic_error("nonzero Q on the bilinear radical in odd characteristic");
    }
    for (std::size_t i = 0; i < out.kernel.size(); ++i) {
      if (i == pivot) continue;
      const auto l = f.sqrt(f.div(values[i], values[pivot]));
      out.v_basis.push_back(vec_add(f, out.kernel[i], vec_scale(f, *l, out.kernel[pivot])));
    }
    out.anisotropic_kernel_vector = out.kernel[pivot];
  }
  out.v = int(out.v_basis.size());

  // V must be closed under sums of its spanning vectors.
  for (std::size_t i = 0; i < out.v_basis.size(); ++i) {
    for (std::size_t j = i; j < out.v_basis.size(); ++j) {
      if (q.evaluate(vec_add(f, out.v_basis[i], out.v_basis[j])) != 0) {
        throw std::logic_error("V is not a subspace");
      }
    }
  }
  return out;
}

namespace {

struct Splitter {
  const QuadraticForm& q;
  const FieldTable& f;

  Elem phi(const Vec& x, const Vec& y) const { return q.polar(x, y); }

  // First nonzero isotropic vector in span(basis), scanning coefficient
  // vectors in little-endian order. Every form in three or more variables has
  // one.
  std::optional<Vec> isotropic_in_span(const std::vector<Vec>& basis) const {
    const PointIndexer idx(f.q(), int(basis.size()));
    for (std::uint64_t k = 1; k < idx.size(); ++k) {
      const Vec t = idx.point(k);
      Vec x(q.n(), 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (t[i] != 0) x = vec_add(f, x, vec_scale(f, t[i], basis[i]));
      }
      if (!is_zero(x) && q.evaluate(x) == 0) return x;
    }
    return std::nullopt;
  }

  // Completes the isotropic x to a hyperbolic pair (x, y') using a partner from
  // `candidates`: phi(x, y') = 1 and Q(y') = 0.
  Vec hyperbolic_partner(const Vec& x, const std::vector<Vec>& candidates) const {
    for (const auto& y : candidates) {
      const Elem p = phi(x, y);
      if (p == 0) continue;
      const Vec ys = vec_scale(f, f.inv(p), y);
      return vec_add(f, ys, vec_scale(f, f.neg(q.evaluate(ys)), x));
    }
    throw std::logic_error("isotropic vector has no bilinear partner");
  }
};

std::vector<Vec> independent_subset(const FieldTable& f, const std::vector<Vec>& vs, std::size_t dim) {
  std::vector<Vec> out;
  for (const auto& v : vs) {
    auto trial = out;
    trial.push_back(v);
    if (rank(f, Matrix::from_columns(trial, dim)) == trial.size()) out = std::move(trial);
  }
  return out;
}

}  // namespace

QuadraticForm CanonicalForm::to_form(Field field) const {
  QuadraticForm q(std::move(field), n);
  for (int i = 0; i < hyperbolic_pairs; ++i) q.set(2 * i, 2 * i + 1, 1);
  const int k = 2 * hyperbolic_pairs;
  if (tail == TailKind::kSquare) {
    q.set(k, k, a);
  } else if (tail == TailKind::kAnisotropic) {
    q.set(k, k, a);
    q.set(k + 1, k + 1, b);
    q.set(k, k + 1, c);
  }
  return q;
}

QuadricClassification classify(const QuadraticForm& q) {
  const FieldTable& f = *q.field();
  const int n = q.n();
  const BilinearData bd = bilinear_data(q);
  const Splitter sp{q, f};

  // Complement S of the radical: standard vectors extending the kernel basis.
  std::vector<Vec> s_basis;
  {
    std::vector<Vec> acc = bd.kernel;
    for (int k = 0; k < n; ++k) {
      Vec e(n, 0);
      e[k] = 1;
      acc.push_back(e);
      if (rank(f, Matrix::from_columns(acc, n)) == acc.size()) {
        s_basis.push_back(e);
      } else {
        acc.pop_back();
      }
    }
  }

  std::vector<Vec> columns;
  QuadricClassification out;
  out.canonical.n = n;
  auto add_pair = [&](const Vec& x, const Vec& y) {
    columns.push_back(x);
    columns.push_back(y);
    ++out.canonical.hyperbolic_pairs;
  };

  std::vector<Vec> w = s_basis;
  const auto& n1 = bd.anisotropic_kernel_vector;
  while (w.size() >= 3) {
    const auto x = sp.isotropic_in_span({w[0], w[1], w[2]});
    if (!x) throw std::logic_error("no isotropic vector in a 3-dimensional subspace");
    const Vec y = sp.hyperbolic_partner(*x, w);
    add_pair(*x, y);
    std::vector<Vec> projected;
    for (const auto& v : w) {
      Vec p = vec_add(f, v, vec_scale(f, f.neg(sp.phi(v, y)), *x));
      p = vec_add(f, p, vec_scale(f, f.neg(sp.phi(v, *x)), y));
      projected.push_back(std::move(p));
    }
    w = independent_subset(f, projected, n);
    if (w.size() + 2 != projected.size()) throw std::logic_error("hyperbolic split lost a dimension");
  }

  if (w.size() == 2 && n1) {
    // Characteristic 2, plane plus a radical vector with Q != 0: the
    // three-dimensional part is isotropic outside the radical.
    const auto x = sp.isotropic_in_span({w[0], w[1], *n1});
    if (!x) throw std::logic_error("no isotropic vector in a 3-dimensional subspace");
    add_pair(*x, sp.hyperbolic_partner(*x, w));
    w.clear();
  }

  if (w.size() == 2) {
    if (const auto x = sp.isotropic_in_span(w)) {
      add_pair(*x, sp.hyperbolic_partner(*x, w));
    } else {
      out.canonical.tail = TailKind::kAnisotropic;
      out.canonical.a = q.evaluate(w[0]);
      out.canonical.b = q.evaluate(w[1]);
      out.canonical.c = sp.phi(w[0], w[1]);
      columns.push_back(w[0]);
      columns.push_back(w[1]);
    }
  } else if (w.size() == 1) {
    out.canonical.tail = TailKind::kSquare;
    out.canonical.a = q.evaluate(w[0]);
    columns.push_back(w[0]);
  }
  if (n1) {
    if (out.canonical.tail != TailKind::kNone) throw std::logic_error("two tails in canonical form");
    out.canonical.tail = TailKind::kSquare;
    out.canonical.a = q.evaluate(*n1);
    columns.push_back(*n1);
  }
  for (const auto& v : bd.v_basis) columns.push_back(v);

  out.rank = n - bd.v;
  const int tail_dim = out.canonical.tail == TailKind::kNone     ? 0
                       : out.canonical.tail == TailKind::kSquare ? 1
                                                                 : 2;
  if (2 * out.canonical.hyperbolic_pairs + tail_dim != out.rank || int(columns.size()) != n) {
    throw std::logic_error("canonical form dimension mismatch");
  }
  if (out.rank % 2 == 1) {
    out.omega = 1;
  } else {
    out.omega = out.canonical.tail == TailKind::kAnisotropic ? 0 : 2;
  }
  out.transform = Matrix::from_columns(columns, n);
  if (!is_invertible(f, out.transform)) throw std::logic_error("canonical transform is singular");
  if (q.substitute(out.transform) != out.canonical.to_form(q.field())) {
    throw std::logic_error("canonical transform does not reproduce the canonical form");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Zero counts

namespace {

std::int64_t ipow(std::int64_t q, int e) {
  if (e < 0) throw std::logic_error("negative exponent in integer power");
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= q;
  return out;
}

}  // namespace

std::uint64_t zero_count_formula(std::uint64_t q, int n, int rank, int omega) {
  if (n == 0) return 1;
  const std::int64_t qq = std::int64_t(q);
  std::int64_t count = ipow(qq, n - 1);
  if (omega != 1) count += (omega - 1) * (qq - 1) * ipow(qq, n - rank / 2 - 1);
  return std::uint64_t(count);
}

std::uint64_t zero_count(const QuadraticForm& q) {
  const auto c = classify(q);
  return zero_count_formula(q.field()->q(), q.n(), c.rank, c.omega);
}

std::uint64_t zero_count_oracle(const QuadraticForm& q) {
  const PointIndexer idx(q.field()->q(), q.n());
  if (idx.size() > 100'000'000) {
    throw SizeGuardError("zero_count_oracle: q^n = " + std::to_string(idx.size()) + " exceeds 10^8");
  }
  std::uint64_t zeros = 0;
  Vec x(q.n(), 0);
  for (std::uint64_t i = 0; i < idx.size(); ++i) {
    zeros += q.evaluate(x) == 0;
    for (int k = 0; k < q.n(); ++k) {
      if (++x[k] < q.field()->q()) break;
      x[k] = 0;
    }
  }
  return zeros;
}

// ---------------------------------------------------------------------------
// Affine quadrics

ReducedPolynomial AffineQuadric::to_polynomial() const {
  const int m = q0.n();
  ReducedPolynomial p = q0.to_polynomial();
  for (int i = 0; i < m; ++i) {
    Exponents e(m, 0);
    e[i] = 1;
    p.add_to(e, alpha[i]);
  }
  p.add_to(Exponents(m, 0), beta);
  return p;
}

FunctionTable AffineQuadric::table() const {
  const FieldTable& f = *q0.field();
  const PointIndexer idx(f.q(), m());
  FunctionTable out{q0.field(), m(), std::vector<Elem>(idx.size())};
  for (std::uint64_t i = 0; i < idx.size(); ++i) {
    const Vec x = idx.point(i);
    Elem v = f.add(q0.evaluate(x), beta);
    for (int k = 0; k < m(); ++k) v = f.add(v, f.mul(alpha[k], x[k]));
    out.values[i] = v;
  }
  return out;
}

QuadraticForm homogenize(const AffineQuadric& aq) {
  const int m = aq.m();
  if (aq.alpha.size() != std::size_t(m)) throw DimensionError("linear part arity mismatch");
  QuadraticForm out(aq.q0.field(), m + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) out.set(i, j, aq.q0.coeff(i, j));
    out.set(i, m, aq.alpha[i]);
  }
  out.set(m, m, aq.beta);
  return out;
}

WeightBreakdown affine_quadric_weight(const AffineQuadric& aq) {
  const std::uint64_t q = aq.q0.field()->q();
  const int m = aq.m();
  const auto c0 = classify(aq.q0);
  const auto big = classify(homogenize(aq));
  WeightBreakdown out;
  out.r = c0.rank;
  out.omega_q0 = c0.omega;
  out.big_r = big.rank;
  out.omega_q = big.omega;
  out.zeros_at_infinity = zero_count_formula(q, m, c0.rank, c0.omega);
  out.projective_zeros = zero_count_formula(q, m + 1, big.rank, big.omega);
  const std::uint64_t diff = out.projective_zeros - out.zeros_at_infinity;
  if (out.projective_zeros < out.zeros_at_infinity || diff % (q - 1) != 0) {
    throw std::logic_error("homogenized zero counts are not compatible");
  }
  out.affine_zeros = diff / (q - 1);
  out.weight = std::uint64_t(ipow(std::int64_t(q), m)) - out.affine_zeros;
  return out;
}

std::uint64_t quadratic_distance_formula(std::uint64_t q, int m, int r, int omega) {
  if (r == 0) return 0;
  const std::int64_t qq = std::int64_t(q);
  const std::int64_t base = (qq - 1) * ipow(qq, m - 1);
  std::int64_t d;
  if (r % 2 == 1) {
    d = base - ipow(qq, m - (r + 1) / 2);
  } else if (omega == 2) {
    d = base + ipow(qq, m - r / 2 - 1) - ipow(qq, m - r / 2);
  } else {
    d = base - ipow(qq, m - r / 2 - 1);
  }
  return std::uint64_t(d);
}

std::uint64_t distance_quadratic_to_affine(const QuadraticForm& q0) {
  const auto c = classify(q0);
  return quadratic_distance_formula(q0.field()->q(), q0.n(), c.rank, c.omega);
}

}  // namespace grm
