#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "grm/finite_field.hpp"
#include "grm/linalg.hpp"

// The ambient space B_m^q of all maps F_q^m -> F_q, as truth tables and as
// reduced polynomials (per-variable exponents at most q - 1).
namespace grm {

// Per-variable exponents of a monomial, variable 1 first.
using Exponents = std::vector<std::uint16_t>;

int total_degree(const Exponents& e);

// q^m, throwing SizeGuardError when it exceeds `guard`.
std::uint64_t checked_power(std::uint64_t q, int m, std::uint64_t guard = std::uint64_t(1) << 40);

// Bijection [0, q^m) <-> F_q^m. The index is the little-endian base-q
// expansion of the coordinates' element codes: coordinate 1 is the least
// significant digit. Exponent tuples use the same encoding for dense
// coefficient vectors.
class PointIndexer {
 public:
  PointIndexer(std::uint32_t q, int m);

  std::uint32_t q() const { return q_; }
  int m() const { return m_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t index(std::span<const Elem> point) const;
  Vec point(std::uint64_t index) const;
  std::uint64_t index_of_exponents(const Exponents& e) const;
  Exponents exponents(std::uint64_t index) const;

 private:
  std::uint32_t q_;
  int m_;
  std::uint64_t size_;
};

struct FunctionTable {
  Field field;
  int m = 0;
  std::vector<Elem> values;  // length q^m, PointIndexer order

  std::uint32_t q() const { return field->q(); }
  friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
    return a.field == b.field && a.m == b.m && a.values == b.values;
  }
};

FunctionTable zero_table(Field field, int m);

class ReducedPolynomial {
 public:
  using Terms = std::map<Exponents, Elem>;

  ReducedPolynomial() = default;
  ReducedPolynomial(Field field, int m) : field_(std::move(field)), m_(m) {}

  static ReducedPolynomial constant(Field field, int m, Elem c);
  static ReducedPolynomial monomial(Field field, int m, Exponents e, Elem c = 1);

  const Field& field() const { return field_; }
  int m() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Elem coefficient(const Exponents& e) const;
  // Sets the coefficient of an already reduced monomial (exponents <= q-1);
  // zero removes the term.
  void set(const Exponents& e, Elem c);
  void add_to(const Exponents& e, Elem c);

  // Maximum total degree over stored terms; nullopt for the zero polynomial
  // (degree minus infinity).
  std::optional<int> degree() const;

  // Part of total degree in [lo, hi].
  ReducedPolynomial slice(int lo, int hi) const;

  ReducedPolynomial operator+(const ReducedPolynomial& o) const;
  ReducedPolynomial operator-(const ReducedPolynomial& o) const;
  ReducedPolynomial scaled(Elem s) const;

  friend bool operator==(const ReducedPolynomial& a, const ReducedPolynomial& b) {
    return a.field_ == b.field_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Exponents& e) const;

  Field field_;
  int m_ = 0;
  Terms terms_;
};

// Polynomial with arbitrary exponents and possibly repeated monomials, before
// folding by x^q = x.
struct RawTerm {
  // An element code when < q. Larger integers are accepted over prime fields
  // only and denote the residue mod p.
  std::uint64_t coefficient = 0;
  std::vector<std::uint32_t> exponents;
};

struct RawPolynomial {
  Field field;
  int m = 0;
  std::vector<RawTerm> terms;
};

// Folds exponents by x^q = x until all are <= q-1, sums repeated monomials and
// drops zero coefficients. Throws std::invalid_argument for coefficients that
// are not element codes over an extension field, DimensionError for wrong
// arity.
ReducedPolynomial reduce(const RawPolynomial& raw);

Elem evaluate(const ReducedPolynomial& p, std::span<const Elem> point);

FunctionTable truth_table(const ReducedPolynomial& p);
ReducedPolynomial interpolate(const FunctionTable& f);

// Dense coefficient vectors indexed by PointIndexer::index_of_exponents.
std::vector<Elem> dense_coefficients(const ReducedPolynomial& p);
ReducedPolynomial from_dense(Field field, int m, std::span<const Elem> coeffs);

// Tensorized univariate transforms between dense coefficients and values.
// Holds the q x q evaluation matrix and its inverse for one field.
class Interpolator {
 public:
  explicit Interpolator(Field field);

  std::vector<Elem> evaluate(int m, std::span<const Elem> coeffs) const;
  std::vector<Elem> interpolate(int m, std::span<const Elem> values) const;

 private:
  std::vector<Elem> apply(int m, std::span<const Elem> in, const Matrix& mat) const;

  Field field_;
  Matrix vandermonde_;
  Matrix inverse_;
};

std::uint64_t weight(const FunctionTable& f);
std::uint64_t distance(const FunctionTable& f, const FunctionTable& g);
FunctionTable subtract(const FunctionTable& f, const FunctionTable& g);
FunctionTable add(const FunctionTable& f, const FunctionTable& g);
FunctionTable scale(const FunctionTable& f, Elem s);

// 1_b = prod_i (1 - (x_i - b_i)^{q-1}).
ReducedPolynomial indicator(Field field, std::span<const Elem> b);

// x -> A x + v with A invertible. Acting on functions by
// (sigma . f)(x) = f(A x + v).
struct AffineTransform {
  Matrix a;
  Vec v;

  int m() const { return int(v.size()); }
  Vec apply(const FieldTable& f, std::span<const Elem> x) const;

  static AffineTransform identity(int m);
  static AffineTransform translation(Vec v);
  static AffineTransform linear(Matrix a);

  friend bool operator==(const AffineTransform&, const AffineTransform&) = default;
};

// compose(s, t) acts as s then t: act(compose(s, t), f) == act(s, act(t, f)).
// As a point map it is x -> t(s(x)).
AffineTransform compose(const FieldTable& f, const AffineTransform& s, const AffineTransform& t);

// Throws std::invalid_argument for singular A and DimensionError on arity.
FunctionTable affine_action(const AffineTransform& sigma, const FunctionTable& f);
ReducedPolynomial affine_action(const AffineTransform& sigma, const ReducedPolynomial& p);

// Reduced monomials with total degree in [lo, hi], sorted by degree and then
// lexicographically by exponent tuple with variable 1 most significant. This
// is the coefficient order of the coset-search listings.
std::vector<Exponents> monomials(std::uint32_t q, int m, int lo, int hi);
bool listing_less(const Exponents& a, const Exponents& b);

}  // namespace grm
