#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grm/finite_field.hpp"
#include "grm/function_space.hpp"
#include "grm/linalg.hpp"

namespace grm {

// Q(x) = sum_{i <= j} c_ij x_i x_j over F_q^n.
class QuadraticForm {
 public:
  QuadraticForm() = default;
  QuadraticForm(Field field, int n);

  // Every term must have total (unfolded) degree exactly 2, so x1^2 over F_2
  // is the square term rather than the linear function x1.
  static QuadraticForm from_raw(const RawPolynomial& raw);
  static QuadraticForm parse(std::string_view text, Field field, int n);
  // Forms enumerated by packing the n(n+1)/2 coefficients (i <= j, row-major)
  // as little-endian base-q digits of `index`.
  static QuadraticForm from_index(Field field, int n, std::uint64_t index);
  static int coefficient_count(int n) { return n * (n + 1) / 2; }

  const Field& field() const { return field_; }
  int n() const { return n_; }
  Elem coeff(int i, int j) const;
  void set(int i, int j, Elem c);
  const Vec& packed() const { return c_; }

  Elem evaluate(std::span<const Elem> x) const;
  // phi(x, y) = Q(x + y) - Q(x) - Q(y).
  Elem polar(std::span<const Elem> x, std::span<const Elem> y) const;
  Matrix gram() const;

  // Q(S x) as a form in the same number of variables.
  QuadraticForm substitute(const Matrix& s) const;

  ReducedPolynomial to_polynomial() const;
  // Unfolded text (keeps x^2 over F_2).
  std::string to_text() const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  std::size_t slot(int i, int j) const;

  Field field_;
  int n_ = 0;
  Vec c_;
};

struct BilinearData {
  Matrix gram;
  std::vector<Vec> kernel;   // basis of Ker psi_phi
  std::vector<Vec> v_basis;  // basis of V = {x in Ker psi_phi : Q(x) = 0}
  // Kernel vector with Q != 0 completing v_basis to a kernel basis
  // (characteristic 2 only).
  std::optional<Vec> anisotropic_kernel_vector;
  int v = 0;
};

BilinearData bilinear_data(const QuadraticForm& q);

enum class TailKind { kNone, kSquare, kAnisotropic };

// sum_{i=1}^{pairs} x_{2i-1} x_{2i} followed by the tail on the next
// variables: a x^2 (kSquare) or a x^2 + b y^2 + c x y with a x^2 + c x + b
// irreducible (kAnisotropic).
struct CanonicalForm {
  int n = 0;
  int hyperbolic_pairs = 0;
  TailKind tail = TailKind::kNone;
  Elem a = 0, b = 0, c = 0;

  QuadraticForm to_form(Field field) const;
};

struct QuadricClassification {
  int rank = 0;
  int omega = 2;  // 1 odd rank, 2 hyperbolic, 0 anisotropic tail
  Matrix transform;  // columns are the canonical basis: Q(T x) = canonical(x)
  CanonicalForm canonical;
};

// Rank n - dim V and type omega, with a basis realising the canonical form.
// The zero form has rank 0 and omega 2.
QuadricClassification classify(const QuadraticForm& q);

// q^{n-1} + (omega - 1)(q - 1) q^{n - R/2 - 1}.
std::uint64_t zero_count_formula(std::uint64_t q, int n, int rank, int omega);
std::uint64_t zero_count(const QuadraticForm& q);
// Enumerates all q^n points; throws SizeGuardError above 10^8.
std::uint64_t zero_count_oracle(const QuadraticForm& q);

// q0 + sum alpha_i x_i + beta.
struct AffineQuadric {
  QuadraticForm q0;
  Vec alpha;
  Elem beta = 0;

  int m() const { return q0.n(); }
  FunctionTable table() const;
  ReducedPolynomial to_polynomial() const;
};

// Q(x, z) = q0(x) + sum alpha_i x_i z + beta z^2 on F_q^{m+1}, z last.
QuadraticForm homogenize(const AffineQuadric& aq);

struct WeightBreakdown {
  int r = 0;        // rank of q0
  int omega_q0 = 2;
  int big_r = 0;    // rank of the homogenized form
  int omega_q = 2;
  std::uint64_t zeros_at_infinity = 0;  // zeros of q0 on F_q^m
  std::uint64_t projective_zeros = 0;   // zeros of Q on F_q^{m+1}
  std::uint64_t affine_zeros = 0;       // (projective - at infinity) / (q - 1)
  std::uint64_t weight = 0;             // q^m - affine_zeros
};

WeightBreakdown affine_quadric_weight(const AffineQuadric& aq);

// d(q0, R_q(1, m)) from the rank and type of q0.
std::uint64_t distance_quadratic_to_affine(const QuadraticForm& q0);
std::uint64_t quadratic_distance_formula(std::uint64_t q, int m, int r, int omega);

}  // namespace grm
