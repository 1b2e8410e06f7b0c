#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grm/finite_field.hpp"
#include "grm/function_space.hpp"

namespace grm {

// R_q(r, m): functions of total degree at most r, length q^m.
struct CodeSpec {
  Field field;
  int r = 0;
  int m = 0;

  std::uint32_t q() const { return field->q(); }
  // Throws std::invalid_argument unless 0 <= r <= m(q-1) and m >= 0.
  void validate() const;
};

// Reduced monomials of degree <= r in listing order.
std::vector<Exponents> code_basis(const CodeSpec& spec);
int code_dimension(const CodeSpec& spec);

// Every codeword exactly once, as truth tables. The callback returns false to
// stop early. Throws SizeGuardError when q^dim > 10^8.
void for_each_codeword(const CodeSpec& spec,
                       const std::function<bool(const std::vector<Elem>&)>& visit);
std::vector<std::vector<Elem>> codewords(const CodeSpec& spec);

std::uint64_t distance_to_first_order(const FunctionTable& f);
// Direct minimum over all q^{m+1} affine functions, sharing no code with the
// histogram kernel. Throws SizeGuardError when q^{2m+1} > 10^9.
std::uint64_t distance_to_first_order_oracle(const FunctionTable& f);

struct RadiusResult {
  std::uint64_t radius = 0;
  std::uint64_t cosets = 0;
  ReducedPolynomial witness;  // a coset representative attaining the radius
};

// max over f in R_q(r, m) of d(f, R_q(1, m)); r = m(q-1) is the whole space.
// One representative per coset of R_q(1, m). Throws SizeGuardError when the
// coset count exceeds 10^9.
RadiusResult covering_radius_first_order_in(const CodeSpec& ambient);
// Number of cosets of R_q(1, m) in R_q(r, m), or nullopt beyond 2^63.
std::optional<std::uint64_t> coset_count(const CodeSpec& ambient);

// (q-1) q^{m-1} - q^{ceil(m/2) - 1}.
std::int64_t rho2_formula(std::uint64_t q, int m);

// Multiplicity with which every s-subset of coordinates realises every
// pattern of F_q^s, or nullopt. Throws std::invalid_argument on an empty code
// or s larger than the length.
std::optional<std::uint64_t> strength(const std::vector<std::vector<Elem>>& code, std::uint32_t q,
                                      int s);
bool self_complementary(const std::vector<std::vector<Elem>>& code, const FieldTable& field);

struct GeneralBound {
  double value = 0;         // (q-1) n / q - sqrt(n) / q
  std::int64_t floor = 0;   // exact, by integer arithmetic
};
GeneralBound general_upper_bound(std::uint64_t n, std::uint64_t q);

// (q-1)(q^{m-1} - q^{m-1-u}) + q^u rho(1, m - 2u), u = (m - base_m) / 2.
// Throws std::invalid_argument on a parity mismatch or base_m > m.
std::int64_t recursion_lower_bound(std::uint64_t q, int m, int base_m, std::int64_t base_value);

// u(x, s, t) = v0(x) + s t on F_q^{m+2}; s and t are the two new variables.
FunctionTable lift_witness(const FunctionTable& v0);

// sum_{u in v + C} |u|^2.
std::uint64_t shifted_square_weight_sum(const std::vector<std::vector<Elem>>& code,
                                        const std::vector<Elem>& v, const FieldTable& field);
// q^2 times n ((q-1)/q)((n-1)(q-1)/q + 1) |C|, the value a strength-2 code
// must give for q^2 sum |u|^2.
std::uint64_t strength2_square_sum_times_q2(std::uint64_t n, std::uint64_t q, std::uint64_t size);

struct ExactAnchor {
  std::uint64_t q = 0;
  int m = 0;
  std::int64_t value = 0;
  std::string reference;
};

// Stored exact values of rho(1, m) for fixed q, rho(1, 1) = q - 2 included.
std::vector<ExactAnchor> exact_anchors(std::uint64_t q);

struct BoundSource {
  std::string source;  // rho2 | min2 | rec-recursion | exact | general-bound
  std::string kind;    // lower | upper | exact
  std::int64_t value = 0;
  bool applicable = true;
  std::string note;
};

struct BoundsReport {
  std::uint64_t q = 0;
  int m = 0;
  std::int64_t lower = 0;
  std::string lower_source;
  std::int64_t upper = 0;
  double upper_real = 0;
  std::optional<std::int64_t> exact;
  std::vector<BoundSource> provenance;
};

BoundsReport bounds_report(std::uint64_t q, int m);

}  // namespace grm
