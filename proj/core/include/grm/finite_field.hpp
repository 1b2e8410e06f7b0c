#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grm {

// Element of F_q encoded by its integer code in [0, q). The base-p digits of
// the code are the coordinates in the polynomial basis 1, α, α², ... of the
// field's defining polynomial, least significant digit first. Code 0 is the
// additive identity and code 1 the multiplicative identity.
using Elem = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t t = 0;
  std::uint32_t q = 0;
  // Monic defining polynomial over F_p, coefficients low degree first
  // (size t + 1, last entry 1).
  std::vector<std::uint32_t> modulus;
};

// Arithmetic tables for F_q, q = p^t ≤ 2^16. Immutable once built.
//
// Multiplication uses log/antilog tables over a primitive element; addition
// uses a full table for q ≤ 256 and digit-wise base-p addition above that.
class FieldTable {
 public:
  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t q() const { return spec_.q; }
  std::uint32_t degree() const { return spec_.t; }
  bool characteristic_two() const { return spec_.p == 2; }

  Elem add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[std::size_t(a) * spec_.q + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  // Multiplicative inverse; inv(0) throws std::domain_error.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  // A square root of a when one exists. In characteristic 2 this is always the
  // unique root a^{q/2}; in odd characteristic the smallest-code root, or
  // nullopt for non-squares.
  std::optional<Elem> sqrt(Elem a) const;

  // Whether a·x² + c·x + b has no root in F_q. Throws std::invalid_argument
  // when a = 0.
  bool is_irreducible_quadratic(Elem a, Elem c, Elem b) const;

  // Image of the integer n under Z → F_q (n·1).
  Elem from_integer(std::int64_t n) const;

  // Smallest-code generator of F_q^*.
  Elem primitive() const { return primitive_; }

  // "p^t" for extension fields, "p" for prime fields.
  std::string name() const;

  // Exhaustive check of the field axioms on the tables. Returns an empty
  // string on success, else a description of the first violation.
  std::string check_axioms() const;

 private:
  friend std::shared_ptr<const FieldTable> build_field(std::uint32_t p,
                                                       std::uint32_t t);
  FieldTable() = default;
  Elem add_digits(Elem a, Elem b) const;
  Elem mul_poly(Elem a, Elem b) const;

  FieldSpec spec_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> exp_;  // length 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> sqrt_;  // -1 when no root
  Elem primitive_ = 1;
};

using Field = std::shared_ptr<const FieldTable>;

bool is_prime(std::uint64_t n);

// Builds F_{p^t} over the lexicographically smallest monic irreducible
// polynomial of degree t (coefficients compared low degree first). Results
// are cached, so repeated calls return the same table. Throws
// std::invalid_argument for non-prime p, t = 0, or p^t > 2^16.
Field build_field(std::uint32_t p, std::uint32_t t);

// Field of order q given as a prime power. Throws std::invalid_argument when
// q is not a prime power or exceeds the guard.
Field field_of_order(std::uint64_t q);

// Parses "9", "3^2" or "3" into a field.
Field parse_field(std::string_view text);

}  // namespace grm
