#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grm/finite_field.hpp"
#include "grm/function_space.hpp"

namespace grm {

// Walks f = fixed + sum_k d_k M_k over coefficient vectors d, digit k ranging
// over element codes [0, radix_k). Digit 0 moves fastest. The truth table is
// kept up to date with one monomial-table addition per changed digit.
class CosetOdometer {
 public:
  CosetOdometer(Field field, int m, std::vector<Exponents> monomials,
                std::vector<std::uint32_t> radices, const ReducedPolynomial& fixed);

  std::size_t size() const { return monomials_.size(); }
  const std::vector<Exponents>& monomials() const { return monomials_; }
  const std::vector<std::uint32_t>& radices() const { return radices_; }

  // Jumps to the given digits and rebuilds the table from scratch.
  void seek(std::span<const Elem> digits);

  // Increments the counter formed by digits [0, limit). Returns false when
  // those digits wrap back to all zero.
  bool advance(std::size_t limit);
  bool advance() { return advance(size()); }

  const std::vector<Elem>& values() const { return values_; }
  const std::vector<Elem>& digits() const { return digits_; }

  // Table of the current polynomial computed without the incremental state.
  std::vector<Elem> recompute() const;
  ReducedPolynomial polynomial() const;

 private:
  Field field_;
  int m_;
  std::uint64_t n_;
  std::vector<Exponents> monomials_;
  std::vector<std::uint32_t> radices_;
  ReducedPolynomial fixed_;
  std::vector<Elem> fixed_values_;
  std::vector<std::vector<Elem>> monomial_values_;
  // deltas_[k][c * n + x]: change of the table when digit k steps from c.
  std::vector<std::vector<Elem>> deltas_;
  std::vector<Elem> digits_;
  std::vector<Elem> values_;
};

}  // namespace grm
