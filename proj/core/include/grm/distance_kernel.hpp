#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grm/finite_field.hpp"
#include "grm/linalg.hpp"

namespace grm {

// Distance from a truth table to R_q(1, m):
//
//   d(f, R_q(1, m)) = q^m - max_lambda max_c #{x : f(x) - lambda(x) = c}
//
// over the q^m linear functionals lambda. The constant term of the nearest
// affine function is the fullest bucket of the histogram of f - lambda.
//
// Tables up to 64 points use one bit mask per (lambda, value) and popcounts;
// larger spaces fall back to explicit histograms.
class DistanceKernel {
 public:
  DistanceKernel(Field field, int m);

  std::uint64_t points() const { return n_; }
  int m() const { return m_; }
  const Field& field() const { return field_; }

  std::uint64_t distance(std::span<const Elem> values) const;

  // Whether d(f, R_q(1, m)) >= threshold. Stops at the first affine function
  // agreeing with f on more than q^m - threshold points.
  bool at_least(std::span<const Elem> values, std::uint64_t threshold) const;

  struct Nearest {
    std::uint64_t distance = 0;
    Vec linear;  // lambda coefficients a_1..a_m
    Elem constant = 0;
  };
  Nearest nearest(std::span<const Elem> values) const;

 private:
  // Largest agreement, stopping early once it exceeds `stop_above`.
  std::uint64_t max_agreement(std::span<const Elem> values, std::uint64_t stop_above,
                              std::uint64_t* best_lambda, Elem* best_constant) const;
  Elem lambda_value(std::uint64_t lambda, std::uint64_t x) const;

  Field field_;
  int m_;
  std::uint32_t q_;
  std::uint64_t n_;
  bool use_masks_;
  std::vector<std::uint64_t> masks_;  // [lambda * q + v] -> points where lambda(x) = v
  std::vector<Elem> lambda_table_;    // [lambda * n + x], empty when too large
  std::vector<Elem> sub_;             // [a * q + b] -> a - b
};

}  // namespace grm
