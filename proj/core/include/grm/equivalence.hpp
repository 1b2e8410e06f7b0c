#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grm/function_space.hpp"
#include "grm/linalg.hpp"

namespace grm {

// All invertible m x m matrices over F_q. Throws SizeGuardError when
// |GL_m(F_q)| q^m exceeds 10^9.
std::vector<Matrix> general_linear_group(const Field& field, int m);

// The representative of f + R_q(1, m) vanishing at 0 and at every e_i.
std::vector<Elem> coset_key(const FieldTable& field, int m, const std::vector<Elem>& values);

struct EquivalenceWitness {
  AffineTransform sigma;
  ReducedPolynomial affine;  // sigma.f + affine = g, degree <= 1
};

// Some (sigma, l) in GA_m(F_q) x R_q(1, m) with sigma.f + l = g, or nullopt.
// Exhaustive over GL_m then translations; returns at once when the degrees
// (clamped below at 1) differ.
std::optional<EquivalenceWitness> equivalence_witness(const FunctionTable& f, const FunctionTable& g);

struct ClassPartition {
  std::vector<std::size_t> representatives;  // indices into the input
  std::vector<std::size_t> class_of;         // class number per input
  std::vector<std::uint64_t> orbit_sizes;    // cosets in each class's orbit
};

// Partitions functions by GA_m(F_q) x R_q(1, m) equivalence via orbit
// enumeration of coset keys.
ClassPartition affine_classes(const std::vector<FunctionTable>& fs);

}  // namespace grm
