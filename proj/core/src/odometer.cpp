#include "grm/odometer.hpp"

#include <stdexcept>

#include "grm/errors.hpp"

namespace grm {

CosetOdometer::CosetOdometer(Field field, int m, std::vector<Exponents> monomials,
                             std::vector<std::uint32_t> radices, const ReducedPolynomial& fixed)
    : field_(std::move(field)),
      m_(m),
      n_(checked_power(field_->q(), m, std::uint64_t(1) << 26)),
      monomials_(std::move(monomials)),
      radices_(std::move(radices)),
      fixed_(fixed) {
  if (radices_.size() != monomials_.size()) {
    throw std::invalid_argument("one radix per monomial is required");
  }
  if (fixed_.field() && (fixed_.field() != field_ || fixed_.m() != m)) {
    throw DimensionError("fixed part lives in a different space");
  }
  const FieldTable& f = *field_;
  fixed_values_ = fixed_.field() ? truth_table(fixed_).values : std::vector<Elem>(n_, 0);
  monomial_values_.reserve(monomials_.size());
  deltas_.reserve(monomials_.size());
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    if (radices_[k] < 1 || radices_[k] > f.q()) throw std::invalid_argument("radix out of range");
    if (int(monomials_[k].size()) != m) throw DimensionError("monomial arity does not match m");
    monomial_values_.push_back(truth_table(ReducedPolynomial::monomial(field_, m, monomials_[k])).values);
    const auto& mv = monomial_values_.back();
    std::vector<Elem> d(std::size_t(radices_[k]) * n_);
    for (std::uint32_t c = 0; c < radices_[k]; ++c) {
      const Elem next = Elem((c + 1) % radices_[k]);
      const Elem step = f.sub(next, Elem(c));
      for (std::uint64_t x = 0; x < n_; ++x) d[c * n_ + x] = f.mul(step, mv[x]);
    }
    deltas_.push_back(std::move(d));
  }
  digits_.assign(monomials_.size(), 0);
  values_ = fixed_values_;
}

void CosetOdometer::seek(std::span<const Elem> digits) {
  if (digits.size() != digits_.size()) throw DimensionError("digit vector has the wrong length");
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] >= radices_[k]) throw std::invalid_argument("digit exceeds its radix");
  }
  digits_.assign(digits.begin(), digits.end());
  values_ = recompute();
}

bool CosetOdometer::advance(std::size_t limit) {
  const FieldTable& f = *field_;
  for (std::size_t k = 0; k < limit; ++k) {
    const Elem c = digits_[k];
    const Elem* d = &deltas_[k][std::size_t(c) * n_];
    for (std::uint64_t x = 0; x < n_; ++x) values_[x] = f.add(values_[x], d[x]);
    if (std::uint32_t(c) + 1 < radices_[k]) {
      digits_[k] = Elem(c + 1);
      return true;
    }
    digits_[k] = 0;
  }
  return false;
}

std::vector<Elem> CosetOdometer::recompute() const {
  const FieldTable& f = *field_;
  std::vector<Elem> out = fixed_values_;
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    if (digits_[k] == 0) continue;
    const auto& mv = monomial_values_[k];
    for (std::uint64_t x = 0; x < n_; ++x) out[x] = f.add(out[x], f.mul(digits_[k], mv[x]));
  }
  return out;
}

ReducedPolynomial CosetOdometer::polynomial() const {
  ReducedPolynomial p = fixed_.field() ? fixed_ : ReducedPolynomial(field_, m_);
  for (std::size_t k = 0; k < digits_.size(); ++k) p.add_to(monomials_[k], digits_[k]);
  return p;
}

}  // namespace grm
