#include "grm/distance_kernel.hpp"

#include <bit>

#include "grm/errors.hpp"
#include "grm/function_space.hpp"

namespace grm {

namespace {
constexpr std::uint64_t kMaxLambdaTable = std::uint64_t(1) << 24;
}

DistanceKernel::DistanceKernel(Field field, int m)
    : field_(std::move(field)), m_(m), q_(field_->q()), n_(checked_power(q_, m, std::uint64_t(1) << 32)) {
  const FieldTable& f = *field_;
  use_masks_ = n_ <= 64;
  sub_.resize(std::size_t(q_) * q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) sub_[a * q_ + b] = f.sub(Elem(a), Elem(b));
  }
  const bool tabulate = n_ * n_ <= kMaxLambdaTable;
  if (!use_masks_ && !tabulate) return;

  const PointIndexer idx(q_, m);
  std::vector<Vec> pts(n_);
  for (std::uint64_t x = 0; x < n_; ++x) pts[x] = idx.point(x);
  if (use_masks_) masks_.assign(n_ * q_, 0);
  if (tabulate) lambda_table_.resize(n_ * n_);
  for (std::uint64_t l = 0; l < n_; ++l) {
    const Vec& a = pts[l];
    for (std::uint64_t x = 0; x < n_; ++x) {
      Elem v = 0;
      for (int i = 0; i < m; ++i) v = f.add(v, f.mul(a[i], pts[x][i]));
      if (use_masks_) masks_[l * q_ + v] |= std::uint64_t(1) << x;
      if (tabulate) lambda_table_[l * n_ + x] = v;
    }
  }
}

Elem DistanceKernel::lambda_value(std::uint64_t lambda, std::uint64_t x) const {
  if (!lambda_table_.empty()) return lambda_table_[lambda * n_ + x];
  const FieldTable& f = *field_;
  Elem v = 0;
  for (int i = 0; i < m_; ++i) {
    v = f.add(v, f.mul(Elem(lambda % q_), Elem(x % q_)));
    lambda /= q_;
    x /= q_;
  }
  return v;
}

std::uint64_t DistanceKernel::max_agreement(std::span<const Elem> values, std::uint64_t stop_above,
                                            std::uint64_t* best_lambda, Elem* best_constant) const {
  if (values.size() != n_) throw DimensionError("truth table length does not match q^m");
  std::uint64_t best = 0;
  if (use_masks_) {
    // At most 64 points means q <= 64.
    std::uint64_t planes[64] = {};
    for (std::uint64_t x = 0; x < n_; ++x) planes[values[x]] |= std::uint64_t(1) << x;
    for (std::uint64_t l = 0; l < n_; ++l) {
      const std::uint64_t* lm = &masks_[l * q_];
      // Agreement with lambda + c counts points where f(x) = v and lambda(x) = v - c.
      std::uint64_t rest = n_;
      for (std::uint32_t c = 0; c < q_; ++c) {
        std::uint64_t agree;
        if (c + 1 == q_) {
          agree = rest;
        } else {
          agree = 0;
          for (std::uint32_t v = 0; v < q_; ++v) {
            agree += std::uint64_t(std::popcount(planes[v] & lm[sub_[v * q_ + c]]));
          }
          rest -= agree;
        }
        if (agree > best) {
          best = agree;
          if (best_lambda) *best_lambda = l;
          if (best_constant) *best_constant = Elem(c);
          if (best > stop_above) return best;
        }
      }
    }
    return best;
  }
  std::vector<std::uint64_t> hist(q_);
  for (std::uint64_t l = 0; l < n_; ++l) {
    std::fill(hist.begin(), hist.end(), 0);
    for (std::uint64_t x = 0; x < n_; ++x) ++hist[sub_[values[x] * q_ + lambda_value(l, x)]];
    for (std::uint32_t c = 0; c < q_; ++c) {
      if (hist[c] > best) {
        best = hist[c];
        if (best_lambda) *best_lambda = l;
        if (best_constant) *best_constant = Elem(c);
        if (best > stop_above) return best;
      }
    }
  }
  return best;
}

std::uint64_t DistanceKernel::distance(std::span<const Elem> values) const {
  return n_ - max_agreement(values, n_, nullptr, nullptr);
}

bool DistanceKernel::at_least(std::span<const Elem> values, std::uint64_t threshold) const {
  if (threshold == 0) return true;
  if (threshold > n_) return false;
  return max_agreement(values, n_ - threshold, nullptr, nullptr) <= n_ - threshold;
}

DistanceKernel::Nearest DistanceKernel::nearest(std::span<const Elem> values) const {
  std::uint64_t lambda = 0;
  Elem c = 0;
  const auto agree = max_agreement(values, n_, &lambda, &c);
  return {n_ - agree, PointIndexer(q_, m_).point(lambda), c};
}

}  // namespace grm
