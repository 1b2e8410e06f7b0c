#include "grm/equivalence.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "grm/errors.hpp"

namespace grm {

namespace {

constexpr std::uint64_t kGroupGuard = 1'000'000'000;

std::optional<std::uint64_t> gl_order(std::uint64_t q, int m) {
  const std::uint64_t qm = checked_power(q, m);
  std::uint64_t order = 1;
  std::uint64_t qi = 1;
  for (int i = 0; i < m; ++i) {
    const std::uint64_t factor = qm - qi;
    if (order > kGroupGuard * 16 / factor) return std::nullopt;
    order *= factor;
    qi *= q;
  }
  return order;
}

std::string as_key(const std::vector<Elem>& v) {
  std::string out;
  out.reserve(2 * v.size());
  for (Elem e : v) {
    out.push_back(char(e & 0xff));
    out.push_back(char(e >> 8));
  }
  return out;
}

// Precomputed point maps for x -> A x + v over all of GA_m(F_q).
class AffineGroupTables {
 public:
  AffineGroupTables(const Field& field, int m) : field_(field), idx_(field->q(), m) {
    const std::uint64_t n = idx_.size();
    if (n > 4096) throw SizeGuardError("affine group tables limited to q^m <= 4096");
    const FieldTable& f = *field;
    std::vector<Vec> pts(n);
    for (std::uint64_t x = 0; x < n; ++x) pts[x] = idx_.point(x);
    add_.resize(n * n);
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) add_[a * n + b] = std::uint32_t(idx_.index(vec_add(f, pts[a], pts[b])));
    }
    group_ = general_linear_group(field, m);
    linear_.resize(group_.size() * n);
    for (std::size_t g = 0; g < group_.size(); ++g) {
      for (std::uint64_t x = 0; x < n; ++x) {
        linear_[g * n + x] = std::uint32_t(idx_.index(mat_vec(f, group_[g], pts[x])));
      }
    }
  }

  std::size_t linear_count() const { return group_.size(); }
  std::uint64_t points() const { return idx_.size(); }
  const Matrix& matrix(std::size_t g) const { return group_[g]; }
  Vec point(std::uint64_t x) const { return idx_.point(x); }

  // (sigma . f)(x) = f(A_g x + v).
  void act(std::size_t g, std::uint64_t v, const std::vector<Elem>& f, std::vector<Elem>& out) const {
    const std::uint64_t n = idx_.size();
    const std::uint32_t* lin = &linear_[g * n];
    for (std::uint64_t x = 0; x < n; ++x) out[x] = f[add_[std::uint64_t(lin[x]) * n + v]];
  }

 private:
  Field field_;
  PointIndexer idx_;
  std::vector<Matrix> group_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> linear_;
};

int clamped_degree(const FunctionTable& f) {
  const auto d = interpolate(f).degree();
  return d ? std::max(*d, 1) : 1;
}

}  // namespace

std::vector<Matrix> general_linear_group(const Field& field, int m) {
  const std::uint32_t q = field->q();
  const auto order = gl_order(q, m);
  if (!order || *order * checked_power(q, m) > kGroupGuard) {
    throw SizeGuardError("GL_" + std::to_string(m) + "(F_" + field->name() +
                         ") times translations exceeds 10^9 elements");
  }
  const std::uint64_t entries = std::uint64_t(m) * std::uint64_t(m);
  const std::uint64_t all = checked_power(q, int(entries), std::uint64_t(1) << 32);
  std::vector<Matrix> out;
  out.reserve(*order);
  Matrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (std::uint64_t code = 0; code < all; ++code) {
    std::uint64_t rest = code;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        a(std::size_t(i), std::size_t(j)) = Elem(rest % q);
        rest /= q;
      }
    }
    if (is_invertible(*field, a)) out.push_back(a);
  }
  return out;
}

std::vector<Elem> coset_key(const FieldTable& field, int m, const std::vector<Elem>& values) {
  const std::uint32_t q = field.q();
  const std::uint64_t n = values.size();
  const Elem h0 = values[0];
  Vec slope(static_cast<std::size_t>(m));
  std::uint64_t e = 1;
  for (int i = 0; i < m; ++i, e *= q) slope[std::size_t(i)] = field.sub(values[e], h0);
  std::vector<Elem> out(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    Elem v = field.sub(values[x], h0);
    std::uint64_t rest = x;
    for (int i = 0; i < m; ++i) {
      v = field.sub(v, field.mul(Elem(rest % q), slope[std::size_t(i)]));
      rest /= q;
    }
    out[x] = v;
  }
  return out;
}

std::optional<EquivalenceWitness> equivalence_witness(const FunctionTable& f, const FunctionTable& g) {
  if (f.field != g.field || f.m != g.m) throw DimensionError("functions live in different spaces");
  if (clamped_degree(f) != clamped_degree(g)) return std::nullopt;
  const FieldTable& field = *f.field;
  const AffineGroupTables tables(f.field, f.m);
  const auto target = coset_key(field, f.m, g.values);
  std::vector<Elem> moved(tables.points());
  for (std::size_t a = 0; a < tables.linear_count(); ++a) {
    for (std::uint64_t v = 0; v < tables.points(); ++v) {
      tables.act(a, v, f.values, moved);
      if (coset_key(field, f.m, moved) != target) continue;
      EquivalenceWitness w;
      w.sigma = AffineTransform{tables.matrix(a), tables.point(v)};
      w.affine = interpolate(subtract(g, FunctionTable{f.field, f.m, moved}));
      return w;
    }
  }
  return std::nullopt;
}

ClassPartition affine_classes(const std::vector<FunctionTable>& fs) {
  ClassPartition out;
  if (fs.empty()) return out;
  const Field& field = fs.front().field;
  const int m = fs.front().m;
  for (const auto& f : fs) {
    if (f.field != field || f.m != m) throw DimensionError("functions live in different spaces");
  }
  const AffineGroupTables tables(field, m);
  std::multimap<std::string, std::size_t> by_key;
  for (std::size_t i = 0; i < fs.size(); ++i) by_key.emplace(as_key(coset_key(*field, m, fs[i].values)), i);
  constexpr std::size_t kUnassigned = std::size_t(-1);
  out.class_of.assign(fs.size(), kUnassigned);
  std::vector<Elem> moved(tables.points());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (out.class_of[i] != kUnassigned) continue;
    const std::size_t cls = out.representatives.size();
    out.representatives.push_back(i);
    std::unordered_set<std::string> orbit;
    for (std::size_t a = 0; a < tables.linear_count(); ++a) {
      for (std::uint64_t v = 0; v < tables.points(); ++v) {
        tables.act(a, v, fs[i].values, moved);
        auto key = as_key(coset_key(*field, m, moved));
        if (!orbit.insert(key).second) continue;
        auto [lo, hi] = by_key.equal_range(key);
        for (auto it = lo; it != hi; ++it) out.class_of[it->second] = cls;
      }
    }
    out.orbit_sizes.push_back(orbit.size());
  }
  return out;
}

}  // namespace grm
