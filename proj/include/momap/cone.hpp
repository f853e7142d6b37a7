#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "momap/rational.hpp"

namespace momap {

/// c·ξ ≤ 0, or c·ξ < 0 when strict.
struct LinearConstraint {
  RationalVector c;
  bool strict = false;
};

/// Homogeneous polyhedral cone {ξ ∈ ℚⁿ : c·ξ ≤ 0 or < 0} decided exactly by
/// Fourier–Motzkin elimination.
class RationalCone {
 public:
  explicit RationalCone(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::vector<LinearConstraint>& constraints() const { return rows_; }

  RationalCone& add_le(RationalVector c) { return add(std::move(c), false); }
  RationalCone& add_lt(RationalVector c) { return add(std::move(c), true); }
  RationalCone& add_ge(RationalVector c) { return add(negate(std::move(c)), false); }
  RationalCone& add_gt(RationalVector c) { return add(negate(std::move(c)), true); }
  RationalCone& add_eq(const RationalVector& c) {
    add_le(c);
    return add_ge(c);
  }

  bool contains(const RationalVector& x) const {
    for (const auto& r : rows_) {
      const Rational v = dot(r.c, x);
      if (v > 0 || (r.strict && v == 0)) return false;
    }
    return true;
  }

  /// Some point of the cone (the origin if it qualifies), or nothing.
  std::optional<RationalVector> find_point() const { return solve(rows_); }

  /// A nonzero point of the cone, or nothing if the cone is {0} or empty.
  std::optional<RationalVector> find_nonzero_point() const {
    if (auto p = solve(rows_)) {
      bool nz = false;
      for (const auto& q : *p) nz = nz || q != 0;
      if (nz) return p;
    }
    for (int a = 0; a < dim_; ++a)
      for (int sgn : {1, -1}) {
        auto rows = rows_;
        RationalVector e(dim_, Rational(0));
        e[a] = Rational(-sgn);  // −sgn·ξ_a < 0
        rows.push_back({e, true});
        if (auto p = solve(rows)) return p;
      }
    return std::nullopt;
  }

  bool is_empty() const { return !find_point().has_value(); }

 private:
  static RationalVector negate(RationalVector c) {
    for (auto& q : c) q = -q;
    return c;
  }

  RationalCone& add(RationalVector c, bool strict) {
    if (static_cast<int>(c.size()) != dim_) throw Error(ErrorCode::InvalidArgument, "constraint has wrong length");
    rows_.push_back({std::move(c), strict});
    return *this;
  }

  // Scales to a primitive integer row, drops 0 ≤ 0, merges duplicates.
  // Returns false if 0 < 0 appears.
  static bool tidy(std::vector<LinearConstraint>& rows) {
    std::map<std::vector<BigInt>, bool> seen;
    std::vector<LinearConstraint> out;
    for (auto& r : rows) {
      auto p = primitive(r.c);
      bool zero = true;
      for (const auto& q : p) zero = zero && q == 0;
      if (zero) {
        if (r.strict) return false;
        continue;
      }
      std::vector<BigInt> key;
      for (const auto& q : p) key.push_back(boost::multiprecision::numerator(q));
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(key, r.strict);
        out.push_back({std::move(p), r.strict});
      } else {
        it->second = it->second || r.strict;
      }
    }
    for (auto& r : out) {
      std::vector<BigInt> key;
      for (const auto& q : r.c) key.push_back(boost::multiprecision::numerator(q));
      r.strict = seen[key];
    }
    rows = std::move(out);
    return true;
  }

  std::optional<RationalVector> solve(std::vector<LinearConstraint> rows) const {
    std::vector<std::vector<LinearConstraint>> levels;
    if (!tidy(rows)) return std::nullopt;
    levels.push_back(rows);
    for (int k = 0; k < dim_; ++k) {
      const auto& cur = levels.back();
      std::vector<LinearConstraint> up, low, next;
      for (const auto& r : cur) {
        if (r.c[k] > 0) up.push_back(r);
        else if (r.c[k] < 0) low.push_back(r);
        else next.push_back(r);
      }
      for (const auto& u : up)
        for (const auto& l : low) {
          RationalVector c(dim_);
          const Rational a = u.c[k], b = -l.c[k];
          for (int j = 0; j < dim_; ++j) c[j] = b * u.c[j] + a * l.c[j];
          c[k] = 0;
          next.push_back({std::move(c), u.strict || l.strict});
        }
      if (!tidy(next)) return std::nullopt;
      levels.push_back(std::move(next));
    }
    RationalVector x(dim_, Rational(0));
    for (int k = dim_ - 1; k >= 0; --k) {
      std::optional<Rational> lo, hi;
      bool lo_strict = false, hi_strict = false;
      for (const auto& r : levels[k]) {
        if (r.c[k] == 0) continue;
        Rational rest = 0;
        for (int j = k + 1; j < dim_; ++j) rest += r.c[j] * x[j];
        const Rational bound = -rest / r.c[k];
        if (r.c[k] > 0) {
          if (!hi || bound < *hi || (bound == *hi && r.strict)) {
            hi_strict = (hi && bound == *hi) ? (hi_strict || r.strict) : r.strict;
            hi = bound;
          }
        } else {
          if (!lo || bound > *lo || (bound == *lo && r.strict)) {
            lo_strict = (lo && bound == *lo) ? (lo_strict || r.strict) : r.strict;
            lo = bound;
          }
        }
      }
      x[k] = pick(lo, lo_strict, hi, hi_strict);
    }
    return x;
  }

  static Rational pick(const std::optional<Rational>& lo, bool lo_strict, const std::optional<Rational>& hi,
                       bool hi_strict) {
    auto ok = [&](const Rational& v) {
      if (lo && (v < *lo || (lo_strict && v == *lo))) return false;
      if (hi && (v > *hi || (hi_strict && v == *hi))) return false;
      return true;
    };
    if (ok(Rational(0))) return 0;
    if (lo && hi) return *lo == *hi ? *lo : (*lo + *hi) / 2;
    if (lo) return *lo + 1;
    return *hi - 1;
  }

  int dim_;
  std::vector<LinearConstraint> rows_;
};

/// Basis of {ξ : r·ξ = 0 for all rows r}, exact.
inline std::vector<RationalVector> rational_nullspace(std::vector<RationalVector> rows, int n) {
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& q : rows[r]) q *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (int j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][f];
    basis.push_back(primitive(v));
  }
  return basis;
}

}  // namespace momap
