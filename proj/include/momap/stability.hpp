#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momap/action.hpp"
#include "momap/cone.hpp"
#include "momap/rational.hpp"
#include "momap/solver.hpp"

namespace momap {

enum class StabilityClass { Stable, PolystableNotStable, SemistableNotPolystable, Unstable };
enum class VerdictMethod { ExactCone, TestSet, Certificate };

inline const char* to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::Stable: return "Stable";
    case StabilityClass::PolystableNotStable: return "PolystableNotStable";
    case StabilityClass::SemistableNotPolystable: return "SemistableNotPolystable";
    case StabilityClass::Unstable: return "Unstable";
  }
  return "?";
}
inline const char* to_string(VerdictMethod m) {
  switch (m) {
    case VerdictMethod::ExactCone: return "ExactCone";
    case VerdictMethod::TestSet: return "TestSet";
    case VerdictMethod::Certificate: return "Certificate";
  }
  return "?";
}

inline bool is_polystable(StabilityClass c) {
  return c == StabilityClass::Stable || c == StabilityClass::PolystableNotStable;
}
inline bool is_semistable(StabilityClass c) { return c != StabilityClass::Unstable; }

struct StabilityVerdict {
  StabilityClass cls = StabilityClass::Stable;
  VerdictMethod method = VerdictMethod::ExactCone;
  std::optional<RationalVector> witness;       // exact direction (torus)
  std::optional<CMatrix> witness_matrix;       // numeric direction
  std::optional<WeightValue> witness_weight;
  std::vector<RationalVector> stabilizer_basis;
  std::string diagnostics;
};

inline void require_weights(const ActionDescriptor& a) {
  if (!a.has_weights()) throw Error(ErrorCode::NonRationalWeights, "torus classification needs an exact weight list");
  if (a.kind() != ActionKind::Linear) throw Error(ErrorCode::InvalidArgument, "exact torus classification is for linear actions");
}

/// Indices j with |v_j| > drop_tol·‖v‖.
inline std::vector<int> weight_support(const CVector& v, double drop_tol = 1e-12) {
  std::vector<int> s;
  const double n = v.norm();
  for (int j = 0; j < v.size(); ++j)
    if (n > 0.0 && std::abs(v(j)) > drop_tol * n) s.push_back(j);
  return s;
}

/// Exact classification of v under a torus with rational weights.
inline StabilityVerdict torus_classify(const ActionDescriptor& a, const CVector& v, double drop_tol = 1e-12) {
  require_weights(a);
  if (v.size() != a.dim_V()) throw Error(ErrorCode::InvalidArgument, "point has wrong dimension");
  const int k = a.group().dim();
  const auto& w = a.weights();
  const auto& tau = a.tau_exact();
  const auto supp = weight_support(v, drop_tol);

  auto base = [&]() {
    RationalCone c(k);
    for (int j : supp) c.add_le(w[j]);
    return c;
  };

  StabilityVerdict out;
  out.method = VerdictMethod::ExactCone;
  {
    std::vector<RationalVector> rows;
    for (int j : supp) rows.push_back(w[j]);
    out.stabilizer_basis = rational_nullspace(rows, k);
  }

  RationalCone unstable = base();
  unstable.add_lt(tau);
  if (auto p = unstable.find_point()) {
    out.cls = StabilityClass::Unstable;
    out.witness = primitive(*p);
    out.diagnostics = "weight <tau, xi> < 0 on a finite-weight direction";
    return out;
  }

  RationalCone stable = base();
  stable.add_le(tau);
  auto nz = stable.find_nonzero_point();
  if (!nz) {
    out.cls = StabilityClass::Stable;
    return out;
  }

  // Semistable from here. Polystable iff every zero-weight direction with
  // finite weight lies in the stabilizer {χ_j(ξ) = 0, j ∈ supp}.
  for (int j : supp) {
    RationalCone c = base();
    c.add_eq(tau);
    c.add_lt(w[j]);
    if (auto p = c.find_point()) {
      out.cls = StabilityClass::SemistableNotPolystable;
      out.witness = primitive(*p);
      out.diagnostics = "zero-weight direction outside the stabilizer";
      return out;
    }
  }
  out.cls = StabilityClass::PolystableNotStable;
  out.witness = primitive(*nz);
  out.diagnostics = "nontrivial stabilizer";
  return out;
}

/// Sign-pattern cells of the weight arrangement inside {⟨τ,ξ⟩ ≤ 0, ξ ≠ 0},
/// one rational point per nonempty cell. The maximal weight at any v is
/// constant on each cell, and each C_A ∩ {⟨τ,ξ⟩ ≤ 0} is a union of cells.
inline std::vector<RationalVector> torus_test_set(const ActionDescriptor& a) {
  require_weights(a);
  const int k = a.group().dim();
  const auto& w = a.weights();
  const auto& tau = a.tau_exact();
  std::vector<RationalVector> out;
  // Last level of the recursion fixes the sign of ⟨τ,ξ⟩ (negative or zero).
  const int m = static_cast<int>(w.size());
  auto pattern = [&](auto&& self, int j, RationalCone cone, bool any_strict) -> void {
    if (!cone.find_point()) return;
    if (j == m) {
      for (int t : {-1, 0}) {
        RationalCone c = cone;
        if (t < 0) c.add_lt(tau);
        else c.add_eq(tau);
        std::optional<RationalVector> p = (any_strict || t < 0) ? c.find_point() : c.find_nonzero_point();
        if (p) out.push_back(primitive(*p));
      }
      return;
    }
    RationalCone neg = cone, zero = cone, pos = cone;
    neg.add_lt(w[j]);
    zero.add_eq(w[j]);
    pos.add_gt(w[j]);
    self(self, j + 1, neg, true);
    self(self, j + 1, zero, any_strict);
    self(self, j + 1, pos, true);
  };
  pattern(pattern, 0, RationalCone(k), false);
  return out;
}

inline CMatrix torus_direction(const ActionDescriptor& a, const RationalVector& xi) {
  return a.group().from_coordinates(to_dense(xi));
}

/// Classification by evaluating maximal_weight on a finite test set.
inline StabilityVerdict test_set_classify(const ActionDescriptor& a, const std::vector<RationalVector>& phi,
                                          const CVector& v, double zero_tol = 1e-9) {
  require_weights(a);
  const PointState x = a.point(v);
  StabilityVerdict out;
  out.method = VerdictMethod::TestSet;
  bool all_positive = true;
  std::optional<RationalVector> zero_dir, bad_zero;
  for (const auto& xi : phi) {
    const WeightValue lw = maximal_weight(a, torus_direction(a, xi), x);
    if (lw.infinite || lw.value > zero_tol) continue;
    all_positive = false;
    if (lw.value < -zero_tol) {
      out.cls = StabilityClass::Unstable;
      out.witness = xi;
      out.witness_weight = lw;
      return out;
    }
    RationalVector minus = xi;
    for (auto& q : minus) q = -q;
    if (!zero_dir) zero_dir = xi;
    if (maximal_weight(a, torus_direction(a, minus), x).infinite && !bad_zero) bad_zero = xi;
  }
  if (all_positive) {
    out.cls = StabilityClass::Stable;
  } else if (bad_zero) {
    out.cls = StabilityClass::SemistableNotPolystable;
    out.witness = bad_zero;
  } else {
    out.cls = StabilityClass::PolystableNotStable;
    out.witness = zero_dir;
  }
  return out;
}

/// Classification from the continuity method's certificate.
inline StabilityVerdict general_classify(const ActionDescriptor& a, const PointState& x, const SolveOptions& opt = {}) {
  const SolveOutcome r = solve_moment_zero(a, x, opt);
  StabilityVerdict out;
  out.method = VerdictMethod::Certificate;
  if (r.inconclusive()) throw Error(ErrorCode::Inconclusive, std::get<Inconclusive>(r.result).reason);
  if (r.polystable()) {
    out.cls = r.stabilizer_dim == 0 ? StabilityClass::Stable : StabilityClass::PolystableNotStable;
    out.diagnostics = "moment-map zero reached, residual " + std::to_string(r.poly().mu_residual);
    return out;
  }
  const auto& c = r.unst();
  out.witness_matrix = c.sigma;
  out.witness_weight = c.weight_at_sigma;
  if (c.weight_at_sigma.value < -opt.weight_tol) {
    out.cls = StabilityClass::Unstable;
  } else {
    out.cls = StabilityClass::SemistableNotPolystable;
    out.diagnostics = "boundary semistable: |weight at sigma| <= " + std::to_string(opt.weight_tol);
  }
  return out;
}

}  // namespace momap
