#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "momap/core.hpp"
#include "momap/group.hpp"
#include "momap/rational.hpp"
#include "momap/spectral.hpp"

namespace momap {

enum class ActionKind { Linear, Projective };

inline const char* to_string(ActionKind k) { return k == ActionKind::Linear ? "linear" : "projective"; }

/// Value of a maximal-weight function: a real number or +∞.
struct WeightValue {
  bool infinite = false;
  double value = 0.0;

  static WeightValue plus_infinity() { return {true, 0.0}; }
  static WeightValue finite(double x) { return {false, x}; }

  friend WeightValue operator+(const WeightValue& a, const WeightValue& b) {
    if (a.infinite || b.infinite) return plus_infinity();
    return finite(a.value + b.value);
  }
  friend bool operator<(const WeightValue& a, const WeightValue& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator==(const WeightValue& a, const WeightValue& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  std::string str() const { return infinite ? std::string("+inf") : std::to_string(value); }
};

/// A point of V (linear) or a unit representative of a point of ℙ(V).
struct PointState {
  CVector v;
};

/// A linear or projective Hamiltonian action of a matrix group on V.
///
/// The representation is stored as ρ_*(b_a) for the group's orthonormal
/// Hermitian basis b_a; ρ_* is extended complex-linearly to 𝔤. Torus
/// actions built from weights additionally keep the exact weight table
/// (covectors written in the same orthonormal coordinates) for the
/// rational cone tests.
class ActionDescriptor {
 public:
  static ActionDescriptor from_matrices(GroupDescriptor g, ActionKind kind, std::vector<CMatrix> rep,
                                        RVector tau_coords = RVector()) {
    return ActionDescriptor(std::move(g), kind, std::move(rep), std::move(tau_coords));
  }

  /// The defining representation V = ℂ^{ambient_dim}.
  static ActionDescriptor standard(GroupDescriptor g, ActionKind kind, RVector tau_coords = RVector()) {
    std::vector<CMatrix> rep = g.hermitian_basis();
    return ActionDescriptor(std::move(g), kind, std::move(rep), std::move(tau_coords));
  }

  /// Torus T(k) acting diagonally on ℂ^{weights.size()}; weights[j] is the
  /// covector χ_j. tau is given in the same coordinates (Linear only).
  static ActionDescriptor from_weights(int rank, ActionKind kind, std::vector<RationalVector> weights,
                                       RationalVector tau = {}) {
    GroupDescriptor g = GroupDescriptor::torus(rank);
    const int dimv = static_cast<int>(weights.size());
    for (const auto& w : weights)
      if (static_cast<int>(w.size()) != rank)
        throw Error(ErrorCode::InvalidArgument, "weight covector length differs from torus rank");
    if (tau.empty()) tau.assign(rank, Rational(0));
    if (static_cast<int>(tau.size()) != rank) throw Error(ErrorCode::InvalidArgument, "tau length differs from torus rank");
    std::vector<CMatrix> rep;
    for (int a = 0; a < rank; ++a) {
      CMatrix r = CMatrix::Zero(dimv, dimv);
      for (int j = 0; j < dimv; ++j) r(j, j) = to_double(weights[j][a]);
      rep.push_back(r);
    }
    ActionDescriptor out(std::move(g), kind, std::move(rep), to_dense(tau));
    out.weights_ = std::move(weights);
    out.tau_exact_ = std::move(tau);
    return out;
  }

  const GroupDescriptor& group() const { return group_; }
  ActionKind kind() const { return kind_; }
  int dim_V() const { return dim_v_; }
  const std::vector<CMatrix>& rep() const { return rep_; }
  const CMatrix& tau() const { return tau_; }
  const RVector& tau_coordinates() const { return tau_coords_; }
  bool has_weights() const { return weights_.has_value(); }
  const std::vector<RationalVector>& weights() const { return *weights_; }
  const RationalVector& tau_exact() const { return *tau_exact_; }

  /// ρ_*(u) for u ∈ 𝔤 (complex-linear extension).
  CMatrix rho(const CMatrix& u) const { return rho_coordinates(group_.coordinates(u)); }

  CMatrix rho_coordinates(const CVector& c) const {
    CMatrix out = CMatrix::Zero(dim_v_, dim_v_);
    for (int a = 0; a < group_.dim(); ++a)
      if (c(a) != cplx(0.0)) out += c(a) * rep_[a];
    return out;
  }
  CMatrix rho_coordinates(const RVector& c) const { return rho_coordinates(CVector(c.cast<cplx>())); }

  /// h(τ, ξ).
  double tau_pairing(const CMatrix& xi) const { return group_.pairing(tau_, xi); }

  /// Validates and normalizes a point for this action.
  PointState point(const CVector& v) const {
    if (v.size() != dim_v_) throw Error(ErrorCode::InvalidArgument, "point has wrong dimension");
    if (kind_ == ActionKind::Projective) {
      const double n = v.norm();
      if (!(n > 0.0)) throw Error(ErrorCode::InvalidArgument, "projective point must be nonzero");
      return {v / n};
    }
    return {v};
  }

  /// Largest ‖ρ_*(b_a)‖ over the basis; sets the scale of stabilizer tests.
  double rep_scale() const {
    double m = 0.0;
    for (const auto& r : rep_) m = std::max(m, r.norm());
    return m;
  }

 private:
  ActionDescriptor(GroupDescriptor g, ActionKind kind, std::vector<CMatrix> rep, RVector tau_coords)
      : group_(std::move(g)), kind_(kind), rep_(std::move(rep)) {
    if (static_cast<int>(rep_.size()) != group_.dim())
      throw Error(ErrorCode::InvalidArgument, "representation needs one matrix per basis element of the Lie algebra");
    dim_v_ = rep_.empty() ? 0 : static_cast<int>(rep_.front().rows());
    for (const auto& r : rep_) {
      if (r.rows() != dim_v_ || r.cols() != dim_v_)
        throw Error(ErrorCode::InvalidArgument, "representation matrices must be square of equal size");
      if ((r - r.adjoint()).norm() > 1e-10 * (1.0 + r.norm()))
        throw Error(ErrorCode::InvalidArgument, "K must act unitarily: rho(i k) must be Hermitian");
    }
    check_homomorphism();
    const auto& centre = group_.center_basis();
    if (tau_coords.size() == 0) tau_coords = RVector::Zero(static_cast<Eigen::Index>(centre.size()));
    if (tau_coords.size() != static_cast<Eigen::Index>(centre.size()))
      throw Error(ErrorCode::InvalidArgument, "tau must have one coordinate per center basis element");
    tau_coords_ = tau_coords;
    tau_ = CMatrix::Zero(group_.ambient_dim(), group_.ambient_dim());
    for (std::size_t i = 0; i < centre.size(); ++i) tau_ += tau_coords(static_cast<Eigen::Index>(i)) * centre[i];
    if (kind_ == ActionKind::Projective && tau_coords_.norm() != 0.0)
      throw Error(ErrorCode::InvalidArgument, "projective actions carry no central parameter");
    for (const auto& b : group_.hermitian_basis())
      if (bracket(tau_, b).norm() > 1e-10 * (1.0 + tau_.norm()))
        throw Error(ErrorCode::InvalidArgument, "tau is not central");
  }

  void check_homomorphism() const {
    const auto& b = group_.hermitian_basis();
    for (int i = 0; i < group_.dim(); ++i)
      for (int j = i + 1; j < group_.dim(); ++j) {
        const CMatrix lhs = rho(bracket(b[i], b[j]));
        const CMatrix rhs = bracket(rep_[i], rep_[j]);
        if ((lhs - rhs).norm() > 1e-10 * (1.0 + rep_[i].norm() * rep_[j].norm()))
          throw Error(ErrorCode::InvalidArgument, "representation is not a Lie algebra homomorphism");
      }
  }

  GroupDescriptor group_;
  ActionKind kind_;
  std::vector<CMatrix> rep_;
  int dim_v_ = 0;
  CMatrix tau_;
  RVector tau_coords_;
  std::optional<std::vector<RationalVector>> weights_;
  std::optional<RationalVector> tau_exact_;
};

// ---------------------------------------------------------------------------
// Moment map

/// Pairings ⟨iμ(x), b_a⟩ against the orthonormal basis of i𝔨.
///   linear:      ½⟨ρ_*(b)v, v⟩ + h(τ, b)
///   projective:  (1/2π) ⟨ρ_*(b)v, v⟩ / ‖v‖²
inline RVector moment_coordinates(const ActionDescriptor& a, const CVector& v) {
  const int d = a.group().dim();
  RVector out(d);
  const double vv = v.squaredNorm();
  for (int k = 0; k < d; ++k) {
    const double q = v.dot(a.rep()[k] * v).real();
    if (a.kind() == ActionKind::Linear)
      out(k) = 0.5 * q + a.tau_pairing(a.group().hermitian_basis()[k]);
    else
      out(k) = vv > 0.0 ? q / (2.0 * kPi * vv) : 0.0;
  }
  return out;
}

inline RVector moment_coordinates(const ActionDescriptor& a, const PointState& x) {
  return moment_coordinates(a, x.v);
}

/// The element m ∈ i𝔨 with h(m, ξ) = ⟨iμ(x), ξ⟩ for all ξ ∈ i𝔨.
inline CMatrix moment_value(const ActionDescriptor& a, const PointState& x) {
  return a.group().from_coordinates(moment_coordinates(a, x));
}

/// Derivative of moment_coordinates at y along the tangent vector dy.
inline RVector moment_derivative(const ActionDescriptor& a, const CVector& y, const CVector& dy) {
  const int d = a.group().dim();
  RVector out(d);
  const double yy = y.squaredNorm();
  const double ydy = y.dot(dy).real();
  for (int k = 0; k < d; ++k) {
    const CVector ry = a.rep()[k] * y;
    const double lin = ry.dot(dy).real();  // Re(y* R dy), R Hermitian
    if (a.kind() == ActionKind::Linear) {
      out(k) = lin;
    } else {
      const double q = y.dot(ry).real();
      out(k) = (2.0 * lin / yy - 2.0 * q * ydy / (yy * yy)) / (2.0 * kPi);
    }
  }
  return out;
}

/// u^# at x: ρ_*(u)v, projected orthogonally to v for projective actions.
inline CVector fundamental_field(const ActionDescriptor& a, const CMatrix& u, const PointState& x) {
  CVector w = a.rho(u) * x.v;
  if (a.kind() == ActionKind::Projective) {
    const double vv = x.v.squaredNorm();
    if (vv > 0.0) w -= x.v * (x.v.dot(w) / vv);
  }
  return w;
}

/// e^{ρ_*(s)}·x for Hermitian s ∈ i𝔨 (ambient matrix), computed spectrally.
/// Linear actions throw ActionOverflow when a component leaves double range;
/// projective actions rescale by the dominant exponent and renormalize.
inline PointState act_hermitian(const ActionDescriptor& a, const CMatrix& s, const PointState& x) {
  const HermitianTypeVector r(a.rho(s));
  const CMatrix& u = r.eigenvectors();
  CVector w = u.adjoint() * x.v;
  const RVector& lam = r.eigenvalues();
  if (a.kind() == ActionKind::Linear) {
    for (int i = 0; i < w.size(); ++i) {
      if (w(i) == cplx(0.0)) continue;
      const double logmag = lam(i) + std::log(std::abs(w(i)));
      if (logmag > 700.0) throw Error(ErrorCode::ActionOverflow, "group element drives the point out of range");
      w(i) *= std::exp(lam(i));
    }
    return {u * w};
  }
  double shift = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < w.size(); ++i)
    if (w(i) != cplx(0.0)) shift = std::max(shift, lam(i) + std::log(std::abs(w(i))));
  for (int i = 0; i < w.size(); ++i) w(i) *= std::exp(lam(i) - shift);
  CVector y = u * w;
  return {y / y.norm()};
}

/// exp(ρ_*(u))·x for arbitrary u ∈ 𝔤.
inline PointState act_exp(const ActionDescriptor& a, const CMatrix& u, const PointState& x) {
  const CMatrix g = a.rho(u).exp();
  CVector y = g * x.v;
  if (a.kind() == ActionKind::Projective) y /= y.norm();
  return {y};
}

// ---------------------------------------------------------------------------
// Maximal weights

struct WeightOptions {
  double drop_tol = 1e-12;  // relative size below which a component counts as zero
  double eig_tol = -1.0;    // |eigenvalue| ≤ eig_tol counts as zero; < 0 selects the clustering tolerance
};

namespace detail {

struct RayComponents {
  std::vector<double> values;  // clustered eigenvalues of ρ_*(ξ)
  std::vector<double> mass;    // ‖P_λ v‖²
  double eig_tol = 0.0;
};

inline RayComponents ray_components(const ActionDescriptor& a, const CMatrix& xi, const PointState& x,
                                    const WeightOptions& opt) {
  const HermitianTypeVector r(a.rho(hermitian_part(xi)));
  RayComponents out;
  out.eig_tol = opt.eig_tol >= 0.0 ? opt.eig_tol : r.cluster_tol();
  const double vn = x.v.norm();
  for (int c = 0; c < r.cluster_count(); ++c) {
    const double m2 = (r.eigenprojections()[c] * x.v).squaredNorm();
    if (std::sqrt(m2) <= opt.drop_tol * vn) continue;
    out.values.push_back(r.cluster_values()[c]);
    out.mass.push_back(m2);
  }
  return out;
}

}  // namespace detail

/// ⟨iμ(e^{tξ}x), ξ⟩. Evaluated per eigencomponent of ρ_*(ξ) so that the
/// projective case never overflows.
inline double weight_along_ray(const ActionDescriptor& a, const CMatrix& xi, const PointState& x, double t) {
  WeightOptions opt;
  opt.drop_tol = 0.0;
  const auto rc = detail::ray_components(a, xi, x, opt);
  if (a.kind() == ActionKind::Linear) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rc.values.size(); ++i)
      acc += 0.5 * rc.values[i] * std::exp(2.0 * t * rc.values[i]) * rc.mass[i];
    return acc + a.tau_pairing(hermitian_part(xi));
  }
  if (rc.values.empty()) return 0.0;
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rc.values.size(); ++i)
    top = std::max(top, 2.0 * t * rc.values[i] + std::log(rc.mass[i]));
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < rc.values.size(); ++i) {
    const double w = std::exp(2.0 * t * rc.values[i] + std::log(rc.mass[i]) - top);
    num += rc.values[i] * w;
    den += w;
  }
  return num / (den * 2.0 * kPi);
}

/// λ^ξ(x) = lim_{t→∞} ⟨iμ(e^{tξ}x), ξ⟩.
///   linear:      +∞ if v has a nonzero component on a positive eigenvalue of ρ_*(ξ), else h(τ, ξ)
///   projective:  (1/2π) · max{λ ∈ Spec ρ_*(ξ) : P_λ v ≠ 0}
inline WeightValue maximal_weight(const ActionDescriptor& a, const CMatrix& xi, const PointState& x,
                                  const WeightOptions& opt = {}) {
  const auto rc = detail::ray_components(a, xi, x, opt);
  if (a.kind() == ActionKind::Linear) {
    for (double lam : rc.values)
      if (lam > rc.eig_tol) return WeightValue::plus_infinity();
    return WeightValue::finite(a.tau_pairing(hermitian_part(xi)));
  }
  if (rc.values.empty()) return WeightValue::finite(0.0);
  double top = rc.values.front();
  for (double lam : rc.values) top = std::max(top, lam);
  if (std::abs(top) <= rc.eig_tol) top = 0.0;
  return WeightValue::finite(top / (2.0 * kPi));
}

/// Self-test of the limit formula: |weight_along_ray(t_big) − λ^ξ(x)| with
/// t_big = 40 / (smallest relevant spectral gap).
inline double weight_limit_consistency(const ActionDescriptor& a, const CMatrix& xi, const PointState& x,
                                       const WeightOptions& opt = {}) {
  const WeightValue mw = maximal_weight(a, xi, x, opt);
  if (mw.infinite) throw Error(ErrorCode::DivergentRay, "maximal weight is +inf; the ray diverges");
  const auto rc = detail::ray_components(a, xi, x, opt);
  double gap = std::numeric_limits<double>::infinity();
  if (a.kind() == ActionKind::Linear) {
    for (double lam : rc.values)
      if (std::abs(lam) > rc.eig_tol) gap = std::min(gap, std::abs(lam));
  } else {
    double top = -std::numeric_limits<double>::infinity();
    for (double lam : rc.values) top = std::max(top, lam);
    for (double lam : rc.values)
      if (top - lam > rc.eig_tol) gap = std::min(gap, top - lam);
  }
  const double t_big = std::isfinite(gap) ? 40.0 / gap : 1.0;
  return std::abs(weight_along_ray(a, xi, x, t_big) - mw.value);
}

}  // namespace momap
