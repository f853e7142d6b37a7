#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/SVD>

#include "momap/action.hpp"
#include "momap/spectral.hpp"

namespace momap {

enum class JacobianMode { Exact, FiniteDifference };

struct SolveOptions {
  double eps_start = 1.0;
  double eps_min = 1e-10;
  double newton_tol = 1e-11;
  int newton_max_iter = 50;
  double step_shrink = 0.5;
  double divergence_factor = 1e3;
  JacobianMode jacobian_mode = JacobianMode::Exact;
  double stab_tol = 1e-8;
  double max_condition = 1e12;
  int max_total_newton = 20000;
  double weight_tol = 1e-6;  // eigenvalue tolerance when reading off the weight at σ

  void validate() const {
    if (!(eps_start > 0 && eps_min > 0 && eps_min < eps_start && newton_tol > 0 && newton_max_iter > 0 &&
          step_shrink > 0 && step_shrink < 1 && divergence_factor > 0 && stab_tol > 0))
      throw Error(ErrorCode::InvalidArgument, "invalid solver options");
  }
};

struct TraceStep {
  double eps;
  double s_norm;
  double residual_norm;
  int newton_iters;
};

struct PolystableCert {
  CMatrix s_final;  // x_star = e^{s_final}·x₀
  PointState x_star;
  double mu_residual = 0.0;
  std::vector<std::pair<double, double>> path;
};

struct UnstableCert {
  CMatrix sigma;
  WeightValue weight_at_sigma;
  RVector sigma_spectrum;  // weyl_representative(σ)
  std::vector<std::pair<double, double>> norm_history;
  bool from_stabilizer = false;  // σ read off the stabilizer component of iμ(x)
};

struct Inconclusive {
  std::string reason;
};

struct SolveOutcome {
  std::variant<PolystableCert, UnstableCert, Inconclusive> result;
  PointState x0;
  CMatrix s1;
  int stabilizer_dim = 0;
  std::vector<TraceStep> trace;

  bool polystable() const { return std::holds_alternative<PolystableCert>(result); }
  bool unstable() const { return std::holds_alternative<UnstableCert>(result); }
  bool inconclusive() const { return std::holds_alternative<Inconclusive>(result); }
  const PolystableCert& poly() const { return std::get<PolystableCert>(result); }
  const UnstableCert& unst() const { return std::get<UnstableCert>(result); }
  const char* variant_name() const {
    return polystable() ? "PolystableCert" : unstable() ? "UnstableCert" : "Inconclusive";
  }
};

/// Orthogonal splitting i𝔨 = i𝔨_x ⊕ i𝔨_x^⊥ in basis coordinates.
struct StabilizerSplit {
  RMatrix complement;  // d × m, orthonormal columns
  RMatrix stabilizer;  // d × (d − m)
  RVector singular_values;
};

/// i𝔨_x is the null space of ξ ↦ (iξ)^#_x; singular values below
/// stab_tol·‖v‖·max(1, max‖ρ_*(b)‖) count as zero.
inline StabilizerSplit stabilizer_split(const ActionDescriptor& a, const PointState& x, double stab_tol = 1e-8) {
  const int d = a.group().dim();
  const int n = a.dim_V();
  StabilizerSplit out;
  if (d == 0) {
    out.complement = RMatrix::Zero(0, 0);
    out.stabilizer = RMatrix::Zero(0, 0);
    return out;
  }
  RMatrix m(2 * n, d);
  const auto& basis = a.group().hermitian_basis();
  for (int k = 0; k < d; ++k) {
    const CVector w = fundamental_field(a, basis[k], x);
    m.col(k).head(n) = w.real();
    m.col(k).tail(n) = w.imag();
  }
  Eigen::JacobiSVD<RMatrix> svd(m, Eigen::ComputeFullV);
  out.singular_values = svd.singularValues();
  const double thr = stab_tol * x.v.norm() * std::max(1.0, a.rep_scale());
  int rank = 0;
  for (int k = 0; k < out.singular_values.size(); ++k)
    if (out.singular_values(k) > thr) ++rank;
  out.complement = svd.matrixV().leftCols(rank);
  out.stabilizer = svd.matrixV().rightCols(d - rank);
  return out;
}

inline RMatrix stabilizer_complement(const ActionDescriptor& a, const PointState& x, double stab_tol = 1e-8) {
  return stabilizer_split(a, x, stab_tol).complement;
}

struct Initialization {
  PointState x0;
  CMatrix s1;
};

/// s₁ = −iμ(x), x₀ = e^{−s₁}x, so that l(1, s₁) = 0.
inline Initialization initialize(const ActionDescriptor& a, const PointState& x) {
  Initialization out;
  out.s1 = -moment_value(a, x);
  out.x0 = act_hermitian(a, -out.s1, x);
  return out;
}

/// The map y ↦ l(ε, s(y)) = proj(iμ(e^{s}x₀)) + εy on i𝔨_{x₀}^⊥, with
/// s(y) = Σ yᵢ cᵢ for the orthonormal complement basis cᵢ.
class PerturbedProblem {
 public:
  PerturbedProblem(const ActionDescriptor& a, PointState x0, RMatrix complement)
      : a_(a), x0_(std::move(x0)), c_(std::move(complement)) {}

  int size() const { return static_cast<int>(c_.cols()); }
  const RMatrix& complement() const { return c_; }
  const PointState& x0() const { return x0_; }

  CMatrix s_of(const RVector& y) const { return a_.group().from_coordinates(RVector(c_ * y)); }
  RVector coords_of(const CMatrix& s) const { return c_.transpose() * a_.group().real_coordinates(s); }

  PointState point(const RVector& y) const { return act_hermitian(a_, s_of(y), x0_); }

  RVector residual(double eps, const RVector& y) const {
    return RVector(c_.transpose() * moment_coordinates(a_, point(y))) + eps * y;
  }

  /// Hermitian-matrix form of the residual.
  CMatrix residual_value(double eps, const RVector& y) const {
    return a_.group().from_coordinates(RVector(c_ * residual(eps, y)));
  }

  RMatrix jacobian(double eps, const RVector& y, JacobianMode mode) const {
    const int m = size();
    RMatrix j(m, m);
    if (mode == JacobianMode::FiniteDifference) {
      const double h = 1e-6 * (1.0 + y.norm());
      for (int b = 0; b < m; ++b) {
        RVector yp = y, ym = y;
        yp(b) += h;
        ym(b) -= h;
        j.col(b) = (residual(eps, yp) - residual(eps, ym)) / (2.0 * h);
      }
      return j;
    }
    const CMatrix s = s_of(y);
    const AdSpectralData ad{HermitianTypeVector(s)};
    const CVector yv = act_hermitian(a_, s, x0_).v;
    for (int b = 0; b < m; ++b) {
      const CMatrix sdot = a_.group().from_coordinates(RVector(c_.col(b)));
      const DexpFactor f = dexp_factor(ad, sdot);
      const CVector dy = a_.rho(f.sigma) * yv;
      j.col(b) = c_.transpose() * moment_derivative(a_, yv, dy);
      j(b, b) += eps;
    }
    return j;
  }

 private:
  const ActionDescriptor& a_;
  PointState x0_;
  RMatrix c_;
};

namespace detail {

struct NewtonResult {
  bool ok = false;
  RVector y;
  int iters = 0;
  double residual = std::numeric_limits<double>::infinity();
  double last_step = 0.0;
  std::string failure;
};

inline NewtonResult newton(const PerturbedProblem& p, double eps, RVector y, const SolveOptions& opt, double tol,
                           int max_iter) {
  NewtonResult out;
  try {
    RVector r = p.residual(eps, y);
    double rn = r.norm();
    for (int it = 0; it < max_iter; ++it) {
      if (rn <= tol) break;
      const RMatrix j = p.jacobian(eps, y, opt.jacobian_mode);
      Eigen::JacobiSVD<RMatrix> svd(j, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const RVector sv = svd.singularValues();
      if (sv.size() > 0 && !(sv(sv.size() - 1) * opt.max_condition > sv(0))) {
        out.failure = to_string(ErrorCode::SingularJacobian);
        out.y = y;
        out.residual = rn;
        return out;
      }
      const RVector dir = -svd.solve(r);
      double alpha = 1.0;
      bool accepted = false;
      for (int ls = 0; ls < 40; ++ls) {
        const RVector yt = y + alpha * dir;
        RVector rt;
        try {
          rt = p.residual(eps, yt);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::ActionOverflow) throw;
          alpha *= 0.5;
          continue;
        }
        const double rtn = rt.norm();
        if (std::isfinite(rtn) && rtn <= (1.0 - 1e-4 * alpha) * rn) {
          y = yt;
          r = rt;
          rn = rtn;
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      ++out.iters;
      if (!accepted) {
        out.failure = "line search stalled";
        out.y = y;
        out.residual = rn;
        return out;
      }
      out.last_step = alpha * dir.norm();
    }
    out.y = y;
    out.residual = rn;
    out.ok = rn <= tol;
    if (!out.ok) out.failure = "Newton iteration limit";
  } catch (const Error& e) {
    out.failure = to_string(e.code());
    out.y = y;
  }
  return out;
}

inline bool grew_monotonically(const std::vector<std::pair<double, double>>& hist, int steps) {
  if (static_cast<int>(hist.size()) < steps + 1) return false;
  for (std::size_t k = hist.size() - steps; k < hist.size(); ++k)
    if (!(hist[k].second > hist[k - 1].second)) return false;
  return true;
}

}  // namespace detail

/// The continuity method: solve l(ε, s) = 0 from (1, s₁) and drive ε to
/// zero. A bounded path that can be polished at ε = 0 certifies polystability;
/// a path with ‖s‖ growing without bound yields the destabilizing direction.
///
/// If iμ(x) already has a component p in i𝔨_x, the orbit of x fixes that
/// direction and σ = −p/‖p‖ has weight −‖p‖ < 0; that certificate is
/// returned without continuation.
inline SolveOutcome solve_moment_zero(const ActionDescriptor& a, const PointState& x, const SolveOptions& opt = {}) {
  opt.validate();
  SolveOutcome out;
  const auto& g = a.group();
  WeightOptions wopt;
  wopt.eig_tol = opt.weight_tol;

  const StabilizerSplit split_x = stabilizer_split(a, x, opt.stab_tol);
  const RVector mu_x = moment_coordinates(a, x);
  const RVector p = split_x.stabilizer.transpose() * mu_x;
  if (p.size() > 0 && p.norm() > 1e-9 * (1.0 + mu_x.norm())) {
    UnstableCert cert;
    cert.sigma = g.from_coordinates(RVector(-(split_x.stabilizer * p) / p.norm()));
    cert.weight_at_sigma = maximal_weight(a, cert.sigma, x, wopt);
    cert.sigma_spectrum = weyl_representative(HermitianTypeVector(cert.sigma));
    cert.from_stabilizer = true;
    out.x0 = x;
    out.s1 = CMatrix::Zero(g.ambient_dim(), g.ambient_dim());
    out.stabilizer_dim = static_cast<int>(split_x.stabilizer.cols());
    out.result = cert;
    return out;
  }

  const Initialization init = initialize(a, x);
  out.x0 = init.x0;
  out.s1 = init.s1;
  // 𝔨_x commutes with s₁ by equivariance, so it fixes x₀ as well; x itself is
  // far better conditioned than x₀ when ‖μ(x)‖ is large.
  const StabilizerSplit& split = split_x;
  out.stabilizer_dim = static_cast<int>(split.stabilizer.cols());
  const PerturbedProblem prob(a, init.x0, split.complement);
  const double mu0 = RVector(split.complement.transpose() * moment_coordinates(a, init.x0)).norm();
  const double tol = opt.newton_tol * (1.0 + mu_x.norm());

  auto polystable = [&](const RVector& y, std::vector<std::pair<double, double>> path) {
    PolystableCert cert;
    cert.s_final = prob.s_of(y);
    cert.x_star = prob.point(y);
    cert.mu_residual = moment_coordinates(a, cert.x_star).norm();
    cert.path = std::move(path);
    out.result = cert;
    return out;
  };

  if (prob.size() == 0) return polystable(RVector(), {{opt.eps_start, 0.0}});

  // Accepted continuation states (ε, y).
  std::vector<std::pair<double, RVector>> states;
  std::vector<std::pair<double, double>> norms;
  int total_newton = 0;

  RVector y = prob.coords_of(init.s1);
  double eps = opt.eps_start;
  {
    auto nr = detail::newton(prob, eps, y, opt, tol, opt.newton_max_iter);
    total_newton += nr.iters;
    if (!nr.ok) {
      out.result = Inconclusive{"Newton failed at eps_start: " + nr.failure};
      return out;
    }
    y = nr.y;
    out.trace.push_back({eps, y.norm(), nr.residual, nr.iters});
  }
  states.emplace_back(eps, y);
  norms.emplace_back(eps, y.norm());

  auto destabilizer = [&]() -> SolveOutcome {
    const auto& last = states.back();
    std::size_t ref = 0;
    for (std::size_t k = states.size(); k-- > 0;)
      if (states[k].first >= 10.0 * last.first) {
        ref = k;
        break;
      }
    RVector dir = last.second - states[ref].second;
    if (!(dir.norm() > 0.0)) dir = last.second;
    dir /= dir.norm();
    UnstableCert cert;
    cert.sigma = prob.s_of(dir);
    cert.weight_at_sigma = maximal_weight(a, cert.sigma, init.x0, wopt);
    cert.sigma_spectrum = weyl_representative(HermitianTypeVector(cert.sigma));
    cert.norm_history = norms;
    if (cert.weight_at_sigma.infinite || cert.weight_at_sigma.value > opt.weight_tol) {
      out.result = Inconclusive{"divergent path but the limiting direction has positive weight " +
                                cert.weight_at_sigma.str()};
      return out;
    }
    out.result = cert;
    return out;
  };

  double q = opt.step_shrink;
  const double diverge_at = opt.divergence_factor * (1.0 + mu0);
  while (eps > opt.eps_min) {
    if (total_newton > opt.max_total_newton) {
      out.result = Inconclusive{"Newton iteration budget exhausted"};
      return out;
    }
    const double eps_try = std::max(eps * q, opt.eps_min);
    auto nr = detail::newton(prob, eps_try, y, opt, tol, opt.newton_max_iter);
    total_newton += nr.iters;
    const bool bound_ok = nr.ok && nr.y.norm() <= mu0 / eps_try * (1.0 + 1e-6) + 1e-12;
    if (!nr.ok || !bound_ok) {
      q = std::sqrt(q);
      if (1.0 - q < 1e-6) break;
      continue;
    }
    eps = eps_try;
    y = nr.y;
    states.emplace_back(eps, y);
    norms.emplace_back(eps, y.norm());
    out.trace.push_back({eps, y.norm(), nr.residual, nr.iters});
    q = std::max(q * q, opt.step_shrink);
    if (y.norm() > diverge_at && detail::grew_monotonically(norms, 5)) return destabilizer();
  }

  auto polish = detail::newton(prob, 0.0, y, opt, tol, opt.newton_max_iter);
  out.trace.push_back({0.0, polish.y.norm(), polish.residual, polish.iters});
  if (polish.residual <= 10.0 * tol && polish.last_step <= 1e-4 * (1.0 + polish.y.norm())) {
    auto path = norms;
    path.emplace_back(0.0, polish.y.norm());
    return polystable(polish.y, std::move(path));
  }
  if (detail::grew_monotonically(norms, 5)) return destabilizer();
  out.result = Inconclusive{eps > opt.eps_min ? "continuation stalled at eps=" + std::to_string(eps)
                                              : "path neither converged nor diverged"};
  return out;
}

}  // namespace momap
