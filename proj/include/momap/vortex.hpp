#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include "momap/core.hpp"

namespace momap {

/// Rank-1 vortex data on the periodic N×N grid of [0,1)²: the equation
/// Δu − ½·m·e^{2u} + (t − 2πd) = 0 for the conformal factor u (h = h₀e^{2u}).
struct VortexProblem {
  int grid_n = 0;
  int degree = 0;
  std::vector<double> phi0_sq;  // m = |φ|²_{h₀}, row-major
  double t_param = 0.0;

  double cell() const { return 1.0 / grid_n; }
  double background() const { return 2.0 * kPi * degree; }
  int size() const { return grid_n * grid_n; }

  void validate() const {
    if (grid_n < 3) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 3");
    if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
    if (static_cast<int>(phi0_sq.size()) != size())
      throw Error(ErrorCode::InvalidArgument, "phi0_sq must have grid_n^2 entries");
    double mx = 0.0;
    for (double v : phi0_sq) {
      if (!(v >= 0.0) || !std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "phi0_sq must be finite and nonnegative");
      mx = std::max(mx, v);
    }
    if (!(mx > 0.0)) throw Error(ErrorCode::InvalidArgument, "phi0_sq vanishes identically");
  }
};

struct VortexSolution {
  std::vector<double> u;
  double residual_inf = 0.0;
  double mass_identity_error = 0.0;
  int newton_iters = 0;
  double min_u = 0.0;
};

struct VortexOutcome {
  bool solvable = false;
  VortexSolution solution;  // last iterate when insolvable
  std::string diagnosis;
};

/// Periodic 5-point Laplacian, (Δu)_{ij} = (u_{i±1,j} + u_{i,j±1} − 4u_{ij})/hc².
inline std::vector<double> laplacian(int n, const std::vector<double>& u) {
  const double inv = double(n) * double(n);
  std::vector<double> out(u.size());
  for (int i = 0; i < n; ++i) {
    const int ip = (i + 1) % n, im = (i + n - 1) % n;
    for (int j = 0; j < n; ++j) {
      const int jp = (j + 1) % n, jm = (j + n - 1) % n;
      out[i * n + j] = (u[ip * n + j] + u[im * n + j] + u[i * n + jp] + u[i * n + jm] - 4.0 * u[i * n + j]) * inv;
    }
  }
  return out;
}

/// G(u) = Δu − ½·m·e^{2u} + (t − c₀).
inline std::vector<double> assemble_equation(const VortexProblem& p, const std::vector<double>& u) {
  std::vector<double> g = laplacian(p.grid_n, u);
  const double rhs = p.t_param - p.background();
  for (std::size_t k = 0; k < g.size(); ++k) g[k] += -0.5 * p.phi0_sq[k] * std::exp(2.0 * u[k]) + rhs;
  return g;
}

/// |½·Σ m e^{2u} hc² − (t − c₀)|.
inline double mass_identity_error(const VortexProblem& p, const std::vector<double>& u) {
  const double h2 = p.cell() * p.cell();
  double mass = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) mass += p.phi0_sq[k] * std::exp(2.0 * u[k]);
  return std::abs(0.5 * mass * h2 - (p.t_param - p.background()));
}

namespace detail {

// E(u) = Σ hc² [ −½ u·Δu + ¼ m e^{2u} − (t − c₀) u ]; its gradient is −G(u)·hc².
inline double vortex_energy(const VortexProblem& p, const std::vector<double>& u) {
  const auto lu = laplacian(p.grid_n, u);
  const double rhs = p.t_param - p.background();
  double e = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k)
    e += -0.5 * u[k] * lu[k] + 0.25 * p.phi0_sq[k] * std::exp(2.0 * u[k]) - rhs * u[k];
  return e * p.cell() * p.cell();
}

inline double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace detail

/// Damped Newton on G(u) = 0. Each step solves (−Δ + diag(m e^{2u})) δ = G
/// by sparse LDLᵀ; steps are damped by Armijo backtracking on the convex
/// energy whose gradient is −G. When t ≤ c₀ the energy has no minimizer
/// and the iterates run off to −∞, which is reported as insolvable.
inline VortexOutcome solve_vortex(const VortexProblem& p, double tol = 1e-10, int max_iter = 200,
                                  const std::vector<double>* warm_start = nullptr) {
  p.validate();
  const int n = p.grid_n;
  const int sz = p.size();
  const double inv = double(n) * double(n);
  const double rhs = p.t_param - p.background();

  std::vector<double> u;
  if (warm_start && static_cast<int>(warm_start->size()) == sz) {
    u = *warm_start;
  } else {
    const double mean_m = std::accumulate(p.phi0_sq.begin(), p.phi0_sq.end(), 0.0) / sz;
    u.assign(sz, 0.5 * std::log(2.0 * std::max(rhs, 1e-3) / mean_m));
  }

  using SpMat = Eigen::SparseMatrix<double>;
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(5 * sz);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = i * n + j;
      trip.emplace_back(k, k, 4.0 * inv);
      trip.emplace_back(k, ((i + 1) % n) * n + j, -inv);
      trip.emplace_back(k, ((i + n - 1) % n) * n + j, -inv);
      trip.emplace_back(k, i * n + (j + 1) % n, -inv);
      trip.emplace_back(k, i * n + (j + n - 1) % n, -inv);
    }
  SpMat lap(sz, sz);
  lap.setFromTriplets(trip.begin(), trip.end());  // −Δ
  Eigen::SimplicialLDLT<SpMat> ldlt;
  ldlt.analyzePattern(lap);

  VortexOutcome out;
  auto finish = [&](bool ok, std::string why, int iters, const std::vector<double>& g) {
    out.solvable = ok;
    out.diagnosis = std::move(why);
    out.solution.u = u;
    out.solution.residual_inf = detail::inf_norm(g);
    out.solution.mass_identity_error = mass_identity_error(p, u);
    out.solution.newton_iters = iters;
    out.solution.min_u = *std::min_element(u.begin(), u.end());
    return out;
  };

  std::vector<double> g = assemble_equation(p, u);
  double energy = detail::vortex_energy(p, u);
  for (int it = 0; it < max_iter; ++it) {
    if (detail::inf_norm(g) <= tol) return finish(true, "converged", it, g);
    const double umin = *std::min_element(u.begin(), u.end());
    if (umin < -50.0) {
      return finish(false, "insolvable: min(u) < -50; the mass identity 1/2 sum m e^{2u} hc^2 = t - 2 pi d "
                           "has no solution when t - 2 pi d <= 0", it, g);
    }
    SpMat jac = lap;
    for (int k = 0; k < sz; ++k) jac.coeffRef(k, k) += p.phi0_sq[k] * std::exp(2.0 * u[k]);
    ldlt.factorize(jac);
    if (ldlt.info() != Eigen::Success) throw Error(ErrorCode::LinearSolveFailure, "vortex Jacobian factorization failed");
    const Eigen::Map<const Eigen::VectorXd> gv(g.data(), sz);
    const Eigen::VectorXd delta = ldlt.solve(gv);
    if (ldlt.info() != Eigen::Success) throw Error(ErrorCode::LinearSolveFailure, "vortex linear solve failed");
    // Directional derivative of the energy along δ is −hc²·G·δ < 0.
    const double slope = -gv.dot(delta) / inv;
    double alpha = 1.0;
    bool accepted = false;
    std::vector<double> trial(sz);
    std::vector<double> gt;
    for (int ls = 0; ls < 60; ++ls) {
      for (int k = 0; k < sz; ++k) trial[k] = u[k] + alpha * delta[k];
      const double et = detail::vortex_energy(p, trial);
      gt = assemble_equation(p, trial);
      // Near the root the energy decrease drowns in rounding; a halved residual also counts.
      const bool energy_ok = std::isfinite(et) && et <= energy + 1e-4 * alpha * slope;
      const bool residual_ok = ls == 0 && detail::inf_norm(gt) <= 0.5 * detail::inf_norm(g);
      if (energy_ok || residual_ok) {
        accepted = true;
        energy = et;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) return finish(false, "insolvable: line search stalled", it, g);
    u = trial;
    g = gt;
  }
  if (detail::inf_norm(g) <= tol) return finish(true, "converged", max_iter, g);
  return finish(false, "insolvable: iteration budget exhausted", max_iter, g);
}

struct ScanEntry {
  double t;
  bool solvable;
  double min_u;
  double mass_identity_error;
  double residual_inf;
};

struct ThresholdScan {
  std::vector<ScanEntry> entries;
  bool found_insolvable = false;
  double last_solvable = 0.0;     // smallest t solved before the first failure
  double first_insolvable = 0.0;
};

/// Warm-started solves along a descending list of t.
inline ThresholdScan continuation_in_t(VortexProblem p, const std::vector<double>& t_list, double tol = 1e-10,
                                       int max_iter = 200) {
  for (std::size_t k = 1; k < t_list.size(); ++k)
    if (!(t_list[k] < t_list[k - 1])) throw Error(ErrorCode::InvalidArgument, "t_list must be strictly descending");
  ThresholdScan scan;
  std::vector<double> warm;
  bool have_solvable = false;
  for (double t : t_list) {
    p.t_param = t;
    const auto r = solve_vortex(p, tol, max_iter, warm.empty() ? nullptr : &warm);
    scan.entries.push_back({t, r.solvable, r.solution.min_u, r.solution.mass_identity_error, r.solution.residual_inf});
    if (r.solvable) {
      warm = r.solution.u;
      if (!scan.found_insolvable) {
        scan.last_solvable = t;
        have_solvable = true;
      }
    } else if (!scan.found_insolvable) {
      scan.found_insolvable = true;
      scan.first_insolvable = t;
    }
  }
  if (!have_solvable) scan.last_solvable = 0.0;
  return scan;
}

}  // namespace momap
