#pragma once

// Property suites shared by the acceptance binary and `momap selftest`.
// Each criterion compares library output against an oracle computed by a
// different route (matrix exponential series, finite differences, brute
// force enumeration, closed forms).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "momap/momap.hpp"

namespace momap::selftest {

using Rng = std::mt19937_64;

inline double gauss(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline CMatrix random_complex(Rng& rng, int r, int c) {
  CMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = cplx(gauss(rng), gauss(rng));
  return m;
}

inline CVector random_vector(Rng& rng, int n) { return random_complex(rng, n, 1).col(0); }

/// (A + A*)/2 with A complex Gaussian.
inline CMatrix random_hermitian(Rng& rng, int n) { return hermitian_part(random_complex(rng, n, n)); }

inline CMatrix random_unitary(Rng& rng, int n) {
  Eigen::HouseholderQR<CMatrix> qr(random_complex(rng, n, n));
  return qr.householderQ();
}

/// Random element of i𝔨 with standard Gaussian coordinates.
inline CMatrix random_ik(Rng& rng, const GroupDescriptor& g) {
  RVector c(g.dim());
  for (int k = 0; k < g.dim(); ++k) c(k) = gauss(rng);
  return g.from_coordinates(c);
}

inline double inner(const CMatrix& a, const CMatrix& b) { return (a.cwiseProduct(b.conjugate())).sum().real(); }

/// SL(2) acting on Sym²ℂ² (binary quadratics).
inline ActionDescriptor sym2_sl2(ActionKind kind) {
  GroupDescriptor g = GroupDescriptor::special_linear(2);
  RMatrix p = RMatrix::Zero(4, 3);
  p(0, 0) = 1.0;
  p(1, 1) = p(2, 1) = 1.0 / std::sqrt(2.0);
  p(3, 2) = 1.0;
  const CMatrix pc = p.cast<cplx>();
  const CMatrix id = CMatrix::Identity(2, 2);
  std::vector<CMatrix> rep;
  for (const auto& b : g.hermitian_basis()) {
    const CMatrix big = kroneckerProduct(b, id) + kroneckerProduct(id, b);
    rep.push_back(pc.adjoint() * big * pc);
  }
  return ActionDescriptor::from_matrices(g, kind, rep);
}

/// GL(2) acting on ℂ² ⊗ ℂ².
inline ActionDescriptor tensor_gl2(ActionKind kind, double tau = 0.0) {
  GroupDescriptor g = GroupDescriptor::general_linear(2);
  const CMatrix id = CMatrix::Identity(2, 2);
  std::vector<CMatrix> rep;
  for (const auto& b : g.hermitian_basis()) rep.push_back(kroneckerProduct(b, id) + kroneckerProduct(id, b));
  RVector t(1);
  t(0) = tau;
  return ActionDescriptor::from_matrices(g, kind, rep, kind == ActionKind::Linear ? t : RVector());
}

/// GL(2) × T(1) acting on ℂ² by the standard representation twisted by a character of weight w.
inline ActionDescriptor gl2_times_circle(ActionKind kind, double w, RVector tau = RVector()) {
  GroupDescriptor g = GroupDescriptor::product({GroupDescriptor::general_linear(2), GroupDescriptor::torus(1)});
  std::vector<CMatrix> rep;
  const auto& basis = g.hermitian_basis();
  for (int a = 0; a < 4; ++a) rep.push_back(basis[a].topLeftCorner(2, 2));
  rep.push_back(w * CMatrix::Identity(2, 2));
  return ActionDescriptor::from_matrices(g, kind, rep, kind == ActionKind::Linear ? tau : RVector());
}

inline ActionDescriptor random_torus_action(Rng& rng, int rank, int nweights, ActionKind kind, int wmax = 2,
                                            int taumax = 2) {
  std::vector<RationalVector> w(nweights, RationalVector(rank));
  for (auto& chi : w)
    for (auto& q : chi) q = uniform_int(rng, -wmax, wmax);
  RationalVector tau(rank, Rational(0));
  if (kind == ActionKind::Linear && uniform_int(rng, 0, 2) > 0)
    for (auto& q : tau) q = Rational(uniform_int(rng, -taumax, taumax), uniform_int(rng, 1, 2));
  return ActionDescriptor::from_weights(rank, kind, w, tau);
}

/// A mix of linear and projective actions of tori, GL(n), SL(2) and products.
inline ActionDescriptor random_action(Rng& rng) {
  const ActionKind kind = uniform_int(rng, 0, 1) ? ActionKind::Linear : ActionKind::Projective;
  switch (uniform_int(rng, 0, 4)) {
    case 0: {
      const int n = uniform_int(rng, 2, 4);
      RVector tau(1);
      tau(0) = gauss(rng);
      return ActionDescriptor::standard(GroupDescriptor::general_linear(n, uniform(rng, 0.5, 2.0)), kind,
                                        kind == ActionKind::Linear ? tau : RVector());
    }
    case 1: return sym2_sl2(kind);
    case 2: return tensor_gl2(kind, kind == ActionKind::Linear ? gauss(rng) : 0.0);
    case 3: {
      RVector tau(2);
      tau << gauss(rng), gauss(rng);
      return gl2_times_circle(kind, uniform_int(rng, -2, 2), kind == ActionKind::Linear ? tau : RVector());
    }
    default: return random_torus_action(rng, uniform_int(rng, 1, 3), uniform_int(rng, 1, 6), kind);
  }
}

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Config {
  std::uint64_t seed = 20240611;
  bool quick = false;  // reduced sample counts
};

namespace detail {

inline int count(const Config& c, int full) { return c.quick ? std::max(1, full / 10) : full; }

template <class F>
CriterionResult timed(int id, std::string title, F&& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream os;
  try {
    r.pass = body(os);
  } catch (const std::exception& e) {
    r.pass = false;
    os << " exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.detail = os.str();
  return r;
}

// Random Hermitian s, and a ṡ that commutes with s (a function of s) in one
// sample out of four.
inline std::pair<CMatrix, CMatrix> differential_sample(Rng& rng, int n, bool commuting) {
  const CMatrix s = random_hermitian(rng, n);
  if (!commuting) return {s, random_hermitian(rng, n)};
  Eigen::SelfAdjointEigenSolver<CMatrix> es(s);
  RVector d(n);
  for (int i = 0; i < n; ++i) d(i) = gauss(rng);
  const CMatrix sdot = es.eigenvectors() * d.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  return {s, sdot};
}

}  // namespace detail

/// 1. ⟨ṡ, σ_h⟩ ≥ ‖ṡ‖² and ⟨[σ_a, s], σ_h⟩ ≤ 0 with equality iff [s, ṡ] = 0.
inline CriterionResult criterion_1(const Config& cfg) {
  return detail::timed(1, "dexp inequality suite (1000 samples, n<=5)", [&](std::ostream& os) {
    Rng rng(cfg.seed + 1);
    const int samples = detail::count(cfg, 1000);
    int bad_first = 0, bad_second = 0, bad_equality = 0, commuting = 0;
    double worst_first = 0.0, worst_second = -1e300, min_gap_noncommuting = 1e300;
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < samples; ++k) {
      const int n = uniform_int(rng, 1, 5);
      const bool comm = (k % 4 == 0);
      auto [s, sdot] = detail::differential_sample(rng, n, comm);
      const DexpFactor f = dexp_factor(s, sdot);
      const double first = inner(sdot, f.sigma_h) - sdot.squaredNorm();
      const double second = inner(bracket(f.sigma_a, s), f.sigma_h);
      worst_first = std::min(worst_first, first);
      worst_second = std::max(worst_second, second);
      if (first < -1e-8) ++bad_first;
      if (second > 1e-8) ++bad_second;
      const bool commutes = bracket(s, sdot).norm() <= 1e-12 * (1.0 + s.norm() * sdot.norm());
      if (commutes) {
        ++commuting;
        if (std::abs(second) > 1e-8) ++bad_equality;
      } else {
        min_gap_noncommuting = std::min(min_gap_noncommuting, -second);
        if (std::abs(second) <= 1e-8) ++bad_equality;
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    os << "samples=" << samples << " commuting=" << commuting << " min(<sdot,sigma_h>-|sdot|^2)=" << worst_first
       << " max<[sigma_a,s],sigma_h>=" << worst_second << " min gap off equality=" << min_gap_noncommuting
       << " violations=" << bad_first << "/" << bad_second << "/" << bad_equality << " runtime=" << secs << "s";
    return bad_first == 0 && bad_second == 0 && bad_equality == 0 && secs < 5.0;
  });
}

/// 2. σ against the forward difference (e^{s+hṡ}e^{−s} − I)/h computed with
/// the scaling-and-squaring matrix exponential.
inline CriterionResult criterion_2(const Config& cfg) {
  return detail::timed(2, "dexp vs finite differences (200 samples, h=1e-5)", [&](std::ostream& os) {
    Rng rng(cfg.seed + 2);
    const int samples = detail::count(cfg, 200);
    const double h = 1e-5;
    double worst_ratio = 0.0, worst_unscaled = 0.0;
    int bad = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int k = 0; k < samples; ++k) {
      const int n = uniform_int(rng, 1, 5);
      const CMatrix raw = random_hermitian(rng, n);
      const CMatrix sdot = random_hermitian(rng, n);
      const double opnorm = Eigen::SelfAdjointEigenSolver<CMatrix>(raw).eigenvalues().cwiseAbs().maxCoeff();
      const CMatrix s = opnorm > 1.0 ? CMatrix(raw / opnorm) : raw;
      auto fd = [&](const CMatrix& base) {
        const CMatrix e1 = CMatrix(base + h * sdot).exp();
        const CMatrix e0 = CMatrix(-base).exp();
        return CMatrix((e1 * e0 - CMatrix::Identity(n, n)) / h);
      };
      const double bound = 5.0 * h * sdot.squaredNorm();
      const double err = (fd(s) - dexp_factor(s, sdot).sigma).norm();
      worst_ratio = std::max(worst_ratio, err / bound);
      if (err > bound) ++bad;
      const double err_raw = (fd(raw) - dexp_factor(raw, sdot).sigma).norm();
      worst_unscaled = std::max(worst_unscaled, err_raw / bound);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    os << "samples=" << samples << " max err/(5h|sdot|^2)=" << worst_ratio << " (s scaled to |s|_op<=1;"
       << " unscaled s gives " << worst_unscaled << ", informational) violations=" << bad << " runtime=" << secs
       << "s";
    return bad == 0 && secs < 5.0;
  });
}

/// 3. d/dh iμ(x + h·u^#) at h = 0 against [u, iμ(x)], u ∈ 𝔨.
inline CriterionResult criterion_3(const Config& cfg) {
  return detail::timed(3, "moment map infinitesimal equivariance (500 samples)", [&](std::ostream& os) {
    Rng rng(cfg.seed + 3);
    const int samples = detail::count(cfg, 500);
    const double h = 1e-6;
    double worst = 0.0;
    int bad = 0, linear = 0;
    for (int k = 0; k < samples; ++k) {
      const ActionDescriptor a = random_action(rng);
      if (a.kind() == ActionKind::Linear) ++linear;
      const PointState x = a.point(random_vector(rng, a.dim_V()));
      const CMatrix u = cplx(0.0, 1.0) * random_ik(rng, a.group());
      const CVector w = fundamental_field(a, u, x);
      const CMatrix plus = moment_value(a, {x.v + h * w});
      const CMatrix minus = moment_value(a, {x.v - h * w});
      const CMatrix fd = (plus - minus) / (2.0 * h);
      const CMatrix ref = bracket(u, moment_value(a, x));
      const double scale = std::max(ref.norm(), u.norm() * moment_value(a, x).norm());
      const double rel = (fd - ref).norm() / scale;
      worst = std::max(worst, rel);
      if (rel > 1e-5) ++bad;
    }
    os << "samples=" << samples << " (linear " << linear << ") max relative error=" << worst
       << " violations=" << bad;
    return bad == 0;
  });
}

/// 4. t ↦ ⟨iμ(e^{tξ}x), ξ⟩ is nondecreasing; values recomputed from the
/// matrix exponential of ρ_*(tξ) and checked against weight_along_ray.
inline CriterionResult criterion_4(const Config& cfg) {
  return detail::timed(4, "monotonicity along rays (500 samples, 100-point grid)", [&](std::ostream& os) {
    Rng rng(cfg.seed + 4);
    const int samples = detail::count(cfg, 500);
    double worst_drop = 0.0, worst_mismatch = 0.0;
    int bad = 0;
    for (int k = 0; k < samples; ++k) {
      const ActionDescriptor a = random_action(rng);
      const PointState x = a.point(random_vector(rng, a.dim_V()));
      CMatrix xi = random_ik(rng, a.group());
      xi /= std::max(1e-12, a.group().norm(xi));
      const CMatrix rx = a.rho(xi);
      double prev = -1e300;
      for (int i = 0; i < 100; ++i) {
        const double t = -2.0 + 4.0 * i / 99.0;
        CVector y = CMatrix(t * rx).exp() * x.v;
        const double val = a.group().pairing(moment_value(a, {y}), xi);
        const double lib = weight_along_ray(a, xi, x, t);
        worst_mismatch = std::max(worst_mismatch, std::abs(val - lib) / (1.0 + std::abs(val)));
        if (i > 0) {
          worst_drop = std::max(worst_drop, prev - val);
          if (val < prev - 1e-10 * std::max(1.0, std::abs(prev))) ++bad;
        }
        prev = val;
      }
    }
    os << "samples=" << samples << " max decrease=" << worst_drop << " max |ray - weight_along_ray|/(1+|ray|)="
       << worst_mismatch << " violations=" << bad;
    return bad == 0 && worst_mismatch < 1e-8;
  });
}

/// Stability class read off a solver certificate; empty when inconclusive.
inline std::optional<StabilityClass> certificate_class(const SolveOutcome& r, const SolveOptions& opt) {
  if (r.polystable()) return r.stabilizer_dim == 0 ? StabilityClass::Stable : StabilityClass::PolystableNotStable;
  if (r.unstable())
    return r.unst().weight_at_sigma.value < -opt.weight_tol ? StabilityClass::Unstable
                                                            : StabilityClass::SemistableNotPolystable;
  return std::nullopt;
}

/// 5. Exact cones ≡ finite test set ≡ solver certificates on random torus actions.
inline CriterionResult criterion_5(const Config& cfg) {
  return detail::timed(5, "triple-oracle torus stability agreement (2000 points)", [&](std::ostream& os) {
    Rng rng(cfg.seed + 5);
    const int points = detail::count(cfg, 2000);
    const int per_action = 20;
    int done = 0, test_set_mismatch = 0, solver_mismatch = 0, inconclusive = 0;
    int hist[4] = {0, 0, 0, 0};
    const SolveOptions opt;
    std::ostringstream first_bad;
    const auto t0 = std::chrono::steady_clock::now();
    while (done < points) {
      const ActionDescriptor a =
          random_torus_action(rng, uniform_int(rng, 1, 3), uniform_int(rng, 1, 6), ActionKind::Linear);
      const auto phi = torus_test_set(a);
      for (int k = 0; k < per_action && done < points; ++k, ++done) {
        CVector v = random_vector(rng, a.dim_V());
        for (int j = 0; j < v.size(); ++j)
          if (uniform_int(rng, 0, 9) < 4) v(j) = 0.0;
        const auto exact = torus_classify(a, v);
        ++hist[static_cast<int>(exact.cls)];
        const auto ts = test_set_classify(a, phi, v);
        if (ts.cls != exact.cls) {
          ++test_set_mismatch;
          if (first_bad.str().empty()) first_bad << " first test-set mismatch: exact=" << to_string(exact.cls)
                                                 << " test-set=" << to_string(ts.cls);
        }
        const auto sol = solve_moment_zero(a, a.point(v), opt);
        const auto cc = certificate_class(sol, opt);
        if (!cc) {
          ++inconclusive;
        } else if (*cc != exact.cls) {
          ++solver_mismatch;
          if (first_bad.str().find("solver") == std::string::npos)
            first_bad << " first solver mismatch: exact=" << to_string(exact.cls) << " solver=" << to_string(*cc);
        }
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    os << "points=" << done << " classes[S,PnS,SnP,U]=" << hist[0] << "," << hist[1] << "," << hist[2] << ","
       << hist[3] << " test-set disagreements=" << test_set_mismatch << " solver disagreements=" << solver_mismatch
       << " solver inconclusive=" << inconclusive << " runtime=" << secs << "s" << first_bad.str();
    return test_set_mismatch == 0 && solver_mismatch == 0 && secs < 60.0;
  });
}

/// 6. Closed forms for weights (1,−1), τ = 0.
inline CriterionResult criterion_6(const Config&) {
  return detail::timed(6, "continuity solver closed forms", [&](std::ostream& os) {
    const auto a = ActionDescriptor::from_weights(1, ActionKind::Linear, {{Rational(1)}, {Rational(-1)}});
    CVector v(2);
    v << 2.0, 1.0;
    const auto r1 = solve_moment_zero(a, a.point(v));
    bool ok = r1.polystable();
    double dist = -1.0;
    if (ok) {
      CVector target(2);
      target << std::sqrt(2.0), std::sqrt(2.0);
      dist = (r1.poly().x_star.v - target).norm();
      ok = dist <= 1e-7;
    }
    v << 1.0, 0.0;
    const auto r2 = solve_moment_zero(a, a.point(v));
    bool ok2 = r2.unstable();
    double werr = -1.0, serr = -1.0;
    if (ok2) {
      const auto& c = r2.unst();
      CMatrix ray = CMatrix::Zero(1, 1);
      ray(0, 0) = -1.0;
      werr = c.weight_at_sigma.infinite ? 1e300 : std::abs(c.weight_at_sigma.value);
      serr = (c.sigma - ray).norm();
      ok2 = werr <= 1e-6 && serr <= 1e-6;
    }
    os << "v=(2,1): " << r1.variant_name() << " |x_star-(sqrt2,sqrt2)|=" << dist << "; v=(1,0): "
       << r2.variant_name() << " |weight|=" << werr << " |sigma-(-1)|=" << serr;
    return ok && ok2;
  });
}

inline std::vector<double> gaussian_bump(int n, double total) {
  std::vector<double> m(n * n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = double(i) / n - 0.5, y = double(j) / n - 0.5;
      m[i * n + j] = std::exp(-(x * x + y * y) / (2.0 * 0.1 * 0.1));
      sum += m[i * n + j];
    }
  const double h2 = 1.0 / (double(n) * n);
  for (auto& x : m) x *= total / (sum * h2);
  return m;
}

inline std::vector<double> manufactured_m(int n) {
  std::vector<double> m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i * n + j] = 1.0 + 0.5 * std::sin(2.0 * kPi * i / n) * std::cos(2.0 * kPi * j / n);
  return m;
}

/// 7. Solvability threshold t* = 2πd from warm-started scans in t.
inline CriterionResult criterion_7(const Config& cfg) {
  return detail::timed(7, "vortex solvability threshold (N=128)", [&](std::ostream& os) {
    const int n = cfg.quick ? 64 : 128;
    VortexProblem p;
    p.grid_n = n;
    p.degree = 1;
    p.phi0_sq = gaussian_bump(n, 2.0);
    std::vector<double> ts = {10.0, 9.0, 8.0, 7.0, 6.5};
    for (int k = 1; k <= 10; ++k) ts.push_back(6.5 - 0.05 * k);
    const auto scan = continuation_in_t(p, ts);
    double worst_mass = 0.0;
    for (const auto& e : scan.entries)
      if (e.solvable) worst_mass = std::max(worst_mass, e.mass_identity_error);
    const double two_pi = 2.0 * kPi;
    bool ok = scan.found_insolvable && scan.last_solvable >= two_pi && scan.last_solvable <= two_pi + 0.1 &&
              scan.first_insolvable < two_pi;
    p.degree = 0;
    std::vector<double> t0 = {10.0, 8.0, 6.0, 4.0, 2.0, 1.0, 0.5, 0.25, 0.1};
    const auto scan0 = continuation_in_t(p, t0);
    for (const auto& e : scan0.entries)
      if (e.solvable) worst_mass = std::max(worst_mass, e.mass_identity_error);
    ok = ok && !scan0.found_insolvable && worst_mass <= 1e-8;
    os << "N=" << n << " d=1: last solvable t=" << scan.last_solvable << " first insolvable t="
       << scan.first_insolvable << " (2pi=" << two_pi << "); d=0 insolvable found=" << scan0.found_insolvable
       << "; max mass identity error=" << worst_mass;
    return ok;
  });
}

/// 8. Second-order grid convergence for smooth m.
inline CriterionResult criterion_8(const Config&) {
  return detail::timed(8, "vortex grid convergence N=32,64,128", [&](std::ostream& os) {
    std::vector<std::vector<double>> sol;
    for (int n : {32, 64, 128}) {
      VortexProblem p;
      p.grid_n = n;
      p.degree = 1;
      p.t_param = 10.0;
      p.phi0_sq = manufactured_m(n);
      const auto r = solve_vortex(p);
      if (!r.solvable) {
        os << "N=" << n << " did not converge: " << r.diagnosis;
        return false;
      }
      sol.push_back(r.solution.u);
    }
    auto diff = [](const std::vector<double>& coarse, int nc, const std::vector<double>& fine) {
      double m = 0.0;
      for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) m = std::max(m, std::abs(coarse[i * nc + j] - fine[(2 * i) * (2 * nc) + 2 * j]));
      return m;
    };
    const double e1 = diff(sol[0], 32, sol[1]);
    const double e2 = diff(sol[1], 64, sol[2]);
    const double ratio = e1 / e2;
    os << "|u32-u64|=" << e1 << " |u64-u128|=" << e2 << " ratio=" << ratio;
    return ratio >= 3.5 && ratio <= 4.5;
  });
}

namespace detail {

// Brute force over subsheaves ⊕_{i∈A} O(dᵢ − kᵢ), 0 ≤ kᵢ ≤ 12.
inline PairClass quot_brute_force(const std::vector<long>& d, const std::vector<bool>& phi, const Rational& tau) {
  const int r = static_cast<int>(d.size());
  long total = 0;
  for (long x : d) total += x;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int rk = static_cast<int>(idx.size());
    bool killed = true;
    for (int i : idx) killed = killed && !phi[i];
    std::vector<long> k(rk, 0);
    while (true) {
      long deg = 0;
      for (int t = 0; t < rk; ++t) deg += d[idx[t]] - k[t];
      if (rk < r && Rational(total - deg, r - rk) <= -tau) return PairClass::NotPolystable;
      if (killed && Rational(deg, rk) >= -tau) return PairClass::NotPolystable;
      int t = 0;
      while (t < rk && ++k[t] > 12) k[t++] = 0;
      if (t == rk) break;
    }
  }
  return PairClass::Stable;
}

}  // namespace detail

/// 9. Split-pair classifiers against enumerated verdicts.
inline CriterionResult criterion_9(const Config&) {
  return detail::timed(9, "split-pair classifiers vs enumeration", [&](std::ostream& os) {
    int oriented = 0, quot = 0, bad = 0;
    std::ostringstream first;
    const std::vector<Rational> taus = {Rational(-4), Rational(-5, 2), Rational(-1), Rational(0), Rational(1, 2),
                                        Rational(2), Rational(7, 3), Rational(10)};
    for (long d1 = -3; d1 <= 3; ++d1)
      for (long d2 = -3; d2 <= 3; ++d2)
        for (int pat = 0; pat < 4; ++pat) {
          const std::vector<bool> phi = {bool(pat & 1), bool(pat & 2)};
          SplitPairData p;
          p.summand_degrees = {d1, d2};
          p.phi_nonzero = phi;
          if (pat == 0) {
            const PairClass want = d1 == d2 ? PairClass::PolystableNotStable : PairClass::NotPolystable;
            ++oriented;
            if (oriented_pair_classify(p).cls != want) {
              ++bad;
              if (first.str().empty()) first << " oriented d=(" << d1 << "," << d2 << ") phi=0";
            }
          } else {
            long lim = 1000;
            if (phi[0]) lim = std::min(lim, d1);
            if (phi[1]) lim = std::min(lim, d2);
            for (long dd = 0; dd <= 3; ++dd) {
              if (dd > lim) continue;
              p.d_phi_degree = dd;
              // O(D_φ) destabilizes iff its slope is at least μ(E) = (d₁+d₂)/2.
              const PairClass want =
                  Rational(dd) < Rational(d1 + d2, 2) ? PairClass::Stable : PairClass::NotPolystable;
              ++oriented;
              if (oriented_pair_classify(p).cls != want) {
                ++bad;
                if (first.str().empty()) first << " oriented d=(" << d1 << "," << d2 << ") D=" << dd;
              }
            }
          }
          for (const auto& tau : taus) {
            SplitPairData q;
            q.summand_degrees = {d1, d2};
            q.phi_nonzero = phi;
            q.tau = tau;
            ++quot;
            if (quot_pair_classify(q).cls != detail::quot_brute_force(q.summand_degrees, phi, tau)) {
              ++bad;
              if (first.str().empty()) first << " quot d=(" << d1 << "," << d2 << ") tau=" << tau;
            }
          }
        }
    // Worked cases.
    struct Case {
      std::vector<long> d;
      std::vector<bool> phi;
      Rational tau;
      PairClass want;
    };
    const std::vector<Case> cases = {{{1, 0}, {true, true}, Rational(10), PairClass::Stable},
                                     {{1, 0}, {false, true}, Rational(10), PairClass::NotPolystable},
                                     {{1, 0}, {true, true}, Rational(-100), PairClass::NotPolystable}};
    for (const auto& c : cases) {
      SplitPairData q;
      q.summand_degrees = c.d;
      q.phi_nonzero = c.phi;
      q.tau = c.tau;
      ++quot;
      if (quot_pair_classify(q).cls != c.want) ++bad;
    }
    os << "oriented cases=" << oriented << " quot cases=" << quot << " disagreements=" << bad << first.str();
    return bad == 0;
  });
}

/// 10. ‖f(h)v‖ ≤ ‖g(h)v‖ when |f| ≤ |g| on Spec h, and the exponential
/// inequalities with α ∈ (0,1).
inline CriterionResult criterion_10(const Config& cfg) {
  return detail::timed(10, "matrix-function monotony and eta bounds", [&](std::ostream& os) {
    Rng rng(cfg.seed + 10);
    using Fn = std::function<double(double)>;
    struct Pair {
      Fn f, g;
      const char* name;
    };
    const std::vector<Pair> pairs = {
        {[](double t) { return std::sin(t); }, [](double t) { return t; }, "sin<=id"},
        {[](double t) { return std::tanh(t); }, [](double t) { return t; }, "tanh<=id"},
        {[](double t) { return theta(t); }, [](double) { return 1.0; }, "theta<=1"},
        {[](double t) { return std::exp(-t * t); }, [](double) { return 1.0; }, "gauss<=1"},
        {[](double t) { return 1.0 / (1.0 + t * t); }, [](double t) { return eta(-std::abs(t)); }, "lorentz<=eta(-|t|)"},
        {[](double t) { return t; }, [](double t) { return psi(std::abs(t)) * std::abs(t); }, "id<=|e^|t|-1|"},
    };
    int violations = 0, checks = 0;
    const int samples = detail::count(cfg, 300);
    for (const double m : {0.5, 1.0, 5.0}) {
      for (int k = 0; k < samples; ++k) {
        const int n = uniform_int(rng, 1, 6);
        CMatrix h = random_hermitian(rng, n);
        const double op = Eigen::SelfAdjointEigenSolver<CMatrix>(h).eigenvalues().cwiseAbs().maxCoeff();
        h *= (op > 0 ? uniform(rng, 0.1, 1.0) * m / op : 1.0);
        const CVector v = random_vector(rng, n);
        for (const auto& pr : pairs) {
          ++checks;
          if ((matrix_function(pr.f, h) * v).norm() > (matrix_function(pr.g, h) * v).norm() + 1e-10) ++violations;
        }
        // Remark item 3(c): (1/2M)‖x‖² ≤ n‖η(nh)x‖² for n ≥ 1/M.
        const double nn = uniform(rng, 1.0 / m, 100.0 / m);
        const double lhs = v.squaredNorm() / (2.0 * m);
        const double rhs = nn * (matrix_function([&](double t) { return eta(nn * t); }, h) * v).squaredNorm();
        ++checks;
        if (lhs > rhs + 1e-10 * (1.0 + rhs)) ++violations;
      }
      // Scalar items on a grid.
      for (int i = 0; i <= 200; ++i) {
        const double u = -m + 2.0 * m * i / 200.0;
        for (int j = 0; j <= 100; ++j) {
          const double nn = (1.0 + 99.0 * j / 100.0) / m;
          const double e = std::abs(std::expm1(nn * u));
          checks += 2;
          if (1.0 / (2.0 * m) > nn * eta(nn * u) * eta(nn * u) + 1e-12) ++violations;
          if (e < std::abs(u) / (2.0 * m) - 1e-12) ++violations;
          for (const double al : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            checks += 2;
            const double item1 = nn * u >= std::log(al) ? al * nn * std::abs(u) : 1.0 - al;
            if (e < item1 - 1e-12) ++violations;
            if (e < std::min(nn * al, (1.0 - al) / m) * std::abs(u) - 1e-12) ++violations;
          }
        }
      }
    }
    os << "checks=" << checks << " violations=" << violations;
    return violations == 0;
  });
}

inline std::vector<CriterionResult> run_all(const Config& cfg) {
  return {criterion_1(cfg), criterion_2(cfg), criterion_3(cfg), criterion_4(cfg), criterion_5(cfg),
          criterion_6(cfg), criterion_7(cfg), criterion_8(cfg), criterion_9(cfg), criterion_10(cfg)};
}

inline std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " :: " << r.detail << " (" << r.seconds
     << "s)";
  return os.str();
}

}  // namespace momap::selftest
