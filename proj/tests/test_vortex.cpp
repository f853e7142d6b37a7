#include <gtest/gtest.h>

#include "momap/selftest.hpp"

using namespace momap;

namespace {

VortexProblem constant_problem(int n, int d, double m, double t) {
  VortexProblem p;
  p.grid_n = n;
  p.degree = d;
  p.phi0_sq.assign(n * n, m);
  p.t_param = t;
  return p;
}

VortexProblem bump_problem(int n, int d, double t) {
  VortexProblem p;
  p.grid_n = n;
  p.degree = d;
  p.phi0_sq = selftest::gaussian_bump(n, 2.0);
  p.t_param = t;
  return p;
}

}  // namespace

TEST(VortexProblem, Validation) {
  auto p = constant_problem(8, 1, 1.0, 10.0);
  EXPECT_NO_THROW(p.validate());
  p.phi0_sq[3] = -1.0;
  EXPECT_THROW(p.validate(), Error);
  p = constant_problem(8, 1, 0.0, 10.0);
  EXPECT_THROW(p.validate(), Error);
  p = constant_problem(8, -1, 1.0, 10.0);
  EXPECT_THROW(p.validate(), Error);
  p = constant_problem(8, 1, 1.0, 10.0);
  p.phi0_sq.pop_back();
  EXPECT_THROW(p.validate(), Error);
}

TEST(Laplacian, RowSumsVanishAndStencil) {
  const int n = 6;
  std::vector<double> u(n * n, 0.0);
  u[2 * n + 3] = 1.0;
  const auto l = laplacian(n, u);
  double sum = 0.0;
  for (double x : l) sum += x;
  EXPECT_NEAR(sum, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(l[2 * n + 3], -4.0 * n * n);
  EXPECT_DOUBLE_EQ(l[1 * n + 3], 1.0 * n * n);
  EXPECT_DOUBLE_EQ(l[2 * n + 4], 1.0 * n * n);
  // Wraparound.
  std::vector<double> w(n * n, 0.0);
  w[0] = 1.0;
  EXPECT_DOUBLE_EQ(laplacian(n, w)[(n - 1) * n], 1.0 * n * n);
  EXPECT_DOUBLE_EQ(laplacian(n, w)[n - 1], 1.0 * n * n);
}

TEST(AssembleEquation, SpecExamples) {
  const double t = 9.0, c0 = 2.0 * kPi;
  auto p = constant_problem(8, 1, 2.0 * (t - c0), t);
  for (double r : assemble_equation(p, std::vector<double>(64, 0.0))) EXPECT_NEAR(r, 0.0, 1e-13);
  p = constant_problem(8, 1, 3.0, t);
  const double uhat = 0.5 * std::log(2.0 * (t - c0) / 3.0);
  for (double r : assemble_equation(p, std::vector<double>(64, 0.3))) EXPECT_NEAR(r, -1.5 * std::exp(0.6) + (t - c0), 1e-12);
  for (double r : assemble_equation(p, std::vector<double>(64, uhat))) EXPECT_NEAR(r, 0.0, 1e-12);
  // Σ G·hc² = −½Σ m e^{2u} hc² + (t − c₀)
  const auto q = bump_problem(16, 1, t);
  std::vector<double> u(256);
  for (int k = 0; k < 256; ++k) u[k] = std::sin(0.1 * k);
  const auto g = assemble_equation(q, u);
  double lhs = 0.0, mass = 0.0;
  const double h2 = q.cell() * q.cell();
  for (int k = 0; k < 256; ++k) {
    lhs += g[k] * h2;
    mass += q.phi0_sq[k] * std::exp(2 * u[k]) * h2;
  }
  EXPECT_NEAR(lhs, -0.5 * mass + (t - c0), 1e-10);
}

TEST(SolveVortex, SpecExamples) {
  const auto ok = solve_vortex(bump_problem(64, 1, 10.0));
  ASSERT_TRUE(ok.solvable);
  EXPECT_LE(ok.solution.residual_inf, 1e-10);
  EXPECT_LE(ok.solution.mass_identity_error, 1e-8);
  const auto bad = solve_vortex(bump_problem(64, 1, 6.0));
  EXPECT_FALSE(bad.solvable);
  EXPECT_NE(bad.diagnosis.find("insolvable"), std::string::npos);
  const auto zero = solve_vortex(constant_problem(16, 0, 2.0, 1.0));
  ASSERT_TRUE(zero.solvable);
  for (double x : zero.solution.u) EXPECT_NEAR(x, 0.0, 1e-10);
}

TEST(SolveVortex, ConstantDataGivesConstantSolution) {
  const auto r = solve_vortex(constant_problem(24, 1, 0.7, 8.0));
  ASSERT_TRUE(r.solvable);
  const double uhat = 0.5 * std::log(2.0 * (8.0 - 2.0 * kPi) / 0.7);
  for (double x : r.solution.u) EXPECT_NEAR(x, uhat, 1e-9);
}

TEST(SolveVortex, MonotoneInT) {
  auto p = bump_problem(32, 1, 7.0);
  double prev = 0.0;
  for (double t : {7.0, 8.0, 10.0, 15.0}) {
    p.t_param = t;
    const auto r = solve_vortex(p);
    ASSERT_TRUE(r.solvable);
    double mass = 0.0;
    for (int k = 0; k < p.size(); ++k) mass += p.phi0_sq[k] * std::exp(2 * r.solution.u[k]);
    EXPECT_GT(mass, prev);
    prev = mass;
  }
}

TEST(ContinuationInT, SpecExamples) {
  const auto s = continuation_in_t(bump_problem(64, 1, 0.0), {10, 8, 7, 6.5, 6.3, 6.2});
  ASSERT_TRUE(s.found_insolvable);
  EXPECT_DOUBLE_EQ(s.first_insolvable, 6.2);
  EXPECT_DOUBLE_EQ(s.last_solvable, 6.3);
  for (const auto& e : s.entries)
    if (e.solvable) {
      EXPECT_LE(e.mass_identity_error, 1e-8);
    }

  const auto z = continuation_in_t(bump_problem(32, 0, 0.0), {10, 5, 1, 0.5, 0.1});
  EXPECT_FALSE(z.found_insolvable);

  auto scaled = bump_problem(64, 1, 0.0);
  for (double& m : scaled.phi0_sq) m *= 10.0;
  const auto s10 = continuation_in_t(scaled, {10, 8, 7, 6.5, 6.3, 6.2});
  EXPECT_DOUBLE_EQ(s10.first_insolvable, s.first_insolvable);
  EXPECT_DOUBLE_EQ(s10.last_solvable, s.last_solvable);

  EXPECT_THROW(continuation_in_t(bump_problem(16, 1, 0.0), {5, 6}), Error);
}
