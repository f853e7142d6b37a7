#include <gtest/gtest.h>

#include "momap/selftest.hpp"

using namespace momap;
using momap::selftest::Rng;

namespace {

ActionDescriptor plus_minus() {
  return ActionDescriptor::from_weights(1, ActionKind::Linear, {{Rational(1)}, {Rational(-1)}});
}

CVector vec(std::initializer_list<cplx> xs) {
  CVector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (cplx x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST(SolveOptions, Validation) {
  SolveOptions o;
  EXPECT_NO_THROW(o.validate());
  o.eps_min = 2.0;
  EXPECT_THROW(o.validate(), Error);
  o = SolveOptions{};
  o.step_shrink = 1.0;
  EXPECT_THROW(o.validate(), Error);
}

TEST(StabilizerComplement, SpecExamples) {
  const auto a = plus_minus();
  EXPECT_EQ(stabilizer_complement(a, a.point(vec({1, 1}))).cols(), 1);
  EXPECT_EQ(stabilizer_complement(a, a.point(vec({1, 0}))).cols(), 1);
  EXPECT_EQ(stabilizer_complement(a, a.point(vec({0, 0}))).cols(), 0);
  const auto p = ActionDescriptor::standard(GroupDescriptor::general_linear(2), ActionKind::Projective);
  // [e₁] is fixed by the diagonal torus and the unitary stabilizer is U(1) × U(1).
  EXPECT_EQ(stabilizer_complement(p, p.point(vec({1, 0}))).cols(), 2);
}

TEST(Initialize, SatisfiesTheEpsOneEquation) {
  const auto a = plus_minus();
  const auto init = initialize(a, a.point(vec({2, 1})));
  EXPECT_NEAR(init.s1(0, 0).real(), -1.5, 1e-15);
  EXPECT_NEAR(init.x0.v(0).real(), 2.0 * std::exp(1.5), 1e-12);
  EXPECT_NEAR(init.x0.v(1).real(), std::exp(-1.5), 1e-12);
  const auto z = initialize(a, a.point(vec({1, 1})));
  EXPECT_LT(z.s1.norm(), 1e-15);
  EXPECT_LT((z.x0.v - vec({1, 1})).norm(), 1e-15);

  Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    const auto b = selftest::random_action(rng);
    const PointState x = b.point(0.7 * selftest::random_vector(rng, b.dim_V()));
    const auto in = initialize(b, x);
    const RMatrix full = RMatrix::Identity(b.group().dim(), b.group().dim());
    const PerturbedProblem prob(b, in.x0, full);
    const RVector r = prob.residual(1.0, prob.coords_of(in.s1));
    EXPECT_LT(r.norm(), 1e-12 * (1.0 + in.s1.norm()));
  }
}

TEST(Initialize, ProjectiveFixedPoint) {
  const auto p = ActionDescriptor::from_weights(1, ActionKind::Projective, {{Rational(1)}, {Rational(-1)}});
  const auto in = initialize(p, p.point(vec({1, 0})));
  EXPECT_NEAR(std::abs(in.x0.v(0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(in.x0.v(1)), 0.0, 1e-15);
}

TEST(Residual, ClosedFormBalance) {
  const auto a = plus_minus();
  const PointState x0 = a.point(vec({2, 1}));
  const PerturbedProblem prob(a, x0, RMatrix::Identity(1, 1));
  RVector y(1);
  y << -std::log(2.0) / 2.0;
  EXPECT_LT(prob.residual(0.0, y).norm(), 1e-14);
  y << 0.0;
  EXPECT_NEAR(prob.residual(0.0, y)(0), 1.5, 1e-15);
}

TEST(Jacobian, SpecExampleAndFiniteDifferenceAgreement) {
  const auto a = plus_minus();
  const PerturbedProblem prob(a, a.point(vec({1, 1})), RMatrix::Identity(1, 1));
  const RVector y0 = RVector::Zero(1);
  EXPECT_NEAR(prob.jacobian(1.0, y0, JacobianMode::Exact)(0, 0), 3.0, 1e-13);

  Rng rng(42);
  for (int k = 0; k < 60; ++k) {
    const auto b = selftest::random_action(rng);
    const PointState x = b.point(selftest::random_vector(rng, b.dim_V()));
    const RMatrix c = stabilizer_complement(b, x);
    if (c.cols() == 0) continue;
    const PerturbedProblem p(b, x, c);
    RVector y(c.cols());
    for (int i = 0; i < y.size(); ++i) y(i) = 0.5 * selftest::gauss(rng);
    const double eps = 0.3;
    const RMatrix je = p.jacobian(eps, y, JacobianMode::Exact);
    const RMatrix jf = p.jacobian(eps, y, JacobianMode::FiniteDifference);
    EXPECT_LE((je - jf).norm(), 1e-4 * (1.0 + je.norm()));
    // The moment part is the Hessian of a convex function in s: symmetric part ≥ ε·I.
    const RMatrix sym = 0.5 * (je + je.transpose());
    const double lo = Eigen::SelfAdjointEigenSolver<RMatrix>(sym).eigenvalues().minCoeff();
    EXPECT_GE(lo, -1e-8);
  }
}

TEST(SolveMomentZero, SpecExamples) {
  const auto a = plus_minus();
  const auto r = solve_moment_zero(a, a.point(vec({2, 1})));
  ASSERT_TRUE(r.polystable());
  const auto& c = r.poly();
  EXPECT_NEAR(c.x_star.v(0).real(), std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(c.x_star.v(1).real(), std::sqrt(2.0), 1e-8);
  // e^{s_final}x₀ = e^{s_final + 3/2}·x on the first coordinate.
  EXPECT_NEAR(c.s_final(0, 0).real() + 1.5, -std::log(2.0) / 2.0, 1e-8);
  EXPECT_LE(c.mu_residual, 1e-10);
  EXPECT_EQ(r.stabilizer_dim, 0);

  const auto u = solve_moment_zero(a, a.point(vec({1, 0})));
  ASSERT_TRUE(u.unstable());
  EXPECT_NEAR(u.unst().sigma(0, 0).real(), -1.0, 1e-10);
  EXPECT_FALSE(u.unst().weight_at_sigma.infinite);
  EXPECT_NEAR(u.unst().weight_at_sigma.value, 0.0, 1e-12);

  const auto z = solve_moment_zero(a, a.point(vec({0, 0})));
  ASSERT_TRUE(z.polystable());
  EXPECT_LT(z.poly().s_final.norm(), 1e-15);
  EXPECT_LT(z.poly().x_star.v.norm(), 1e-15);
}

TEST(SolveMomentZero, PathInvariants) {
  const auto a = plus_minus();
  const SolveOptions opt;
  const auto r = solve_moment_zero(a, a.point(vec({3, 0.2})), opt);
  ASSERT_TRUE(r.polystable());
  const double mu0 = moment_coordinates(a, r.x0).norm();
  for (const auto& t : r.trace) {
    if (t.eps > 0.0) EXPECT_LE(t.s_norm, mu0 / t.eps * (1.0 + 1e-6) + 1e-12);
    EXPECT_LE(t.residual_norm, 10.0 * opt.newton_tol * (1.0 + 4.5));
  }
}

TEST(SolveMomentZero, UnstableCertificateShape) {
  // τ > 0 on weights (1, 1): every nonzero v is unstable.
  const auto a = ActionDescriptor::from_weights(1, ActionKind::Linear, {{Rational(1)}, {Rational(1)}}, {Rational(1)});
  const auto r = solve_moment_zero(a, a.point(vec({1, 2})));
  ASSERT_TRUE(r.unstable());
  const auto& c = r.unst();
  EXPECT_NEAR(c.sigma.norm(), 1.0, 1e-10);
  EXPECT_LT(c.weight_at_sigma.value, 0.0);
  EXPECT_FALSE(c.weight_at_sigma.infinite);
}

TEST(SolveMomentZero, StabilizerComponentShortcut) {
  // The origin under weights (1,1), τ = 1: iμ(0) = τ lies in i𝔨₀ = everything.
  const auto a = ActionDescriptor::from_weights(1, ActionKind::Linear, {{Rational(1)}, {Rational(1)}}, {Rational(1)});
  const auto r = solve_moment_zero(a, a.point(vec({0, 0})));
  ASSERT_TRUE(r.unstable());
  EXPECT_TRUE(r.unst().from_stabilizer);
  EXPECT_NEAR(r.unst().sigma(0, 0).real(), -1.0, 1e-14);
  EXPECT_NEAR(r.unst().weight_at_sigma.value, -1.0, 1e-14);
}

TEST(SolveMomentZero, FiniteDifferenceModeAgrees) {
  const auto a = selftest::tensor_gl2(ActionKind::Linear, -1.0);
  Rng rng(43);
  SolveOptions fd;
  fd.jacobian_mode = JacobianMode::FiniteDifference;
  for (int k = 0; k < 5; ++k) {
    const PointState x = a.point(selftest::random_vector(rng, 4));
    const auto e = solve_moment_zero(a, x);
    const auto f = solve_moment_zero(a, x, fd);
    EXPECT_EQ(e.variant_name(), std::string(f.variant_name()));
    if (e.polystable() && f.polystable()) EXPECT_LT((e.poly().x_star.v - f.poly().x_star.v).norm(), 1e-6);
  }
}

TEST(SolveMomentZero, ProjectiveMomentZero) {
  // SL(2) on ℙ(Sym² ℂ²): [x² + y²] has a zero of the moment map in its orbit.
  const auto a = selftest::sym2_sl2(ActionKind::Projective);
  CVector q(3);
  q << 1.0, 0.5, 1.0;
  const auto r = solve_moment_zero(a, a.point(q));
  ASSERT_TRUE(r.polystable());
  EXPECT_LE(r.poly().mu_residual, 1e-9);
  q << 1.0, 0.0, 0.0;
  const auto u = solve_moment_zero(a, a.point(q));
  ASSERT_TRUE(u.unstable());
  EXPECT_LT(u.unst().weight_at_sigma.value, 0.0);
}

TEST(SolveMomentZero, AgreesWithExactOnRankOneTori) {
  Rng rng(44);
  const SolveOptions opt;
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    const auto a = selftest::random_torus_action(rng, 1, selftest::uniform_int(rng, 1, 6), ActionKind::Linear);
    CVector v = selftest::random_vector(rng, a.dim_V());
    for (int j = 0; j < v.size(); ++j)
      if (selftest::uniform_int(rng, 0, 2) == 0) v(j) = 0.0;
    const auto exact = torus_classify(a, v);
    const auto r = solve_moment_zero(a, a.point(v), opt);
    if (r.inconclusive()) continue;
    ++checked;
    EXPECT_EQ(r.polystable(), is_polystable(exact.cls));
  }
  EXPECT_GT(checked, 50);
}
