#include <gtest/gtest.h>

#include "momap/selftest.hpp"

using namespace momap;
using momap::selftest::Rng;

namespace {

ActionDescriptor plus_minus(RationalVector tau = {}) {
  return ActionDescriptor::from_weights(1, ActionKind::Linear, {{Rational(1)}, {Rational(-1)}}, std::move(tau));
}

CVector vec(std::initializer_list<cplx> xs) {
  CVector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (cplx x : xs) v(i++) = x;
  return v;
}

CMatrix scalar(double x) { return CMatrix::Constant(1, 1, x); }

ActionDescriptor projective_gl2() {
  return ActionDescriptor::standard(GroupDescriptor::general_linear(2), ActionKind::Projective);
}

CMatrix diag2(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(WeightValue, InfinityAbsorbsAndOrders) {
  const auto inf = WeightValue::plus_infinity();
  EXPECT_TRUE((inf + WeightValue::finite(-5)).infinite);
  EXPECT_TRUE(WeightValue::finite(3) < inf);
  EXPECT_FALSE(inf < inf);
  EXPECT_TRUE(WeightValue::finite(-1) < WeightValue::finite(0));
  EXPECT_EQ((WeightValue::finite(1) + WeightValue::finite(2)).value, 3.0);
}

TEST(ActionDescriptor, RejectsBadInput) {
  const auto g = GroupDescriptor::general_linear(2);
  auto rep = g.hermitian_basis();
  rep[0](0, 1) = 1.0;  // no longer Hermitian
  EXPECT_THROW(ActionDescriptor::from_matrices(g, ActionKind::Linear, rep), Error);
  // Not a homomorphism: scale one generator.
  auto rep2 = GroupDescriptor::special_linear(2).hermitian_basis();
  rep2[0] *= 2.0;
  EXPECT_THROW(ActionDescriptor::from_matrices(GroupDescriptor::special_linear(2), ActionKind::Linear, rep2), Error);
  RVector tau(1);
  tau << 1.0;
  EXPECT_THROW(ActionDescriptor::standard(g, ActionKind::Projective, tau), Error);
  EXPECT_THROW(ActionDescriptor::standard(GroupDescriptor::special_linear(2), ActionKind::Linear, tau), Error);
  EXPECT_THROW(projective_gl2().point(CVector::Zero(2)), Error);
}

TEST(MomentValue, SpecExamples) {
  const auto a = plus_minus();
  EXPECT_NEAR(moment_value(a, a.point(vec({1, 1}))).norm(), 0.0, 1e-15);
  const CMatrix m = moment_value(a, a.point(vec({2, 1})));
  EXPECT_NEAR(m(0, 0).real(), 1.5, 1e-15);
  const auto p = projective_gl2();
  const CMatrix mp = moment_value(p, p.point(vec({1, 0})));
  EXPECT_NEAR(p.group().pairing(mp, diag2(1, -1)), 1.0 / (2.0 * kPi), 1e-14);
}

TEST(MomentValue, CentralShiftFollowsTau) {
  const auto a = plus_minus({Rational(-2)});
  // ⟨iμ_τ(v), 1⟩ = ½(|v₁|² − |v₂|²) + τ
  EXPECT_NEAR(moment_value(a, a.point(vec({2, 0})))(0, 0).real(), 2.0 - 2.0, 1e-15);
  EXPECT_NEAR(a.tau_pairing(scalar(1.0)), -2.0, 1e-15);
}

TEST(MomentValue, PairingCharacterizesElement) {
  Rng rng(21);
  for (int k = 0; k < 30; ++k) {
    const auto a = selftest::random_action(rng);
    const PointState x = a.point(selftest::random_vector(rng, a.dim_V()));
    const CMatrix m = moment_value(a, x);
    EXPECT_LT((m - m.adjoint()).norm(), 1e-12);
    EXPECT_TRUE(a.group().contains(m, 1e-10));
    for (const auto& b : a.group().hermitian_basis()) {
      const CMatrix rb = a.rho(b);
      double direct = (x.v.adjoint() * rb * x.v)(0, 0).real();
      if (a.kind() == ActionKind::Linear) direct = 0.5 * direct + a.tau_pairing(b);
      else direct /= 2.0 * kPi * x.v.squaredNorm();
      EXPECT_NEAR(a.group().pairing(m, b), direct, 1e-10 * (1.0 + std::abs(direct)));
    }
  }
}

TEST(FundamentalField, SpecExamples) {
  const auto a = plus_minus();
  const PointState x = a.point(vec({2, 1}));
  EXPECT_LT(fundamental_field(a, scalar(0.0), x).norm(), 1e-15);
  EXPECT_LT((fundamental_field(a, scalar(1.0), x) - vec({2, -1})).norm(), 1e-15);
  const auto p = projective_gl2();
  CMatrix e11 = CMatrix::Zero(2, 2);
  e11(0, 0) = 1.0;
  EXPECT_LT(fundamental_field(p, e11, p.point(vec({1, 0}))).norm(), 1e-15);
}

TEST(WeightAlongRay, SpecExamples) {
  const auto a = plus_minus();
  const PointState x11 = a.point(vec({1, 1}));
  EXPECT_NEAR(weight_along_ray(a, scalar(1.0), x11, 0.0), 0.0, 1e-15);
  for (double t : {0.5, 2.0, 10.0})
    EXPECT_NEAR(weight_along_ray(a, scalar(1.0), x11, t), 0.5 * (std::exp(2 * t) - std::exp(-2 * t)),
                1e-12 * std::exp(2 * t));
  const PointState x01 = a.point(vec({0, 1}));
  for (double t : {0.0, 1.0, 5.0}) EXPECT_NEAR(weight_along_ray(a, scalar(1.0), x01, t), -0.5 * std::exp(-2 * t), 1e-15);
}

TEST(MaximalWeight, SpecExamples) {
  const auto a = plus_minus();
  EXPECT_TRUE(maximal_weight(a, scalar(1.0), a.point(vec({1, 1}))).infinite);
  const auto w = maximal_weight(a, scalar(1.0), a.point(vec({0, 1})));
  EXPECT_FALSE(w.infinite);
  EXPECT_EQ(w.value, 0.0);
  const auto p = projective_gl2();
  const auto wp = maximal_weight(p, diag2(1, -1), p.point(vec({1, 1})));
  EXPECT_FALSE(wp.infinite);
  EXPECT_NEAR(wp.value, 1.0 / (2.0 * kPi), 1e-14);
  EXPECT_NEAR(maximal_weight(p, diag2(1, -1), p.point(vec({0, 1}))).value, -1.0 / (2.0 * kPi), 1e-14);
}

TEST(MaximalWeight, ZeroDirectionAndHomogeneity) {
  Rng rng(22);
  for (int k = 0; k < 40; ++k) {
    const auto a = selftest::random_action(rng);
    const PointState x = a.point(selftest::random_vector(rng, a.dim_V()));
    const int n = a.group().ambient_dim();
    const auto w0 = maximal_weight(a, CMatrix::Zero(n, n), x);
    EXPECT_FALSE(w0.infinite);
    EXPECT_EQ(w0.value, 0.0);
    const CMatrix xi = selftest::random_ik(rng, a.group());
    const auto w1 = maximal_weight(a, xi, x);
    const auto w3 = maximal_weight(a, 3.0 * xi, x);
    EXPECT_EQ(w1.infinite, w3.infinite);
    if (!w1.infinite) EXPECT_NEAR(w3.value, 3.0 * w1.value, 1e-9 * (1.0 + std::abs(w1.value)));
  }
}

TEST(MaximalWeight, UnitaryEquivariance) {
  Rng rng(23);
  for (int k = 0; k < 40; ++k) {
    const auto a = selftest::random_action(rng);
    const PointState x = a.point(selftest::random_vector(rng, a.dim_V()));
    const CMatrix xi = selftest::random_ik(rng, a.group());
    // k = exp(iη) with η ∈ i𝔨, acting by exp(ρ_*(iη)).
    const CMatrix eta = selftest::random_ik(rng, a.group());
    const CMatrix kk = CMatrix(cplx(0, 1) * eta).exp();
    const PointState kx = act_exp(a, cplx(0, 1) * eta, x);
    const CMatrix xi_k = kk * xi * kk.adjoint();
    const auto w = maximal_weight(a, xi, x);
    const auto wk = maximal_weight(a, xi_k, kx);
    EXPECT_EQ(w.infinite, wk.infinite);
    if (!w.infinite && !wk.infinite) EXPECT_NEAR(w.value, wk.value, 1e-10 * (1.0 + std::abs(w.value)));
  }
}

TEST(WeightLimitConsistency, SpecExamples) {
  const auto a = plus_minus();
  EXPECT_LE(weight_limit_consistency(a, scalar(1.0), a.point(vec({0, 1}))), 1e-12);
  EXPECT_EQ(weight_limit_consistency(a, scalar(0.0), a.point(vec({1, 1}))), 0.0);
  EXPECT_THROW(weight_limit_consistency(a, scalar(1.0), a.point(vec({1, 1}))), Error);
  const auto p = projective_gl2();
  EXPECT_LE(weight_limit_consistency(p, diag2(1, -1), p.point(vec({1, 1}))), 1e-10);
}

TEST(StabilizerLemma, MomentCommutesWithStabilizer) {
  // v supported on one weight of the diagonal torus in GL(3): diag(0, *, *) stabilizes e₁.
  const auto a = ActionDescriptor::standard(GroupDescriptor::general_linear(3), ActionKind::Linear);
  const PointState x = a.point(CVector::Unit(3, 0) * 1.7);
  const CMatrix m = moment_value(a, x);
  for (int i = 1; i < 3; ++i)
    for (int j = 1; j < 3; ++j) {
      CMatrix u = CMatrix::Zero(3, 3);
      u(i, j) = 1.0;
      u(j, i) -= 1.0;
      u(i, j) += cplx(0, 1);
      u(j, i) += cplx(0, 1);
      u = antihermitian_part(u);
      EXPECT_LT(fundamental_field(a, u, x).norm(), 1e-14);
      EXPECT_LT(bracket(u, m).norm(), 1e-10);
    }
}

TEST(ActHermitian, LinearMatchesExponentialAndGuardsOverflow) {
  Rng rng(24);
  const auto a = ActionDescriptor::standard(GroupDescriptor::general_linear(3), ActionKind::Linear);
  const CMatrix s = selftest::random_hermitian(rng, 3);
  const PointState x = a.point(selftest::random_vector(rng, 3));
  EXPECT_LT((act_hermitian(a, s, x).v - CMatrix(s.exp()) * x.v).norm(), 1e-10 * (1.0 + x.v.norm()));
  EXPECT_THROW(act_hermitian(a, 1000.0 * CMatrix::Identity(3, 3), x), Error);
  const auto p = ActionDescriptor::standard(GroupDescriptor::general_linear(3), ActionKind::Projective);
  const PointState y = act_hermitian(p, 1000.0 * s, p.point(x.v));
  EXPECT_NEAR(y.v.norm(), 1.0, 1e-12);
}

TEST(Monotonicity, RaysAreNondecreasing) {
  Rng rng(25);
  for (int k = 0; k < 60; ++k) {
    const auto a = selftest::random_action(rng);
    const PointState x = a.point(selftest::random_vector(rng, a.dim_V()));
    const CMatrix xi = selftest::random_ik(rng, a.group());
    double prev = weight_along_ray(a, xi, x, -3.0);
    for (int i = 1; i <= 60; ++i) {
      const double val = weight_along_ray(a, xi, x, -3.0 + 0.1 * i);
      EXPECT_GE(val, prev - 1e-10 * std::max(1.0, std::abs(prev)));
      prev = val;
    }
  }
}
