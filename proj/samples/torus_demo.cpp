// C* acting on C^2 with weights (1, -1): classify a few points exactly, then
// run the continuity method on v = (2, 1) and print the balanced point.
#include <iostream>

#include "momap/momap.hpp"

using namespace momap;

int main() {
  const auto a = ActionDescriptor::from_weights(1, ActionKind::Linear, {{Rational(1)}, {Rational(-1)}});

  for (const auto& p : {std::pair{2.0, 1.0}, {1.0, 0.0}, {0.0, 0.0}}) {
    CVector v(2);
    v << p.first, p.second;
    const auto verdict = torus_classify(a, v);
    std::cout << "v = (" << p.first << ", " << p.second << "): " << to_string(verdict.cls) << "\n";
  }

  CVector v(2);
  v << 2.0, 1.0;
  const SolveOutcome r = solve_moment_zero(a, a.point(v));
  if (!r.polystable()) {
    std::cout << "solver: " << r.variant_name() << "\n";
    return 1;
  }
  const CVector& x = r.poly().x_star.v;
  std::cout << "x* = (" << x(0).real() << ", " << x(1).real() << "), |mu(x*)| = " << r.poly().mu_residual << "\n";
  return 0;
}
