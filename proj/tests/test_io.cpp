#include <gtest/gtest.h>

#include "momap/io.hpp"

using namespace momap;
using io::json;

namespace {

json torus_problem() {
  return json::parse(R"({"version": "1", "kind": "torus_action",
    "payload": {"rank": 1, "weights": [[1], [-1]], "tau": ["0"], "point": [2, [1, 0]]}})");
}

io::Problem parse(const json& j, bool strict = false) {
  io::SchemaContext ctx;
  ctx.strict = strict;
  return io::parse_problem(j, ctx);
}

ErrorCode code_of(const json& j, bool strict = false) {
  try {
    parse(j, strict);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Inconclusive;  // no error
}

}  // namespace

TEST(Canonical, SortedKeysAndFullPrecision) {
  const json j = json::parse(R"({"b": 0.1, "a": [1, true, null, "x"], "c": {"z": 1, "y": 2}})");
  EXPECT_EQ(io::canonical_dump(j), R"({"a":[1,true,null,"x"],"b":0.10000000000000001,"c":{"y":2,"z":1}})");
  EXPECT_EQ(json::parse(io::canonical_dump(j)), j);
}

TEST(Canonical, DigestIgnoresKeyOrderAndWhitespace) {
  const json a = json::parse(R"({"x": 1, "y": [1.5, 2]})");
  const json b = json::parse("{ \"y\" : [1.5,2],\n \"x\":1 }");
  EXPECT_EQ(io::digest(a), io::digest(b));
  EXPECT_NE(io::digest(a), io::digest(json::parse(R"({"x": 2, "y": [1.5, 2]})")));
  EXPECT_EQ(io::fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(io::fnv1a64("a"), 0xaf63dc4c8601ec8cull);
}

TEST(Parse, TorusProblem) {
  const auto p = parse(torus_problem());
  EXPECT_EQ(p.kind, io::ProblemKind::TorusAction);
  ASSERT_TRUE(p.action.has_value());
  EXPECT_EQ(p.action->action.dim_V(), 2);
  ASSERT_EQ(p.action->points.size(), 1u);
  EXPECT_EQ(p.action->points[0](0), cplx(2.0, 0.0));
  EXPECT_FALSE(p.action->many_points);
  EXPECT_EQ(torus_classify(p.action->action, p.action->points[0]).cls, StabilityClass::Stable);
}

TEST(Parse, RationalTau) {
  json j = torus_problem();
  j["payload"]["tau"] = json::array({"-1/2"});
  const auto p = parse(j);
  EXPECT_EQ(p.action->action.tau_exact()[0], Rational(-1, 2));
}

TEST(Parse, MatrixActionAndGroups) {
  const json j = json::parse(R"({"version": "1", "kind": "linear_action", "payload": {
      "group": {"type": "torus", "n": 1},
      "rep": {"matrices": [[[1, 0], [0, [-1, 0]]]]},
      "tau": [0.5],
      "points": [[1, 1], [0, 1]]}})");
  const auto p = parse(j);
  EXPECT_TRUE(p.action->many_points);
  EXPECT_EQ(p.action->points.size(), 2u);
  EXPECT_NEAR(p.action->action.tau_coordinates()(0), 0.5, 0);
  const json g = json::parse(R"({"version": "1", "kind": "projective_action", "payload": {
      "group": {"type": "product", "factors": [{"type": "SL", "n": 2}, {"type": "torus", "n": 1}]},
      "rep": {"standard": true}, "point": [1, 0, 0]}})");
  EXPECT_EQ(parse(g).action->action.group().dim(), 4);
  const json copies = json::parse(R"({"version": "1", "kind": "linear_action", "payload": {
      "group": {"type": "GL", "n": 2}, "rep": {"standard": true, "copies": 3}, "point": [1, 0, 0, 1, 1, 1]}})");
  EXPECT_EQ(parse(copies).action->action.dim_V(), 6);
}

TEST(Parse, SchemaErrors) {
  json j = torus_problem();
  j["version"] = "7";
  EXPECT_EQ(code_of(j), ErrorCode::Schema);
  j = torus_problem();
  j["kind"] = "nonsense";
  EXPECT_EQ(code_of(j), ErrorCode::Schema);
  j = torus_problem();
  j["payload"]["weights"] = json::array({json::array({1, 2})});
  EXPECT_EQ(code_of(j), ErrorCode::Schema);
  j = torus_problem();
  j["payload"]["point"] = json::array({1, 2, 3});
  EXPECT_EQ(code_of(j), ErrorCode::Schema);
  j = torus_problem();
  j["payload"]["tau"] = json::array({"1/0"});
  EXPECT_EQ(code_of(j), ErrorCode::Schema);
  j = torus_problem();
  j["payload"]["weights"] = json::array({json::array({0.5}), json::array({-1})});
  EXPECT_EQ(code_of(j), ErrorCode::Schema);
  // Non-Hermitian matrix representation.
  const json m = json::parse(R"({"version": "1", "kind": "linear_action", "payload": {
      "group": {"type": "torus", "n": 1}, "rep": {"matrices": [[[1, 1], [0, 1]]]}, "point": [1, 1]}})");
  EXPECT_EQ(code_of(m), ErrorCode::Schema);
}

TEST(Parse, UnknownFieldsStrictAndLenient) {
  json j = torus_problem();
  j["payload"]["colour"] = "blue";
  io::SchemaContext ctx;
  EXPECT_NO_THROW(io::parse_problem(j, ctx));
  ASSERT_EQ(ctx.warnings.size(), 1u);
  EXPECT_NE(ctx.warnings[0].find("colour"), std::string::npos);
  EXPECT_EQ(code_of(j, true), ErrorCode::Schema);
}

TEST(Parse, VortexAndPair) {
  const json v = json::parse(R"({"version": "1", "kind": "vortex", "seed": 4,
      "payload": {"grid_n": 8, "degree": 1, "t": 10, "phi0_sq": 1.5}})");
  const auto pv = parse(v);
  ASSERT_TRUE(pv.vortex.has_value());
  EXPECT_EQ(pv.vortex->problem.phi0_sq.size(), 64u);
  EXPECT_EQ(*pv.seed, 4);
  json bad = v;
  bad["payload"]["phi0_sq"] = json::array({1, 2});
  EXPECT_EQ(code_of(bad), ErrorCode::Schema);
  bad = v;
  bad["payload"].erase("t");
  EXPECT_EQ(code_of(bad), ErrorCode::Schema);

  const json p = json::parse(R"({"version": "1", "kind": "split_pair",
      "payload": {"summand_degrees": [3, 1], "phi_pattern": [false, true], "D_phi_degree": 1}})");
  const auto pp = parse(p);
  EXPECT_EQ(pp.pair->classifier, io::PairRequest::Classifier::Oriented);
  json q = p;
  q["payload"]["tau"] = "5/2";
  EXPECT_EQ(parse(q).pair->classifier, io::PairRequest::Classifier::Quot);
  EXPECT_EQ(parse(q).pair->data.tau, Rational(5, 2));
  q["payload"]["phi_pattern"] = json::array({true});
  EXPECT_EQ(code_of(q), ErrorCode::Schema);
}

TEST(Serialize, RecordsRoundTrip) {
  const auto p = parse(torus_problem());
  const auto& a = p.action->action;
  const auto r = solve_moment_zero(a, a.point(p.action->points[0]));
  const json j = io::to_json(r, true);
  EXPECT_EQ(j["variant"], "PolystableCert");
  EXPECT_FALSE(j["trace"].empty());
  const json back = json::parse(io::canonical_dump(j));
  EXPECT_NEAR(back["certificate"]["x_star"][0][0].get<double>(), std::sqrt(2.0), 1e-8);
  EXPECT_EQ(io::canonical_dump(back), io::canonical_dump(j));

  const json v = io::to_json(torus_classify(a, p.action->points[0]));
  EXPECT_EQ(v["class"], "Stable");
  EXPECT_EQ(v["method"], "ExactCone");
  EXPECT_TRUE(v.contains("witness"));
  EXPECT_EQ(io::to_json(WeightValue::plus_infinity()), "+inf");

  SplitPairData sp;
  sp.summand_degrees = {4, 1};
  sp.phi_nonzero = {false, false};
  const json pv = io::to_json(oriented_pair_classify(sp));
  EXPECT_EQ(pv["class"], "NotPolystable");
  EXPECT_EQ(pv["violated"]["degree"], 4);
}

TEST(Serialize, Deterministic) {
  const auto p = parse(torus_problem());
  const auto& a = p.action->action;
  const auto r1 = solve_moment_zero(a, a.point(p.action->points[0]));
  const auto r2 = solve_moment_zero(a, a.point(p.action->points[0]));
  EXPECT_EQ(io::canonical_dump(io::to_json(r1, true)), io::canonical_dump(io::to_json(r2, true)));
}
