#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "json.hpp"
#include "momap/momap.hpp"

namespace momap::io {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

enum class ProblemKind { LinearAction, ProjectiveAction, TorusAction, Vortex, SplitPair };

inline const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::LinearAction: return "linear_action";
    case ProblemKind::ProjectiveAction: return "projective_action";
    case ProblemKind::TorusAction: return "torus_action";
    case ProblemKind::Vortex: return "vortex";
    case ProblemKind::SplitPair: return "split_pair";
  }
  return "?";
}

/// Strict mode turns unknown fields into schema errors; otherwise they are collected as warnings.
struct SchemaContext {
  bool strict = false;
  std::vector<std::string> warnings;
};

struct ActionProblem {
  ActionDescriptor action;
  std::vector<CVector> points;
  std::vector<CMatrix> directions;              // for `weights`
  std::vector<RationalVector> exact_directions;  // same, when given exactly for a torus
  bool many_points = false;                     // input used "points" rather than "point"
};

struct VortexRequest {
  VortexProblem problem;
  std::vector<double> t_scan;
  double tol = 1e-10;
  int max_iter = 200;
};

struct PairRequest {
  enum class Classifier { Oriented, Quot };
  SplitPairData data;
  Classifier classifier = Classifier::Quot;
};

struct Problem {
  std::string version;
  ProblemKind kind = ProblemKind::TorusAction;
  std::optional<std::int64_t> seed;
  std::optional<ActionProblem> action;
  std::optional<VortexRequest> vortex;
  std::optional<PairRequest> pair;
};

// ---------------------------------------------------------------- canonical form

namespace detail {

inline void dump_canonical(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: keys already sorted
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_canonical(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_canonical(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      double d = j.get<double>();
      if (d == 0.0) d = 0.0;  // no "-0"
      if (!std::isfinite(d)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      out += buf;
      break;
    }
    default: out += j.dump();
  }
}

}  // namespace detail

/// Sorted keys, floats with 17 significant digits, no whitespace.
inline std::string canonical_dump(const json& j) {
  std::string s;
  detail::dump_canonical(j, s);
  return s;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string digest(const json& problem) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(fnv1a64(canonical_dump(problem))));
  return buf;
}

// ---------------------------------------------------------------- parsing

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::Schema, path + ": " + msg);
}

inline void check_fields(SchemaContext& ctx, const json& obj, const std::string& path,
                         const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (allowed.count(it.key())) continue;
    if (ctx.strict) fail(path, "unknown field '" + it.key() + "'");
    ctx.warnings.push_back(path + ": ignoring unknown field '" + it.key() + "'");
  }
}

inline const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

inline double get_double(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

inline long get_long(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

inline Rational get_rational(const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float()) return rational_from_integral_double(j.get<double>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "expected an integer or a rational string such as \"1/2\"");
}

inline RationalVector get_rational_vector(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  RationalVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline RVector get_real_vector(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  RVector out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    out(static_cast<Eigen::Index>(i)) = j[i].is_string() ? to_double(get_rational(j[i], p)) : get_double(j[i], p);
  }
  return out;
}

/// A number is real; [re, im] is complex.
inline cplx get_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  fail(path, "expected a number or an [re, im] pair");
}

inline CVector get_complex_vector(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array");
  CVector out(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = get_complex(j[i], path + "[" + std::to_string(i) + "]");
  return out;
}

/// Row-major: an array of rows.
inline CMatrix get_complex_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected an array of rows");
  const std::size_t r = j.size();
  const std::size_t c = j[0].is_array() ? j[0].size() : 0;
  if (c == 0) fail(path, "expected an array of rows");
  CMatrix m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  for (std::size_t a = 0; a < r; ++a) {
    if (!j[a].is_array() || j[a].size() != c) fail(path, "rows must have equal length");
    for (std::size_t b = 0; b < c; ++b)
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          get_complex(j[a][b], path + "[" + std::to_string(a) + "][" + std::to_string(b) + "]");
  }
  return m;
}

inline GroupDescriptor parse_group(SchemaContext& ctx, const json& j, const std::string& path) {
  check_fields(ctx, j, path, {"type", "n", "factors", "pairing_scale"});
  const std::string type = require(j, "type", path).is_string() ? j["type"].get<std::string>() : "";
  const double scale = j.contains("pairing_scale") ? get_double(j["pairing_scale"], path + ".pairing_scale") : 1.0;
  if (!(scale > 0.0)) fail(path, "pairing_scale must be positive");
  if (type == "product") {
    const json& f = require(j, "factors", path);
    if (!f.is_array() || f.empty()) fail(path + ".factors", "expected a nonempty array");
    std::vector<GroupDescriptor> fs;
    for (std::size_t i = 0; i < f.size(); ++i) fs.push_back(parse_group(ctx, f[i], path + ".factors[" + std::to_string(i) + "]"));
    return GroupDescriptor::product(std::move(fs));
  }
  const long n = get_long(require(j, "n", path), path + ".n");
  if (n < 1 || n > 64) fail(path + ".n", "must lie in [1, 64]");
  if (type == "GL") return GroupDescriptor::general_linear(static_cast<int>(n), scale);
  if (type == "SL") {
    if (n < 2) fail(path + ".n", "SL needs n >= 2");
    return GroupDescriptor::special_linear(static_cast<int>(n), scale);
  }
  if (type == "torus") return GroupDescriptor::torus(static_cast<int>(n), scale);
  fail(path + ".type", "expected GL, SL, torus or product");
}

inline std::vector<CVector> parse_points(const json& payload, const std::string& path) {
  std::vector<CVector> out;
  if (payload.contains("point")) out.push_back(get_complex_vector(payload["point"], path + ".point"));
  if (payload.contains("points")) {
    const json& p = payload["points"];
    if (!p.is_array()) fail(path + ".points", "expected an array of points");
    for (std::size_t i = 0; i < p.size(); ++i)
      out.push_back(get_complex_vector(p[i], path + ".points[" + std::to_string(i) + "]"));
  }
  return out;
}

inline ActionProblem parse_torus(SchemaContext& ctx, const json& p, const std::string& path) {
  check_fields(ctx, p, path, {"rank", "weights", "tau", "action", "point", "points", "xi"});
  const long rank = get_long(require(p, "rank", path), path + ".rank");
  if (rank < 1 || rank > 16) fail(path + ".rank", "must lie in [1, 16]");
  const json& wj = require(p, "weights", path);
  if (!wj.is_array() || wj.empty()) fail(path + ".weights", "expected a nonempty array");
  std::vector<RationalVector> w;
  for (std::size_t i = 0; i < wj.size(); ++i) {
    const std::string wp = path + ".weights[" + std::to_string(i) + "]";
    w.push_back(get_rational_vector(wj[i], wp));
    if (static_cast<long>(w.back().size()) != rank) fail(wp, "weight needs one entry per torus factor");
  }
  ActionKind kind = ActionKind::Linear;
  if (p.contains("action")) {
    const auto s = p["action"].is_string() ? p["action"].get<std::string>() : "";
    if (s == "projective") kind = ActionKind::Projective;
    else if (s != "linear") fail(path + ".action", "expected \"linear\" or \"projective\"");
  }
  RationalVector tau;
  if (p.contains("tau")) {
    tau = get_rational_vector(p["tau"], path + ".tau");
    if (static_cast<long>(tau.size()) != rank) fail(path + ".tau", "needs one entry per torus factor");
  }
  ActionProblem out{ActionDescriptor::from_weights(static_cast<int>(rank), kind, std::move(w), std::move(tau)), {}, {}, {}};
  out.points = parse_points(p, path);
  out.many_points = p.contains("points");
  if (p.contains("xi")) {
    const json& x = p["xi"];
    if (!x.is_array()) fail(path + ".xi", "expected an array of directions");
    for (std::size_t i = 0; i < x.size(); ++i) {
      const std::string xp = path + ".xi[" + std::to_string(i) + "]";
      auto q = get_rational_vector(x[i], xp);
      if (static_cast<long>(q.size()) != rank) fail(xp, "direction needs one entry per torus factor");
      out.directions.push_back(torus_direction(out.action, q));
      out.exact_directions.push_back(std::move(q));
    }
  }
  return out;
}

inline ActionProblem parse_action(SchemaContext& ctx, const json& p, ActionKind kind, const std::string& path) {
  check_fields(ctx, p, path, {"group", "rep", "tau", "point", "points", "xi"});
  GroupDescriptor g = parse_group(ctx, require(p, "group", path), path + ".group");
  const json& rj = require(p, "rep", path);
  check_fields(ctx, rj, path + ".rep", {"standard", "copies", "matrices"});
  RVector tau;
  if (p.contains("tau")) tau = get_real_vector(p["tau"], path + ".tau");
  std::optional<ActionDescriptor> a;
  if (rj.contains("matrices")) {
    const json& m = rj["matrices"];
    if (!m.is_array()) fail(path + ".rep.matrices", "expected an array of matrices");
    std::vector<CMatrix> rep;
    for (std::size_t i = 0; i < m.size(); ++i)
      rep.push_back(get_complex_matrix(m[i], path + ".rep.matrices[" + std::to_string(i) + "]"));
    a = ActionDescriptor::from_matrices(std::move(g), kind, std::move(rep), tau);
  } else if (rj.contains("standard") && rj["standard"].is_boolean() && rj["standard"].get<bool>()) {
    const long copies = rj.contains("copies") ? get_long(rj["copies"], path + ".rep.copies") : 1;
    if (copies < 1 || copies > 64) fail(path + ".rep.copies", "must lie in [1, 64]");
    if (copies == 1) {
      a = ActionDescriptor::standard(std::move(g), kind, tau);
    } else {
      // (ℂⁿ)^k with ξ acting diagonally; coordinates ordered copy by copy.
      std::vector<CMatrix> rep;
      const CMatrix id = CMatrix::Identity(copies, copies);
      for (const auto& b : g.hermitian_basis()) rep.push_back(Eigen::kroneckerProduct(id, b).eval());
      a = ActionDescriptor::from_matrices(std::move(g), kind, std::move(rep), tau);
    }
  } else {
    fail(path + ".rep", "expected {\"standard\": true} or {\"matrices\": [...]}");
  }
  ActionProblem out{std::move(*a), {}, {}, {}};
  out.points = parse_points(p, path);
  out.many_points = p.contains("points");
  if (p.contains("xi")) {
    const json& x = p["xi"];
    if (!x.is_array()) fail(path + ".xi", "expected an array of directions");
    for (std::size_t i = 0; i < x.size(); ++i) {
      const std::string xp = path + ".xi[" + std::to_string(i) + "]";
      const RVector c = get_real_vector(x[i], xp);
      if (c.size() != out.action.group().dim()) fail(xp, "direction needs one coordinate per Lie algebra basis element");
      out.directions.push_back(out.action.group().from_coordinates(c));
    }
  }
  return out;
}

inline VortexRequest parse_vortex(SchemaContext& ctx, const json& p, const std::string& path) {
  check_fields(ctx, p, path, {"grid_n", "degree", "t", "phi0_sq", "t_scan", "tol", "max_iter"});
  VortexRequest out;
  out.problem.grid_n = static_cast<int>(get_long(require(p, "grid_n", path), path + ".grid_n"));
  if (out.problem.grid_n < 3 || out.problem.grid_n > 1024) fail(path + ".grid_n", "must lie in [3, 1024]");
  out.problem.degree = static_cast<int>(get_long(require(p, "degree", path), path + ".degree"));
  if (p.contains("t")) out.problem.t_param = get_double(p["t"], path + ".t");
  const json& m = require(p, "phi0_sq", path);
  if (m.is_number()) {
    out.problem.phi0_sq.assign(out.problem.size(), m.get<double>());
  } else {
    const RVector v = get_real_vector(m, path + ".phi0_sq");
    out.problem.phi0_sq.assign(v.data(), v.data() + v.size());
  }
  if (p.contains("t_scan")) {
    const RVector t = get_real_vector(p["t_scan"], path + ".t_scan");
    out.t_scan.assign(t.data(), t.data() + t.size());
  } else if (!p.contains("t")) {
    fail(path, "needs 't' or 't_scan'");
  }
  if (p.contains("tol")) out.tol = get_double(p["tol"], path + ".tol");
  if (p.contains("max_iter")) out.max_iter = static_cast<int>(get_long(p["max_iter"], path + ".max_iter"));
  try {
    out.problem.validate();
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return out;
}

inline PairRequest parse_pair(SchemaContext& ctx, const json& p, const std::string& path) {
  check_fields(ctx, p, path, {"summand_degrees", "phi_pattern", "D_phi_degree", "tau", "classifier"});
  PairRequest out;
  const json& d = require(p, "summand_degrees", path);
  if (!d.is_array() || d.empty()) fail(path + ".summand_degrees", "expected a nonempty array");
  for (std::size_t i = 0; i < d.size(); ++i)
    out.data.summand_degrees.push_back(get_long(d[i], path + ".summand_degrees[" + std::to_string(i) + "]"));
  const json& f = require(p, "phi_pattern", path);
  if (!f.is_array()) fail(path + ".phi_pattern", "expected an array of booleans");
  for (const auto& b : f) {
    if (!b.is_boolean()) fail(path + ".phi_pattern", "expected an array of booleans");
    out.data.phi_nonzero.push_back(b.get<bool>());
  }
  if (p.contains("D_phi_degree") && !p["D_phi_degree"].is_null())
    out.data.d_phi_degree = get_long(p["D_phi_degree"], path + ".D_phi_degree");
  if (p.contains("tau")) out.data.tau = get_rational(p["tau"], path + ".tau");
  if (p.contains("classifier")) {
    const auto s = p["classifier"].is_string() ? p["classifier"].get<std::string>() : "";
    if (s == "oriented") out.classifier = PairRequest::Classifier::Oriented;
    else if (s == "quot") out.classifier = PairRequest::Classifier::Quot;
    else fail(path + ".classifier", "expected \"oriented\" or \"quot\"");
  } else if (out.data.rank() == 2 && !p.contains("tau")) {
    out.classifier = PairRequest::Classifier::Oriented;
  }
  try {
    validate_pair(out.data);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return out;
}

}  // namespace detail

inline Problem parse_problem(const json& j, SchemaContext& ctx) {
  using namespace detail;
  check_fields(ctx, j, "problem", {"version", "kind", "payload", "seed"});
  Problem out;
  const json& v = require(j, "version", "problem");
  if (!v.is_string()) fail("problem.version", "expected a string");
  out.version = v.get<std::string>();
  if (out.version != kSchemaVersion) fail("problem.version", "unsupported version '" + out.version + "'");
  if (j.contains("seed")) out.seed = get_long(j["seed"], "problem.seed");
  const json& k = require(j, "kind", "problem");
  const std::string kind = k.is_string() ? k.get<std::string>() : "";
  const json& p = require(j, "payload", "problem");
  try {
    if (kind == "torus_action") {
      out.kind = ProblemKind::TorusAction;
      out.action = parse_torus(ctx, p, "payload");
    } else if (kind == "linear_action" || kind == "projective_action") {
      out.kind = kind == "linear_action" ? ProblemKind::LinearAction : ProblemKind::ProjectiveAction;
      out.action = parse_action(ctx, p, kind == "linear_action" ? ActionKind::Linear : ActionKind::Projective, "payload");
    } else if (kind == "vortex") {
      out.kind = ProblemKind::Vortex;
      out.vortex = parse_vortex(ctx, p, "payload");
    } else if (kind == "split_pair") {
      out.kind = ProblemKind::SplitPair;
      out.pair = parse_pair(ctx, p, "payload");
    } else {
      fail("problem.kind", "expected one of torus_action, linear_action, projective_action, vortex, split_pair");
    }
  } catch (const Error& e) {
    // Invalid actions (non-Hermitian reps, misplaced tau, ...) are input errors too.
    if (e.code() == ErrorCode::Schema) throw;
    fail("payload", e.what());
  }
  if (out.action)
    for (std::size_t i = 0; i < out.action->points.size(); ++i)
      if (out.action->points[i].size() != out.action->action.dim_V())
        fail("payload.points[" + std::to_string(i) + "]", "point has the wrong dimension");
  return out;
}

// ---------------------------------------------------------------- serialization

inline json to_json(const CVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({v(i).real(), v(i).imag()});
  return a;
}

inline json to_json(const RVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

inline json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) r.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(r);
  }
  return rows;
}

inline json to_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(momap::to_string(q));
  return a;
}

inline json to_json(const WeightValue& w) {
  if (w.infinite) return "+inf";
  return w.value;
}

inline json to_json(const StabilityVerdict& v) {
  json j;
  j["class"] = momap::to_string(v.cls);
  j["polystable"] = is_polystable(v.cls);
  j["semistable"] = is_semistable(v.cls);
  j["method"] = momap::to_string(v.method);
  j["diagnostics"] = v.diagnostics;
  if (v.witness) j["witness"] = to_json(*v.witness);
  else if (v.witness_matrix) j["witness"] = to_json(*v.witness_matrix);
  else j["witness"] = nullptr;
  if (v.witness_weight) j["witness_weight"] = to_json(*v.witness_weight);
  if (!v.stabilizer_basis.empty()) {
    json b = json::array();
    for (const auto& s : v.stabilizer_basis) b.push_back(to_json(s));
    j["stabilizer_basis"] = b;
  }
  return j;
}

inline json to_json(const std::vector<TraceStep>& trace) {
  json a = json::array();
  for (const auto& t : trace)
    a.push_back({{"eps", t.eps}, {"s_norm", t.s_norm}, {"residual_norm", t.residual_norm}, {"newton_iters", t.newton_iters}});
  return a;
}

inline json to_json(const std::vector<std::pair<double, double>>& path) {
  json a = json::array();
  for (const auto& [e, n] : path) a.push_back({{"eps", e}, {"s_norm", n}});
  return a;
}

/// The per-step trace is always emitted; `detailed` adds the certificate's path history.
inline json to_json(const SolveOutcome& r, bool detailed = false) {
  json j;
  j["variant"] = r.variant_name();
  j["stabilizer_dim"] = r.stabilizer_dim;
  j["x0"] = to_json(r.x0.v);
  j["s1"] = to_json(r.s1);
  j["trace"] = to_json(r.trace);
  json c;
  if (r.polystable()) {
    const auto& p = r.poly();
    c["s_final"] = to_json(p.s_final);
    c["x_star"] = to_json(p.x_star.v);
    c["mu_residual"] = p.mu_residual;
    if (detailed) c["path"] = to_json(p.path);
  } else if (r.unstable()) {
    const auto& u = r.unst();
    c["sigma"] = to_json(u.sigma);
    c["weight_at_sigma"] = to_json(u.weight_at_sigma);
    c["sigma_spectrum"] = to_json(u.sigma_spectrum);
    c["from_stabilizer"] = u.from_stabilizer;
    if (detailed) c["norm_history"] = to_json(u.norm_history);
  } else {
    c["reason"] = std::get<Inconclusive>(r.result).reason;
  }
  j["certificate"] = c;
  return j;
}

inline json to_json(const VortexOutcome& o, bool with_field = true) {
  json j;
  j["solvable"] = o.solvable;
  j["diagnosis"] = o.diagnosis;
  j["residual_inf"] = o.solution.residual_inf;
  j["mass_identity_error"] = o.solution.mass_identity_error;
  j["newton_iters"] = o.solution.newton_iters;
  j["min_u"] = o.solution.min_u;
  if (with_field) j["u"] = o.solution.u;
  return j;
}

inline json to_json(const ThresholdScan& s) {
  json j;
  json e = json::array();
  for (const auto& x : s.entries)
    e.push_back({{"t", x.t},
                 {"solvable", x.solvable},
                 {"min_u", x.min_u},
                 {"mass_identity_error", x.mass_identity_error},
                 {"residual_inf", x.residual_inf}});
  j["entries"] = e;
  j["found_insolvable"] = s.found_insolvable;
  j["last_solvable"] = s.last_solvable;
  if (s.found_insolvable) j["first_insolvable"] = s.first_insolvable;
  return j;
}

inline json to_json(const PairVerdict& v) {
  json j;
  j["class"] = momap::to_string(v.cls);
  j["reason"] = v.reason;
  if (v.violated) {
    j["violated"] = {{"description", v.violated->str()},
                     {"summands", v.violated->summands},
                     {"twist", v.violated->twist},
                     {"degree", v.violated->degree},
                     {"rank", v.violated->rank}};
  } else {
    j["violated"] = nullptr;
  }
  return j;
}

}  // namespace momap::io
