#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "momap/io.hpp"
#include "momap/selftest.hpp"

using namespace momap;
using io::json;

namespace {

enum Status { Ok = 0, Failure = 1, SchemaError = 2, NotDecided = 3 };

// 2 dominates 1 dominates 3.
int worse(int a, int b) {
  auto rank = [](int s) { return s == SchemaError ? 3 : s == Failure ? 2 : s == NotDecided ? 1 : 0; };
  return rank(b) > rank(a) ? b : a;
}

struct Flags {
  std::optional<double> tol;
  std::string jacobian = "exact";
  bool trace = false;
  bool strict = false;
  std::string format = "json";
  int jobs = 1;
};

int log_level() {
  const char* e = std::getenv("LOG_LEVEL");
  const std::string s = e ? e : "warn";
  if (s == "debug") return 0;
  if (s == "info") return 1;
  if (s == "error") return 3;
  if (s == "off" || s == "quiet") return 4;
  return 2;
}

void log(int level, const std::string& msg) {
  static const char* names[] = {"debug", "info", "warn", "error"};
  if (level >= log_level()) std::cerr << names[level] << ": " << msg << "\n";
}

struct RunResult {
  json report;
  int status = Ok;
  std::vector<std::string> csv_rows;
};

SolveOptions solve_options(const Flags& f) {
  SolveOptions o;
  if (f.tol) o.newton_tol = *f.tol;
  o.jacobian_mode = f.jacobian == "fd" ? JacobianMode::FiniteDifference : JacobianMode::Exact;
  return o;
}

json classify_point(const io::ActionProblem& ap, const CVector& v, const Flags& f, int& status) {
  const ActionDescriptor& a = ap.action;
  if (a.has_weights() && a.kind() == ActionKind::Linear) return io::to_json(torus_classify(a, v));
  const SolveOptions opt = solve_options(f);
  const SolveOutcome r = solve_moment_zero(a, a.point(v), opt);
  if (r.inconclusive()) {
    status = worse(status, NotDecided);
    return {{"class", "Inconclusive"}, {"method", "Certificate"}, {"diagnostics", std::get<Inconclusive>(r.result).reason}};
  }
  StabilityVerdict out;
  out.method = VerdictMethod::Certificate;
  if (r.polystable()) {
    out.cls = r.stabilizer_dim == 0 ? StabilityClass::Stable : StabilityClass::PolystableNotStable;
    out.diagnostics = "moment-map zero reached";
  } else {
    const auto& c = r.unst();
    out.witness_matrix = c.sigma;
    out.witness_weight = c.weight_at_sigma;
    out.cls = c.weight_at_sigma.value < -opt.weight_tol ? StabilityClass::Unstable : StabilityClass::SemistableNotPolystable;
    out.diagnostics = c.from_stabilizer ? "moment value has a component along the stabilizer" : "divergent continuation path";
  }
  json j = io::to_json(out);
  if (f.trace) j["solve"] = io::to_json(r, true);
  return j;
}

json run_subcommand(const std::string& sub, const io::Problem& p, const Flags& f, int& status,
                    std::vector<std::string>& csv) {
  const bool action_kind = p.action.has_value();
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::Schema, "subcommand '" + sub + "' needs a " + what + " problem");
  };
  if (sub == "classify" || sub == "solve" || sub == "weights") {
    need(action_kind, "torus_action, linear_action or projective_action");
    const auto& ap = *p.action;
    if (ap.points.empty()) throw Error(ErrorCode::Schema, "payload: 'point' or 'points' required");
    std::vector<json> per_point;
    for (std::size_t i = 0; i < ap.points.size(); ++i) {
      const CVector& v = ap.points[i];
      if (sub == "classify") {
        per_point.push_back(classify_point(ap, v, f, status));
      } else if (sub == "solve") {
        const SolveOutcome r = solve_moment_zero(ap.action, ap.action.point(v), solve_options(f));
        if (r.inconclusive()) status = worse(status, NotDecided);
        per_point.push_back(io::to_json(r, f.trace));
      } else {
        if (ap.directions.empty()) throw Error(ErrorCode::Schema, "payload: 'xi' required for weights");
        const PointState x = ap.action.point(v);
        json table = json::array();
        for (std::size_t k = 0; k < ap.directions.size(); ++k) {
          const WeightValue w = maximal_weight(ap.action, ap.directions[k], x);
          json row;
          row["index"] = k;
          row["xi"] = ap.exact_directions.empty() ? io::to_json(RVector(ap.action.group().real_coordinates(ap.directions[k])))
                                                  : io::to_json(ap.exact_directions[k]);
          row["weight"] = io::to_json(w);
          table.push_back(row);
          csv.push_back(std::to_string(i) + "," + std::to_string(k) + "," + (w.infinite ? "+inf" : [&] {
                          char b[40];
                          std::snprintf(b, sizeof b, "%.17g", w.value);
                          return std::string(b);
                        }()));
        }
        per_point.push_back({{"weights", table}});
      }
    }
    if (!ap.many_points) return per_point.front();
    return {{"results", per_point}};
  }
  if (sub == "vortex") {
    need(p.vortex.has_value(), "vortex");
    const auto& vr = *p.vortex;
    const double tol = f.tol.value_or(vr.tol);
    if (!vr.t_scan.empty()) {
      const ThresholdScan s = continuation_in_t(vr.problem, vr.t_scan, tol, vr.max_iter);
      for (const auto& e : s.entries) {
        char b[200];
        std::snprintf(b, sizeof b, "%.17g,%d,%.17g,%.17g,%.17g", e.t, e.solvable ? 1 : 0, e.min_u, e.mass_identity_error,
                      e.residual_inf);
        csv.emplace_back(b);
      }
      return io::to_json(s);
    }
    const VortexOutcome o = solve_vortex(vr.problem, tol, vr.max_iter);
    char b[200];
    std::snprintf(b, sizeof b, "%.17g,%d,%.17g,%.17g,%.17g", vr.problem.t_param, o.solvable ? 1 : 0, o.solution.min_u,
                  o.solution.mass_identity_error, o.solution.residual_inf);
    csv.emplace_back(b);
    return io::to_json(o, true);
  }
  if (sub == "pair") {
    need(p.pair.has_value(), "split_pair");
    const auto& pr = *p.pair;
    return io::to_json(pr.classifier == io::PairRequest::Classifier::Oriented ? oriented_pair_classify(pr.data)
                                                                              : quot_pair_classify(pr.data));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown subcommand " + sub);
}

RunResult run_one(const std::string& sub, const json& problem, const Flags& f) {
  RunResult rr;
  const auto t0 = std::chrono::steady_clock::now();
  json& rep = rr.report;
  rep["tool_version"] = io::kToolVersion;
  rep["subcommand"] = sub;
  rep["input_digest"] = io::digest(problem);
  try {
    io::SchemaContext ctx;
    ctx.strict = f.strict;
    const io::Problem p = io::parse_problem(problem, ctx);
    for (const auto& w : ctx.warnings) log(2, w);
    rep["kind"] = io::to_string(p.kind);
    if (p.seed) rep["seed"] = *p.seed;
    rep["outcome"] = run_subcommand(sub, p, f, rr.status, rr.csv_rows);
  } catch (const Error& e) {
    const int s = e.code() == ErrorCode::Schema ? SchemaError : e.code() == ErrorCode::Inconclusive ? NotDecided : Failure;
    rr.status = worse(rr.status, s);
    rep["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    log(3, e.what());
  } catch (const std::exception& e) {
    rr.status = worse(rr.status, Failure);
    rep["error"] = {{"code", "Internal"}, {"message", e.what()}};
    log(3, e.what());
  }
  rep["timings"] = {{"wall_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()}};
  return rr;
}

int run_file(const std::string& sub, const std::string& path, const Flags& f) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) {
      log(3, "cannot open " + path);
      return SchemaError;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json input;
  try {
    input = json::parse(text);
  } catch (const json::parse_error& e) {
    log(3, std::string("invalid JSON: ") + e.what());
    return SchemaError;
  }
  const bool batch = input.is_array();
  std::vector<json> problems = batch ? input.get<std::vector<json>>() : std::vector<json>{input};
  std::vector<RunResult> results(problems.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < problems.size();) results[i] = run_one(sub, problems[i], f);
  };
  const int n = std::max(1, std::min<int>(f.jobs, static_cast<int>(problems.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int status = Ok;
  for (const auto& r : results) status = worse(status, r.status);
  if (f.format == "csv") {
    if (sub != "weights" && sub != "vortex") {
      log(3, "--format csv is available for weights and vortex");
      return SchemaError;
    }
    std::cout << (batch ? "problem," : "") << (sub == "weights" ? "point,xi_index,weight" : "t,solvable,min_u,mass_identity_error,residual_inf")
              << "\n";
    for (std::size_t i = 0; i < results.size(); ++i)
      for (const auto& row : results[i].csv_rows) std::cout << (batch ? std::to_string(i) + "," : "") << row << "\n";
    return status;
  }
  if (batch) {
    json arr = json::array();
    for (auto& r : results) arr.push_back(std::move(r.report));
    std::cout << io::canonical_dump(arr) << "\n";
  } else {
    std::cout << io::canonical_dump(results.front().report) << "\n";
  }
  return status;
}

int run_selftest(bool quick, std::uint64_t seed, const Flags& f) {
  selftest::Config cfg;
  cfg.quick = quick;
  cfg.seed = seed;
  const auto results = selftest::run_all(cfg);
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    if (f.format == "json")
      arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    else
      std::cout << selftest::format_line(r) << "\n";
  }
  if (f.format == "json") std::cout << io::canonical_dump(arr) << "\n";
  return ok ? Ok : Failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"momap: moment maps, stability and vortex thresholds"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--tol", f.tol, "override the Newton / vortex residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--jacobian", f.jacobian, "solver Jacobian")->check(CLI::IsMember({"exact", "fd"}));
  app.add_flag("--trace", f.trace, "include solver path histories");
  app.add_flag("--strict-schema", f.strict, "reject unknown fields");
  app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", f.jobs, "worker threads for batch input")->check(CLI::Range(1, 256));

  std::string path;
  int code = Ok;
  for (const char* name : {"classify", "solve", "weights", "vortex", "pair"}) {
    static const std::map<std::string, std::string> help = {
        {"classify", "stability class of the given point(s)"},
        {"solve", "continuity method for mu = 0"},
        {"weights", "maximal weights along the directions in payload.xi"},
        {"vortex", "solve the vortex equation or scan t"},
        {"pair", "classify a split holomorphic pair"}};
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->fallthrough();
    sub->add_option("problem", path, "problem file (JSON object or array; '-' for stdin)");
    sub->callback([&, sub] { code = run_file(sub->get_name(), path, f); });
  }
  bool quick = false;
  std::uint64_t seed = selftest::Config{}.seed;
  auto* st = app.add_subcommand("selftest", "run the acceptance property suite");
  st->fallthrough();
  st->add_flag("--quick", quick, "reduced sample counts");
  st->add_option("--seed", seed, "random seed");
  st->callback([&] {
    Flags g = f;
    if (app.count("--format") == 0) g.format = "text";
    code = run_selftest(quick, seed, g);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : SchemaError;
  }
  return code;
}
