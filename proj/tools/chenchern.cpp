// chenchern: verification suites, Chern chain export, plot evaluation and
// norm reports for the entire cyclic complex.
//
// Exit codes: 0 success, 1 malformed configuration or input, 2 a suite or
// comparison failed.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "chenchern/commands.hpp"
#include "chenchern/norms.hpp"

using namespace chenchern;

namespace {

constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kFailed = 2;

struct Options {
  std::string suite = "all";
  std::uint64_t seed = 7;
  int truncate = 4;
  double tolerance = 1e-6;
  double rk4_step = 1e-3;
  int quad_order = 24;
  double seminorm_base = 1.0;
  std::string in;
  std::string out;
  std::string plot;
  std::string g;
  std::string mode = "rho";
  std::string parity = "odd";
  std::string config;
};

/// Keys of the config file and the flags they mirror.
const std::map<std::string, std::string>& config_keys() {
  static const std::map<std::string, std::string> keys{
      {"suite", "--suite"}, {"seed", "--seed"},       {"truncate", "--truncate"},
      {"tolerance", "--tolerance"}, {"rk4-step", "--rk4-step"}, {"quad-order", "--quad-order"},
      {"seminorm-base", "--seminorm-base"}, {"in", "--in"},   {"out", "--out"},
      {"plot", "--plot"},   {"g", "--g"},             {"mode", "--mode"},
      {"parity", "--parity"}};
  return keys;
}

/// Fills options from the config file for every key not given as a flag.
void apply_config(Options& o, const CLI::App& app) {
  const io::Json j = io::read_file(o.config);
  if (!j.is_object()) throw io::FormatError(o.config + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    auto it = config_keys().find(key);
    if (it == config_keys().end()) throw io::FormatError(o.config + ": unknown key '" + key + "'");
    if (app.get_option(it->second)->count() > 0) continue;  // flags win
    const std::string where = o.config + "." + key;
    try {
      if (key == "seed") o.seed = value.get<std::uint64_t>();
      else if (key == "truncate") o.truncate = value.get<int>();
      else if (key == "tolerance") o.tolerance = value.get<double>();
      else if (key == "rk4-step") o.rk4_step = value.get<double>();
      else if (key == "quad-order") o.quad_order = value.get<int>();
      else if (key == "seminorm-base") o.seminorm_base = value.get<double>();
      else if (key == "suite") o.suite = value.get<std::string>();
      else if (key == "in") o.in = value.get<std::string>();
      else if (key == "out") o.out = value.get<std::string>();
      else if (key == "plot") o.plot = value.get<std::string>();
      else if (key == "g") o.g = value.get<std::string>();
      else if (key == "mode") o.mode = value.get<std::string>();
      else if (key == "parity") o.parity = value.get<std::string>();
    } catch (const io::Json::exception& e) {
      throw io::FormatError(where + ": " + e.what());
    }
  }
}

void validate(const Options& o) {
  if (o.truncate < 0) throw io::FormatError("--truncate must be >= 0");
  if (!(o.tolerance > 0)) throw io::FormatError("--tolerance must be positive");
  if (!(o.rk4_step > 0) || o.rk4_step > 1) throw io::FormatError("--rk4-step must lie in (0, 1]");
  if (o.quad_order < 1 || o.quad_order > 200) throw io::FormatError("--quad-order must lie in [1, 200]");
  if (!(o.seminorm_base > 0)) throw io::FormatError("--seminorm-base must be positive");
  if (o.parity != "odd" && o.parity != "even") throw io::FormatError("--parity must be odd or even");
}

VerifyConfig verify_config(const Options& o) {
  VerifyConfig cfg;
  cfg.seed = o.seed;
  cfg.truncate = o.truncate;
  cfg.tolerance = o.tolerance;
  cfg.seminorm_base = o.seminorm_base;
  cfg.bch.rk4_step = o.rk4_step;
  cfg.bch.quad_order = o.quad_order;
  return cfg;
}

void emit(const Options& o, const io::Json& j) {
  if (o.out.empty()) {
    std::cout << io::dump(j);
  } else {
    io::write_file(o.out, j);
  }
}

int cmd_verify(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(o.suite);
  }
  for (const auto& s : suites) {
    try {
      suite_criteria(s);
    } catch (const std::invalid_argument& e) {
      throw io::FormatError(e.what());
    }
  }
  const VerifyConfig cfg = verify_config(o);
  const auto results = run_suites(suites, cfg);
  bool all = true;
  for (const auto& r : results) {
    for (const auto& c : r.checks) {
      std::fprintf(stderr, "[%s] criterion %d %s: %s (%.1f s) %s\n", r.suite.c_str(), c.criterion,
                   c.passed ? "PASS" : "FAIL", c.name.c_str(), c.seconds, c.detail.c_str());
    }
    all = all && r.passed;
  }
  emit(o, report_json(results, cfg));
  return all ? kOk : kFailed;
}

int cmd_chern(const Options& o) {
  if (o.g.empty()) throw io::FormatError("chern needs --g");
  emit(o, chern_document(io::parse_map_spec(o.g), o.truncate, o.parity == "odd"));
  return kOk;
}

int cmd_eval(const Options& o) {
  EvalRequest req;
  req.mode = parse_eval_mode(o.mode);
  req.n = std::max(1, o.truncate);
  req.tolerance = o.tolerance;
  req.settings = BchSettings{o.rk4_step, o.quad_order};
  int d = -1;
  if (!o.in.empty()) {
    req.input = io::read_file(o.in);
    d = chain_of_document(*req.input).frame()->size();
  }
  if (!o.g.empty()) {
    req.map = io::parse_map_spec(o.g);
    d = req.map->frame()->size();
  }
  if (d < 0) throw io::FormatError("eval needs --in or --g");
  if (req.mode == EvalMode::Restrict) {
    req.plot = identity_plot(d);
  } else {
    if (o.plot.empty()) throw io::FormatError("eval needs --plot for this mode");
    req.plot = resolve_plot(o.plot, d);
  }
  const io::Json result = evaluate_request(req);
  emit(o, result);
  if (req.mode == EvalMode::Compare && !result.at("passed").get<bool>()) return kFailed;
  return kOk;
}

int cmd_norms(const Options& o) {
  const SeminormSpec eps{o.seminorm_base};
  if (!o.in.empty()) {
    emit(o, chain_norm_report(chain_of_document(io::read_file(o.in)), eps, o.truncate));
    return kOk;
  }
  if (o.g.empty()) throw io::FormatError("norms needs --in or --g");
  const io::Json r = growth_report(io::parse_map_spec(o.g), eps, o.truncate);
  emit(o, r);
  return r.at("holds").get<bool>() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the Chen-normalized entire cyclic complex"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "JSON file with option values (flags take precedence)");
  app.add_option("--suite", o.suite, "verify: complex, chern, chen, degenerate, growth, bch or all");
  app.add_option("--seed", o.seed, "seed of the random property checks");
  app.add_option("--truncate", o.truncate, "chain length / degree index N");
  app.add_option("--tolerance", o.tolerance, "relative tolerance of numeric comparisons");
  app.add_option("--rk4-step", o.rk4_step, "Runge-Kutta step in the loop time");
  app.add_option("--quad-order", o.quad_order, "Gauss-Legendre order");
  app.add_option("--seminorm-base", o.seminorm_base, "base C of the seminorm eps_C");
  app.add_option("--in", o.in, "input chain file");
  app.add_option("--out", o.out, "output file (default stdout)");
  app.add_option("--plot", o.plot, "plot: inline JSON, JSON file, or battery label");
  app.add_option("--g", o.g, "unitary map: corpus name, JSON file, or inline JSON");
  app.add_option("--mode", o.mode, "eval: rho, tilde-rho, restrict, bch-ode, bch-iter, compare");
  app.add_option("--parity", o.parity, "chern: odd or even");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  auto* chern = app.add_subcommand("chern", "write Ch^-_n(g) or Ch^+_n(w_g) for n <= N");
  auto* eval = app.add_subcommand("eval", "evaluate chains or Bismut-Chern forms on a plot");
  auto* norms = app.add_subcommand("norms", "seminorm and growth reports");
  for (auto* sub : {verify, chern, eval, norms}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }
  try {
    if (!o.config.empty()) apply_config(o, app);
    validate(o);
    if (*verify) return cmd_verify(o);
    if (*chern) return cmd_chern(o);
    if (*eval) return cmd_eval(o);
    return cmd_norms(o);
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
}
