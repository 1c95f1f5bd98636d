#include "chenchern/suites.hpp"

#include <chrono>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chenchern/chern.hpp"
#include "chenchern/corpus.hpp"
#include "chenchern/norms.hpp"
#include "chenchern/sampling.hpp"

namespace chenchern {

namespace {

/// Collects failures with a short description; passes when none.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }
  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    std::ostringstream os;
    os << checked_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    if (!failures_.empty()) {
      os << "; " << failures_.size() << " failed:";
      for (std::size_t k = 0; k < failures_.size() && k < 5; ++k) os << " [" << failures_[k] << "]";
    }
    return os.str();
  }

 private:
  int checked_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string tag(const std::string& name, int n) { return name + " n=" + std::to_string(n); }

Tally super_complex_relations(const VerifyConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(cfg.seed);
  const auto f = Frame::torus(2);
  int nontrivial = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Chain w = sampling::random_chain(rng, f, 4, 2);
    const Chain bw = hochschild_b(w);
    const Chain Bw = connes_B(w);
    if (!bw.is_zero() && !Bw.is_zero()) ++nontrivial;
    const std::string at = "chain " + std::to_string(trial);
    t.expect(hochschild_b(bw).is_zero(), at + " b^2");
    t.expect(connes_B(Bw).is_zero(), at + " B^2");
    t.expect((hochschild_b(Bw) + connes_B(bw)).is_zero(), at + " bB+Bb");
    const Chain D = bw + Bw;
    const Chain gw = gamma(w);
    t.expect(gamma(D) == -(hochschild_b(gw) + connes_B(gw)), at + " Gamma");
  }
  t.expect(nontrivial >= 50, "too few chains with nonzero b and B");
  t.note(std::to_string(nontrivial) + " chains with bw, Bw != 0");
  return t;
}

Tally chern_closedness(const VerifyConfig& cfg) {
  Tally t;
  for (const auto& [name, g] : identity_corpus()) {
    for (int n = 1; n <= cfg.truncate; ++n) {
      t.expect(bchern_identity_check(g, n), tag(name, n) + " bCh");
      const Chain witness = generator_sum(trace_degenerate_witness(g, n), g.frame());
      t.expect(chain_equal(witness.length_component(n), trace_power(g, n)), tag(name, n) + " witness");
      t.expect(connes_B(chern_minus(g, n)).is_zero(), tag(name, n) + " B Ch");
    }
  }
  return t;
}

Tally odd_coefficients(const VerifyConfig&) {
  Tally t;
  const UnitaryMap circle = circle_map(1);
  t.expect(restrict_to_M(chern_minus(circle, 1)) == odd_chern_form(circle, 1), "circle n=1");
  const UnitaryMap layered = layered_t3();
  t.expect(!odd_chern_form(layered, 2).is_zero(), "layered_t3 Tr w^3 vanishes");
  for (int n = 1; n <= 2; ++n) {
    t.expect(restrict_to_M(chern_minus(layered, n)) == odd_chern_form(layered, n), tag("layered_t3", n));
  }
  const UnitaryMap l3 = map_l3_d5();
  t.expect(!odd_chern_form(l3, 3).is_zero(), "map_l3_d5 Tr w^5 vanishes");
  t.expect(restrict_to_M(chern_minus(l3, 3)) == odd_chern_form(l3, 3), "map_l3_d5 n=3");
  Form total(circle.frame());
  for (int n = 1; n <= 3; ++n) total += restrict_to_M(chern_minus(circle, n));
  const Scalar winding =
      fourier_integral(total.component(dx_bit(0)), 0).constant_term() * (Scalar::i() * Scalar::tau()).inverse();
  t.expect(winding == Scalar(1), "winding " + to_string(winding));
  t.note("coefficients 1, -1/6, 1/60 against Tr w^{2n-1}");
  return t;
}

Tally homomorphism(const VerifyConfig& cfg) {
  Tally t;
  const UnitaryMap su2 = su2_style_t2();
  t.expect(direct_sum_chern(su2, UnitaryMap::identity(su2.frame(), 1), cfg.truncate), "su2 (+) 1");
  t.expect(direct_sum_chern(circle_map(1), circle_map(2), cfg.truncate), "circle (+) circle_k2");
  t.expect(direct_sum_chern(small_conjugation(), circle_map(1), cfg.truncate), "small_conjugation (+) circle");
  const UnitaryMap path = homotopy_path();
  const int tv = path.frame()->size() - 1;
  int nonzero = 0;
  for (int n = 1; n <= 2; ++n) {
    const Chain delta =
        chern_minus(restrict_at(path, tv, Rational(1)), n) - chern_minus(restrict_at(path, tv, Rational(0)), n);
    if (!delta.is_zero()) ++nonzero;
    const Chain residual = homotopy_residual(path, n);
    for (const Plot& p : plot_battery(2)) {
      t.expect(tilde_rho_eval(residual, p).is_zero(), "homotopy residual " + tag(p.label, n));
    }
  }
  t.expect(nonzero > 0, "homotopy endpoints have equal Chern chains");
  return t;
}

Tally periodicity(const VerifyConfig& cfg) {
  Tally t;
  for (const auto& [name, g] : identity_corpus()) {
    for (int n = 1; n <= cfg.truncate; ++n) t.expect(periodicity_check(g, n), tag(name, n));
  }
  return t;
}

Tally chain_map(const VerifyConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(cfg.seed + 1);
  const auto f = Frame::torus(2);
  int pairs = 0;
  int nontrivial = 0;
  for (int k = 0; k < 8; ++k) {
    const Chain w = sampling::random_chain(rng, f, 3, 1, 3);
    for (const Plot& p : plot_battery(2)) {
      const ChainMapSides sides = chain_map_sides(w, p);
      t.expect(sides.lhs == sides.rhs, "chain " + std::to_string(k) + " on " + p.label);
      if (!sides.lhs.is_zero()) ++nontrivial;
      ++pairs;
    }
  }
  t.expect(pairs >= 30 && nontrivial >= 10, "too few nontrivial pairs");
  t.note(std::to_string(pairs) + " pairs, " + std::to_string(nontrivial) + " nontrivial");
  return t;
}

Tally degenerate_vanishing(const VerifyConfig& cfg) {
  Tally t;
  std::mt19937_64 rng(cfg.seed + 2);
  const auto f = Frame::torus(2);
  int nontrivial = 0;
  const auto battery = plot_battery(2);
  for (int k = 0; k < 20; ++k) {
    const Chain gen = sampling::random_degenerate(rng, f);
    if (!gen.is_zero()) ++nontrivial;
    for (const Plot& p : battery) {
      t.expect(tilde_rho_eval(gen, p).is_zero(), "tilde-rho generator " + std::to_string(k) + " on " + p.label);
      t.expect(rho_eval(gen, p).is_zero(), "rho generator " + std::to_string(k) + " on " + p.label);
    }
  }
  t.expect(nontrivial >= 10, "too few nonzero generators");
  t.note(std::to_string(nontrivial) + " nonzero generators x " + std::to_string(battery.size()) + " plots");
  return t;
}

Tally bch_compare(const VerifyConfig& cfg) {
  Tally t;
  double worst_constant = 0;
  double worst_moving = 0;
  std::vector<NamedMap> constant_maps = identity_corpus();
  constant_maps.push_back({"layered_t3", layered_t3()});
  for (const auto& [name, g] : constant_maps) {
    const Plot p = identity_plot(g.frame()->size());
    for (int n = 1; n <= 2 && 2 * n - 1 <= p.m; ++n) {
      const CompareReport r = bch_vs_rho_compare(g, p, n, cfg.constant_tolerance, default_samples(p), cfg.bch);
      worst_constant = std::max({worst_constant, r.ode_vs_iterated, r.rho_vs_ode, r.rho_vs_iterated});
      t.expect(r.passed, "constant " + tag(name, n));
    }
  }
  const std::vector<NamedMap> moving_maps{{"circle", circle_map(1)}, {"small_conjugation", small_conjugation()}};
  for (const auto& [name, g] : moving_maps) {
    for (const Plot& p : plot_battery(g.frame()->size())) {
      if (p.m > 1 || p.v == std::vector<long>(p.v.size(), 0)) continue;
      for (int n = 1; n <= 2; ++n) {
        const CompareReport r = bch_vs_rho_compare(g, p, n, cfg.tolerance, default_samples(p), cfg.bch);
        worst_moving = std::max({worst_moving, r.ode_vs_iterated, r.rho_vs_ode, r.rho_vs_iterated});
        t.expect(r.passed, name + " " + p.label + " n=" + std::to_string(n));
      }
    }
  }
  std::ostringstream os;
  os << "max deviation constant " << worst_constant << ", moving " << worst_moving;
  t.note(os.str());
  return t;
}

Tally growth(const VerifyConfig& cfg) {
  Tally t;
  const SeminormSpec eps{cfg.seminorm_base};
  std::vector<NamedMap> maps = identity_corpus();
  maps.push_back({"layered_t3", layered_t3()});
  for (const auto& [name, g] : maps) {
    const GrowthReport r = growth_bound_check(g, eps, cfg.growth_terms, 3);
    std::ostringstream os;
    os << name << " " << r.lhs << " <= " << r.rhs;
    t.expect(r.holds, os.str());
  }
  std::mt19937_64 rng(cfg.seed + 3);
  const auto f = Frame::torus(2);
  for (int k = 0; k < 50; ++k) {
    const Chain w = sampling::random_chain(rng, f);
    t.expect(kappa_upper(gamma(w), eps, 6) <= kappa_upper(w, eps, 6) + 1e-12, "kappa(Gamma w) chain " +
                                                                                    std::to_string(k));
  }
  return t;
}

struct Criterion {
  const char* title;
  Tally (*run)(const VerifyConfig&);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"super-complex relations b^2 = B^2 = bB + Bb = 0, Gamma anticommutes", super_complex_relations},
      {"closedness of Ch^-: bCh = Tr_n[1 (x) w^n], degenerate witness, B Ch = 0", chern_closedness},
      {"odd Chern coefficients 1, -1/6, 1/60 and winding", odd_coefficients},
      {"direct sums add, homotopy residual vanishes under tilde-rho", homomorphism},
      {"even/odd periodicity by fiber integration", periodicity},
      {"rho is a chain map on plots", chain_map},
      {"rho and tilde-rho kill degenerate generators", degenerate_vanishing},
      {"Bismut-Chern ODE, iterated integrals and rho(Ch^-) agree", bch_compare},
      {"entire growth bound and kappa(Gamma w) <= kappa(w)", growth},
  };
  return all;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

std::string criterion_title(int k) {
  if (k < 1 || k > criterion_count()) throw std::invalid_argument("no criterion " + std::to_string(k));
  return criteria()[static_cast<std::size_t>(k - 1)].title;
}

CheckResult run_criterion(int k, const VerifyConfig& cfg) {
  CheckResult out;
  out.criterion = k;
  out.name = criterion_title(k);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Tally t = criteria()[static_cast<std::size_t>(k - 1)].run(cfg);
    out.passed = t.passed();
    out.detail = t.detail();
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"complex", "chern", "chen", "degenerate", "growth", "bch"};
  return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "complex") return {1};
  if (suite == "chern") return {2, 4, 5};
  if (suite == "chen") return {3, 6};
  if (suite == "degenerate") return {7};
  if (suite == "growth") return {9};
  if (suite == "bch") return {8};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

SuiteResult run_suite(const std::string& suite, const VerifyConfig& cfg) {
  SuiteResult out;
  out.suite = suite;
  out.passed = true;
  for (int k : suite_criteria(suite)) {
    out.checks.push_back(run_criterion(k, cfg));
    out.passed = out.passed && out.checks.back().passed;
  }
  return out;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& suites, const VerifyConfig& cfg) {
  for (const auto& s : suites) suite_criteria(s);
  std::vector<std::future<SuiteResult>> jobs;
  for (const auto& s : suites) jobs.push_back(std::async(std::launch::async, run_suite, s, cfg));
  std::vector<SuiteResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

io::Json report_json(const std::vector<SuiteResult>& results, const VerifyConfig& cfg) {
  io::Json suites = io::Json::array();
  bool all = true;
  for (const auto& r : results) {
    io::Json checks = io::Json::array();
    for (const auto& c : r.checks) {
      checks.push_back(io::Json{{"criterion", c.criterion}, {"name", c.name}, {"passed", c.passed},
                                {"detail", c.detail}});
    }
    suites.push_back(io::Json{{"suite", r.suite}, {"passed", r.passed}, {"checks", checks}});
    all = all && r.passed;
  }
  io::Json config{{"seed", cfg.seed},
                  {"truncate", cfg.truncate},
                  {"tolerance", cfg.tolerance},
                  {"rk4_step", cfg.bch.rk4_step},
                  {"quad_order", cfg.bch.quad_order},
                  {"seminorm_base", cfg.seminorm_base}};
  return io::Json{{"passed", all}, {"config", config}, {"suites", suites}};
}

}  // namespace chenchern
