#include "chenchern/commands.hpp"

#include <filesystem>

#include "chenchern/chern.hpp"
#include "chenchern/norms.hpp"

namespace chenchern {

namespace {

io::Json numeric_json(const NumericForm& w, int nvars) {
  io::Json out = io::Json::array();
  for (const auto& [m, c] : w) {
    io::Json dx = io::Json::array();
    for (int v = 0; v < nvars; ++v) {
      if (m & dx_bit(v)) dx.push_back(v);
    }
    out.push_back(io::Json{{"dx", dx}, {"re", c.real()}, {"im", c.imag()}});
  }
  return out;
}

/// c with restriction = c * Tr[w^{2n-1}], when both sides are proportional
/// through a single-term scalar.
std::optional<Scalar> trace_coefficient(const Form& restriction, const UnitaryMap& g, int n) {
  const Form reference = odd_chern_form(g, n);
  if (reference.is_zero()) return std::nullopt;
  Rational normal = 1;
  for (int k = 1; k <= n - 1; ++k) normal *= k;
  for (int k = 1; k <= 2 * n - 1; ++k) normal /= k;
  if (n % 2 == 0) normal = -normal;
  const auto& [mask, poly] = *reference.components().begin();
  const auto& [mono, ref] = *poly.terms().begin();
  const TrigPoly mine = restriction.component(mask);
  auto it = mine.terms().find(mono);
  if (it == mine.terms().end()) return Scalar();
  try {
    const Scalar ratio = it->second * ref.inverse();
    if (restriction != reference * ratio) return std::nullopt;
    return ratio * normal;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

EvalMode parse_eval_mode(const std::string& text) {
  if (text == "rho") return EvalMode::Rho;
  if (text == "tilde-rho") return EvalMode::TildeRho;
  if (text == "restrict") return EvalMode::Restrict;
  if (text == "bch-ode") return EvalMode::BchOde;
  if (text == "bch-iter") return EvalMode::BchIter;
  if (text == "compare") return EvalMode::Compare;
  throw io::FormatError("unknown mode '" + text + "' (rho, tilde-rho, restrict, bch-ode, bch-iter, compare)");
}

io::Json chern_document(const UnitaryMap& g, int N, bool odd) {
  if (N < 0) throw std::invalid_argument("truncation must be >= 0");
  io::Json comps = io::Json::array();
  const MatForm C = odd ? MatForm(g.frame(), g.size(), g.size()) : maurer_cartan(g);
  for (int n = 0; n <= N; ++n) {
    const Chain ch = odd ? chern_minus(g, n) : chern_plus(C, n);
    comps.push_back(io::Json{{"n", n}, {"chain", io::to_json(ch)}});
  }
  return io::Json{{"parity", odd ? "odd" : "even"}, {"map", io::to_json(g)}, {"truncate", N}, {"components", comps}};
}

Chain chain_of_document(const io::Json& doc) {
  if (doc.is_object() && doc.contains("components")) {
    if (!doc["components"].is_array() || doc["components"].empty()) {
      throw io::FormatError("components: expected a nonempty array");
    }
    std::optional<Chain> sum;
    for (std::size_t k = 0; k < doc["components"].size(); ++k) {
      const io::Json& c = doc["components"][k];
      if (!c.is_object() || !c.contains("chain")) throw io::FormatError("components[" + std::to_string(k) + "]: missing chain");
      Chain w = io::chain_from_json(c["chain"], "components[" + std::to_string(k) + "].chain");
      if (!sum) {
        sum = w;
      } else {
        *sum += w;
      }
    }
    return *sum;
  }
  return io::chain_from_json(doc);
}

Plot resolve_plot(const std::string& spec, int d) {
  if (!spec.empty() && spec.front() == '{') return io::plot_from_json(io::parse_text(spec, "plot"), "plot");
  if (std::filesystem::exists(spec)) return io::plot_from_json(io::read_file(spec), spec);
  std::string labels;
  for (const Plot& p : plot_battery(d)) {
    if (p.label == spec) return p;
    labels += (labels.empty() ? "" : ", ") + p.label;
  }
  throw io::FormatError("plot '" + spec + "' is neither JSON, a file, nor a battery label (" + labels + ")");
}

io::Json evaluate_request(const EvalRequest& req) {
  io::Json out{{"plot", io::to_json(req.plot)}};
  const int nvars = req.plot.m;
  switch (req.mode) {
    case EvalMode::Rho:
    case EvalMode::TildeRho:
    case EvalMode::Restrict: {
      if (!req.input) throw io::FormatError("mode needs an input chain (--in)");
      const io::Json& doc = *req.input;
      auto run = [&](const Chain& w) {
        if (w.frame()->size() != req.plot.d && req.mode != EvalMode::Restrict) {
          throw io::FormatError("chain has " + std::to_string(w.frame()->size()) + " variables, plot targets T^" +
                                std::to_string(req.plot.d));
        }
        if (req.mode == EvalMode::Rho) return rho_eval(w, req.plot);
        if (req.mode == EvalMode::TildeRho) return tilde_rho_eval(w, req.plot);
        return restrict_to_M(w);
      };
      out["mode"] = req.mode == EvalMode::Rho ? "rho" : req.mode == EvalMode::TildeRho ? "tilde-rho" : "restrict";
      if (req.mode == EvalMode::Restrict) out.erase("plot");
      if (doc.is_object() && doc.contains("components")) {
        const bool odd = doc.value("parity", "") == "odd";
        std::optional<UnitaryMap> g;
        if (odd && doc.contains("map")) g = io::map_from_json(doc["map"], "map");
        io::Json comps = io::Json::array();
        for (const auto& c : doc["components"]) {
          const int n = c.at("n").get<int>();
          const Form value = run(io::chain_from_json(c.at("chain")));
          io::Json entry{{"n", n}, {"form", io::to_json(value)}};
          if (req.mode == EvalMode::Restrict && g && n >= 1) {
            const auto coef = trace_coefficient(value, *g, n);
            entry["trace_coefficient"] = coef ? io::to_json(*coef) : io::Json(nullptr);
            entry["trace_coefficient_text"] = coef ? to_string(*coef) : "undetermined";
          }
          comps.push_back(std::move(entry));
        }
        out["components"] = comps;
      } else {
        out["form"] = io::to_json(run(io::chain_from_json(doc)));
      }
      return out;
    }
    case EvalMode::BchOde:
    case EvalMode::BchIter: {
      if (!req.map) throw io::FormatError("mode needs a map (--g)");
      io::Json samples = io::Json::array();
      for (const auto& y : default_samples(req.plot)) {
        const NumericForm value = req.mode == EvalMode::BchOde
                                      ? bch_minus_ode(*req.map, req.plot, y, 2 * req.n - 1, req.settings)
                                      : bch_minus_iterated(*req.map, req.plot, y, req.n, req.settings);
        samples.push_back(io::Json{{"y", y}, {"value", numeric_json(value, nvars)}});
      }
      out["mode"] = req.mode == EvalMode::BchOde ? "bch-ode" : "bch-iter";
      out["n"] = req.n;
      out["samples"] = samples;
      return out;
    }
    case EvalMode::Compare: {
      if (!req.map) throw io::FormatError("mode needs a map (--g)");
      io::Json reports = io::Json::array();
      bool passed = true;
      double worst = 0;
      // Forms of degree above the plot dimension vanish on every side.
      const int top = std::min(req.n, (req.plot.m + 1) / 2);
      if (top < req.n) out["skipped_above_n"] = top;
      for (int n = 1; n <= std::max(top, 1); ++n) {
        const CompareReport r = bch_vs_rho_compare(*req.map, req.plot, n, req.tolerance, default_samples(req.plot),
                                                   req.settings);
        reports.push_back(io::Json{{"n", n},
                                   {"degree", r.degree},
                                   {"truncation", r.truncation},
                                   {"ode_vs_iterated", r.ode_vs_iterated},
                                   {"rho_vs_ode", r.rho_vs_ode},
                                   {"rho_vs_iterated", r.rho_vs_iterated},
                                   {"passed", r.passed}});
        passed = passed && r.passed;
        worst = std::max({worst, r.ode_vs_iterated, r.rho_vs_ode, r.rho_vs_iterated});
      }
      out["mode"] = "compare";
      out["tolerance"] = req.tolerance;
      out["max_deviation"] = worst;
      out["passed"] = passed;
      out["reports"] = reports;
      return out;
    }
  }
  throw std::logic_error("unhandled mode");
}

io::Json chain_norm_report(const Chain& w, const SeminormSpec& eps, int N) {
  io::Json lengths = io::Json::array();
  for (int n = 0; n <= std::min(N, w.max_length()); ++n) {
    lengths.push_back(io::Json{{"n", n}, {"eps_upper", tensor_seminorm_upper(w.length_component(n), eps)}});
  }
  return io::Json{{"seminorm_base", eps.base}, {"truncate", N}, {"kappa_upper", kappa_upper(w, eps, N)},
                  {"lengths", lengths}};
}

io::Json growth_report(const UnitaryMap& g, const SeminormSpec& eps, int N) {
  const GrowthReport r = growth_bound_check(g, eps, N, std::min(N, 3));
  return io::Json{{"seminorm_base", eps.base}, {"truncate", N},     {"kappa_upper", r.lhs},
                  {"bound", r.rhs},            {"constant", r.constant}, {"explicit_upto", r.explicit_upto},
                  {"holds", r.holds}};
}

}  // namespace chenchern
