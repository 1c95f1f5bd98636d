#ifndef CHENCHERN_COMMANDS_HPP
#define CHENCHERN_COMMANDS_HPP

/// The work behind each command-line subcommand, usable in-process.

#include <optional>
#include <string>

#include "chenchern/norms.hpp"
#include "chenchern/suites.hpp"

namespace chenchern {

enum class EvalMode { Rho, TildeRho, Restrict, BchOde, BchIter, Compare };
EvalMode parse_eval_mode(const std::string& text);

/// {"parity", "map", "truncate", "components": [{"n", "chain"}]} with
/// Ch^-_n(g) (odd) or Ch^+_n(w_g) (even) for n = 0..N.
io::Json chern_document(const UnitaryMap& g, int N, bool odd);

/// A chain document (plain chain or chern_document) summed to one chain.
Chain chain_of_document(const io::Json& doc);

/// A plot from inline JSON, a JSON file, or a battery label over T^d.
Plot resolve_plot(const std::string& spec, int d);

struct EvalRequest {
  EvalMode mode = EvalMode::Rho;
  std::optional<io::Json> input;    // chain or chern document (exact modes)
  std::optional<UnitaryMap> map;    // numeric modes
  Plot plot;
  int n = 1;                        // degree index for numeric modes
  double tolerance = 1e-6;
  BchSettings settings;
};
io::Json evaluate_request(const EvalRequest& req);

/// kappa report of a chain, per-length seminorm bounds included.
io::Json chain_norm_report(const Chain& w, const SeminormSpec& eps, int N);
/// Growth bound report of Ch^-(g).
io::Json growth_report(const UnitaryMap& g, const SeminormSpec& eps, int N);

}  // namespace chenchern

#endif  // CHENCHERN_COMMANDS_HPP
