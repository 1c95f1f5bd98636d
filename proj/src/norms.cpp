#include "chenchern/norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>

#include "chenchern/chern.hpp"

namespace chenchern {

namespace {

double weight(const SeminormSpec& eps, Mask mask) {
  return std::pow(eps.base, std::popcount(static_cast<unsigned>(mask & ~kTheta)));
}

/// eps of a form whose coefficients depend polynomially on the parameter v,
/// evaluated at v = s.
double form_seminorm_at(const Form& w, const SeminormSpec& eps, int v, double s) {
  double total = 0;
  for (const auto& [mask, poly] : w.components()) {
    std::map<Monomial, std::complex<double>> grouped;
    for (const auto& [mono, c] : poly.terms()) {
      Monomial rest = mono;
      const int e = rest[2 * v + 1];
      rest[2 * v + 1] = 0;
      grouped[rest] += numeric_eval(c) * std::pow(s, e);
    }
    const double wgt = weight(eps, mask);
    for (const auto& [mono, c] : grouped) total += std::abs(c) * wgt;
  }
  return total;
}

std::vector<std::vector<double>> entry_norms(const MatForm& m, const SeminormSpec& eps, int v, double s) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out[i][j] = form_seminorm_at(m(i, j), eps, v, s);
  }
  return out;
}

using Mat = std::vector<std::vector<double>>;

Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t l = a.size();
  Mat out(l, std::vector<double>(l, 0.0));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = 0; k < l; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < l; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

double log_term(double x, int n) { return std::log(static_cast<double>(n)) + n * std::log(x) - 0.5 * std::lgamma(n + 1.0); }

// Composite 8-point Gauss-Legendre on [0,1].
template <class F>
double integrate01(F&& f, int panels = 64) {
  static const double nodes[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
                                  0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
  static const double weights[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
                                    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
  double total = 0;
  const double h = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (int q = 0; q < 8; ++q) total += weights[q] * f(mid + 0.5 * h * nodes[q]);
  }
  return total * 0.5 * h;
}

}  // namespace

double form_seminorm(const Form& w, const SeminormSpec& eps) {
  double total = 0;
  for (const auto& [mask, poly] : w.components()) {
    const double wgt = weight(eps, mask);
    for (const auto& [mono, c] : poly.terms()) total += std::abs(numeric_eval(c)) * wgt;
  }
  return total;
}

double tensor_seminorm_upper(const Chain& w, const SeminormSpec& eps) {
  const int nv = w.frame()->size();
  double total = 0;
  for (const auto& [key, c] : w.terms()) {
    double prod = std::abs(numeric_eval(c));
    const int n = tensor_length(key);
    for (int i = 0; i <= n; ++i) prod *= weight(eps, slot_mask(key, i, nv));
    total += prod;
  }
  return total;
}

double kappa_upper(const Chain& w, const SeminormSpec& eps, int N) {
  double total = 0;
  for (int n = 0; n <= N; ++n) {
    Chain part = w.length_component(n);
    if (part.is_zero()) continue;
    total += tensor_seminorm_upper(part, eps) / std::sqrt(std::tgamma(n + 1.0));
  }
  return total;
}

double chern_growth_constant(const UnitaryMap& g, const SeminormSpec& eps) {
  ScriptAB ab = script_A_B(g);
  auto max_entry = [&](const MatForm& m, double s) {
    double best = 0;
    for (const auto& row : entry_norms(m, eps, ab.s, s)) best = std::max(best, *std::max_element(row.begin(), row.end()));
    return best;
  };
  double best = std::max(1.0, max_entry(ab.B, 0.0));
  auto fa = [&](double s) { return max_entry(ab.A, s); };
  double arg = 0;
  double top = -1;
  for (int k = 0; k <= 1000; ++k) {
    const double s = k / 1000.0;
    const double value = fa(s);
    if (value > top) {
      top = value;
      arg = s;
    }
  }
  double lo = std::max(0.0, arg - 1e-3);
  double hi = std::min(1.0, arg + 1e-3);
  const double phi = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 60; ++it) {
    const double a = hi - phi * (hi - lo);
    const double b = lo + phi * (hi - lo);
    if (fa(a) < fa(b)) {
      lo = a;
    } else {
      hi = b;
    }
  }
  top = std::max({top, fa(0.5 * (lo + hi))});
  return std::max(best, top);
}

double growth_partial(double x, int N) {
  if (x <= 0) return 0;
  double total = 0;
  for (int n = 1; n <= N; ++n) total += std::exp(log_term(x, n));
  return total;
}

double growth_tail(double x, int N) {
  if (x <= 0) return 0;
  double total = 0;
  for (int n = N + 1;; ++n) {
    const double term = std::exp(log_term(x, n));
    if (!std::isfinite(term)) return std::numeric_limits<double>::infinity();
    total += term;
    // a_{n+1}/a_n = ((n+1)/n) x / sqrt(n+1), decreasing in n
    const double ratio = (n + 1.0) / n * x / std::sqrt(n + 1.0);
    if (ratio < 0.1) {
      const double next = std::exp(log_term(x, n + 1));
      return total + next / (1 - ratio);
    }
  }
}

double chern_component_bound(const UnitaryMap& g, const SeminormSpec& eps, int n) {
  if (n <= 0) return 0;
  ScriptAB ab = script_A_B(g);
  const Mat mb = entry_norms(ab.B, eps, ab.s, 0.0);
  auto integrand = [&](double s) {
    const Mat ma = entry_norms(ab.A, eps, ab.s, s);
    double total = 0;
    for (int k = 1; k <= n; ++k) {
      Mat prod = k == 1 ? mb : ma;
      for (int q = 2; q <= n; ++q) prod = multiply(prod, q == k ? mb : ma);
      for (std::size_t i = 0; i < prod.size(); ++i) total += prod[i][i];
    }
    return total;
  };
  return integrate01(integrand);
}

GrowthReport growth_bound_check(const UnitaryMap& g, const SeminormSpec& eps, int N, int explicit_upto) {
  GrowthReport report;
  report.constant = chern_growth_constant(g, eps);
  report.explicit_upto = std::min(N, explicit_upto);
  for (int n = 1; n <= N; ++n) {
    const double en = n <= report.explicit_upto ? tensor_seminorm_upper(chern_minus(g, n), eps)
                                                : chern_component_bound(g, eps, n);
    report.lhs += en / std::sqrt(std::tgamma(n + 1.0));
  }
  const double x = static_cast<double>(g.size()) * g.size() * report.constant;
  report.rhs = growth_partial(x, N) + growth_tail(x, N);
  report.holds = report.lhs <= report.rhs;
  return report;
}

}  // namespace chenchern
