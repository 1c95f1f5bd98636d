#include "chenchern/bismut_chern.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chenchern/chern.hpp"

namespace chenchern {

namespace {

using Matrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Matrix of forms at a point: one complex matrix per dx mask.
using GradedMatrix = std::map<Mask, Matrix>;

int degree_of(Mask m) { return std::popcount(static_cast<unsigned>(m & ~kTheta)); }

void accumulate(GradedMatrix& out, Mask m, const Matrix& value, Complex scale = 1.0) {
  auto it = out.find(m);
  if (it == out.end()) {
    out.emplace(m, value * scale);
  } else {
    it->second += value * scale;
  }
}

GradedMatrix wedge_product(const GradedMatrix& a, const GradedMatrix& b, int max_degree) {
  GradedMatrix out;
  for (const auto& [ma, xa] : a) {
    for (const auto& [mb, xb] : b) {
      if (degree_of(ma) + degree_of(mb) > max_degree) continue;
      const int sign = merge_sign(ma, mb);
      if (sign == 0) continue;
      accumulate(out, ma | mb, xa * xb, static_cast<double>(sign));
    }
  }
  return out;
}

GradedMatrix combine(const GradedMatrix& a, const GradedMatrix& b, Complex scale) {
  GradedMatrix out = a;
  for (const auto& [m, x] : b) accumulate(out, m, x, scale);
  return out;
}

GradedMatrix scaled(const GradedMatrix& a, Complex scale) {
  GradedMatrix out;
  for (const auto& [m, x] : a) out.emplace(m, x * scale);
  return out;
}

GradedMatrix conjugate(const GradedMatrix& a, const Matrix& left, const Matrix& right) {
  GradedMatrix out;
  for (const auto& [m, x] : a) out.emplace(m, left * x * right);
  return out;
}

GradedMatrix times_matrix(const GradedMatrix& a, const Matrix& right) {
  GradedMatrix out;
  for (const auto& [m, x] : a) out.emplace(m, x * right);
  return out;
}

NumericForm trace_of(const GradedMatrix& a) {
  NumericForm out;
  for (const auto& [m, x] : a) out[m] += x.trace();
  return out;
}

/// A matrix of forms on T^d compiled for fast numeric evaluation.
class CompiledMatForm {
 public:
  explicit CompiledMatForm(const MatForm& m) : l_(m.rows()) {
    const FramePtr& frame = m.frame();
    d_ = frame->size();
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        for (const auto& [mask, poly] : m(i, j).components()) {
          if (has_theta(mask)) throw std::invalid_argument("numeric evaluation of a theta component");
          for (const auto& [mono, c] : poly.terms()) {
            Term t{i, j, mask, numeric_eval(c), std::vector<double>(d_)};
            for (int v = 0; v < d_; ++v) {
              if (power(mono, v) != 0) throw std::invalid_argument("numeric evaluation needs torus coefficients");
              t.freq[v] = freq4(mono, v) / 4.0;
            }
            terms_.push_back(std::move(t));
          }
        }
      }
    }
  }

  GradedMatrix at(const std::vector<double>& x) const {
    GradedMatrix out;
    for (const auto& t : terms_) {
      double phase = 0;
      for (int v = 0; v < d_; ++v) phase += t.freq[v] * x[v];
      auto it = out.find(t.mask);
      if (it == out.end()) it = out.emplace(t.mask, Matrix::Zero(l_, l_)).first;
      it->second(t.i, t.j) += t.coef * std::polar(1.0, 2 * std::numbers::pi * phase);
    }
    return out;
  }

  int size() const { return l_; }

 private:
  struct Term {
    int i;
    int j;
    Mask mask;
    Complex coef;
    std::vector<double> freq;
  };
  int l_;
  int d_ = 0;
  std::vector<Term> terms_;
};

/// Loop geometry x(y, t) = A y + v t + c and the induced pullback of masks.
class LoopGeometry {
 public:
  LoopGeometry(const Plot& p, std::vector<double> y) : p_(p), y_(std::move(y)) {
    validate_plot(p);
    if (static_cast<int>(y_.size()) != p.m) throw std::invalid_argument("sample point dimension mismatch");
  }

  std::vector<double> point(double t) const {
    std::vector<double> x(p_.d);
    for (int j = 0; j < p_.d; ++j) {
      double value = p_.c[j].get_d() + static_cast<double>(p_.v[j]) * t;
      for (int k = 0; k < p_.m; ++k) value += static_cast<double>(p_.A[j][k]) * y_[k];
      x[j] = value;
    }
    return x;
  }

  /// Contraction of the 1-form parts with the loop speed v.
  Matrix contract(const GradedMatrix& w, int l) const {
    Matrix out = Matrix::Zero(l, l);
    for (const auto& [mask, x] : w) {
      if (degree_of(mask) != 1) continue;
      const int j = std::countr_zero(static_cast<unsigned>(mask)) - 1;
      out += x * static_cast<double>(p_.v[j]);
    }
    return out;
  }

  /// Pullback along y -> x(y, t): dx_j -> sum_k A_jk dy_k.
  GradedMatrix pullback(const GradedMatrix& w) const {
    GradedMatrix out;
    for (const auto& [mask, x] : w) {
      for (const auto& [ym, coef] : pulled_mask(mask)) accumulate(out, ym, x, coef);
    }
    return out;
  }

 private:
  std::map<Mask, double> pulled_mask(Mask mask) const {
    std::map<Mask, double> acc{{0, 1.0}};
    for (int j = 0; j < p_.d; ++j) {
      if ((mask & dx_bit(j)) == 0) continue;
      std::map<Mask, double> next;
      for (const auto& [m, c] : acc) {
        for (int k = 0; k < p_.m; ++k) {
          const double a = static_cast<double>(p_.A[j][k]);
          if (a == 0) continue;
          const int sign = merge_sign(m, dx_bit(k));
          if (sign == 0) continue;
          next[m | dx_bit(k)] += sign * c * a;
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

  const Plot& p_;
  std::vector<double> y_;
};

struct LoopData {
  Matrix iota;         // w(gamma')
  GradedMatrix form;   // w pulled back to the domain
  GradedMatrix square; // (w ^ w) pulled back
};

LoopData loop_data(const CompiledMatForm& w, const LoopGeometry& geo, double t, int max_degree) {
  GradedMatrix at = w.at(geo.point(t));
  LoopData out;
  out.iota = geo.contract(at, w.size());
  out.form = geo.pullback(at);
  out.square = wedge_product(out.form, out.form, max_degree);
  return out;
}

/// RK4 for P' = -s K(t) P over the sorted times; returns P at each.
std::vector<Matrix> transports(const std::function<Matrix(double)>& K, double s, int l, const std::vector<double>& times,
                               double h) {
  std::vector<Matrix> out;
  Matrix P = Matrix::Identity(l, l);
  double t = 0;
  auto f = [&](double tt, const Matrix& x) -> Matrix { return -s * K(tt) * x; };
  for (double target : times) {
    const double span = target - t;
    if (span > 0) {
      const int steps = std::max(1, static_cast<int>(std::ceil(span / h - 1e-12)));
      const double dt = span / steps;
      for (int k = 0; k < steps; ++k) {
        Matrix k1 = f(t, P);
        Matrix k2 = f(t + dt / 2, P + dt / 2 * k1);
        Matrix k3 = f(t + dt / 2, P + dt / 2 * k2);
        Matrix k4 = f(t + dt, P + dt * k3);
        P += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
        t += dt;
      }
      t = target;
    }
    out.push_back(P);
  }
  return out;
}

/// Ordered simplex nodes 0 <= t_1 <= ... <= t_n <= 1 with product weights.
struct SimplexRule {
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
};

SimplexRule simplex_rule(int n, const Quadrature& q) {
  SimplexRule rule;
  std::vector<double> current(n);
  std::function<void(int, double, double)> recurse = [&](int level, double upper, double weight) {
    if (level < 0) {
      rule.points.push_back(current);
      rule.weights.push_back(weight);
      return;
    }
    for (std::size_t k = 0; k < q.nodes.size(); ++k) {
      current[level] = q.nodes[k] * upper;
      recurse(level - 1, current[level], weight * q.weights[k] * upper);
    }
  };
  if (n == 0) {
    rule.points.push_back({});
    rule.weights.push_back(1.0);
  } else {
    recurse(n - 1, 1.0, 1.0);
  }
  return rule;
}

/// Shared driver for the transported iterated integrals: factor(i, s, time
/// index) gives the untransported factor of slot i.
template <class Factor>
NumericForm iterated(int l, int n, const std::function<Matrix(double)>& K, const std::vector<double>& s_nodes,
                     const std::vector<double>& s_weights, const std::vector<int>& positions,
                     const BchSettings& settings, int max_degree, Factor&& factor) {
  const Quadrature q = gauss_legendre(settings.quad_order);
  const SimplexRule rule = simplex_rule(n, q);
  std::vector<double> times;
  for (const auto& pt : rule.points) times.insert(times.end(), pt.begin(), pt.end());
  times.push_back(1.0);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  auto index_of = [&](double t) {
    return static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), t) - times.begin());
  };
  std::vector<std::vector<std::size_t>> idx;
  for (const auto& pt : rule.points) {
    std::vector<std::size_t> row;
    for (double t : pt) row.push_back(index_of(t));
    idx.push_back(std::move(row));
  }

  NumericForm out;
  for (std::size_t si = 0; si < s_nodes.size(); ++si) {
    const double s = s_nodes[si];
    std::vector<Matrix> P = transports(K, s, l, times, settings.rk4_step);
    std::vector<Matrix> Pinv;
    Pinv.reserve(P.size());
    for (const auto& x : P) Pinv.push_back(x.inverse());
    const Matrix closing = Pinv.back();
    for (std::size_t r = 0; r < rule.points.size(); ++r) {
      for (int pos : positions) {
        GradedMatrix prod{{Mask(0), Matrix::Identity(l, l)}};
        for (int i = 0; i < n && !prod.empty(); ++i) {
          const std::size_t ti = idx[r][static_cast<std::size_t>(i)];
          prod = wedge_product(prod, conjugate(factor(i, pos, s, ti), Pinv[ti], P[ti]), max_degree);
        }
        for (const auto& [m, c] : trace_of(times_matrix(prod, closing))) out[m] += s_weights[si] * rule.weights[r] * c;
      }
    }
  }
  return out;
}

}  // namespace

NumericForm numeric_form(const Form& w, const std::vector<double>& y) {
  NumericForm out;
  for (const auto& [m, c] : evaluate(w, y)) {
    if (c != Complex(0)) out[m] = c;
  }
  return out;
}

NumericForm degree_part(const NumericForm& w, int degree) {
  NumericForm out;
  for (const auto& [m, c] : w) {
    if (degree_of(m) == degree) out[m] = c;
  }
  return out;
}

double relative_deviation(const NumericForm& a, const NumericForm& b) {
  double worst = 0;
  auto visit = [&](Mask m) {
    const Complex x = a.contains(m) ? a.at(m) : Complex(0);
    const Complex y = b.contains(m) ? b.at(m) : Complex(0);
    worst = std::max(worst, std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}));
  };
  for (const auto& [m, c] : a) visit(m);
  for (const auto& [m, c] : b) visit(m);
  return worst;
}

Quadrature gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be positive");
  Quadrature q;
  for (int i = 1; i <= order; ++i) {
    // Newton iteration on P_order from the Chebyshev guess.
    double x = std::cos(std::numbers::pi * (i - 0.25) / (order + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) {
        p1 = x;
        p0 = 1;
      }
      dp = order * (x * p1 - p0) / (x * x - 1);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    q.nodes.push_back(0.5 * (1 - x));
    q.weights.push_back(1.0 / ((1 - x * x) * dp * dp));
  }
  std::vector<std::size_t> order_idx(q.nodes.size());
  for (std::size_t k = 0; k < order_idx.size(); ++k) order_idx[k] = k;
  std::sort(order_idx.begin(), order_idx.end(), [&](auto a, auto b) { return q.nodes[a] < q.nodes[b]; });
  Quadrature sorted;
  for (auto k : order_idx) {
    sorted.nodes.push_back(q.nodes[k]);
    sorted.weights.push_back(q.weights[k]);
  }
  return sorted;
}

Eigen::MatrixXcd parallel_transport(const UnitaryMap& g, double s, const Plot& p, const std::vector<double>& y,
                                    double t_end, const BchSettings& settings) {
  if (t_end < 0 || t_end > 1) throw std::invalid_argument("transport time must lie in [0,1]");
  if (g.frame()->size() != p.d) throw std::invalid_argument("plot target dimension does not match the map");
  CompiledMatForm w(maurer_cartan(g));
  LoopGeometry geo(p, y);
  auto K = [&](double t) { return geo.contract(w.at(geo.point(t)), g.size()); };
  return transports(K, s, g.size(), {t_end}, settings.rk4_step).back();
}

NumericForm bch_minus_ode(const UnitaryMap& g, const Plot& p, const std::vector<double>& y, int max_degree,
                          const BchSettings& settings) {
  if (g.frame()->size() != p.d) throw std::invalid_argument("plot target dimension does not match the map");
  const int l = g.size();
  CompiledMatForm w(maurer_cartan(g));
  LoopGeometry geo(p, y);
  const Quadrature q = gauss_legendre(settings.quad_order);
  const int steps = std::max(1, static_cast<int>(std::ceil(1.0 / settings.rk4_step - 1e-12)));
  const double h = 1.0 / steps;
  // The loop data does not depend on s: sample it once on the RK4 grid.
  std::vector<LoopData> grid;
  for (int k = 0; k <= 2 * steps; ++k) grid.push_back(loop_data(w, geo, k * h / 2, max_degree));

  NumericForm out;
  for (std::size_t si = 0; si < q.nodes.size(); ++si) {
    const double s = q.nodes[si];
    auto fa = [&](const LoopData& d) {
      GradedMatrix a = scaled(d.square, s * s - s);
      accumulate(a, 0, d.iota, s);
      return a;
    };
    auto rhs = [&](const LoopData& d, const GradedMatrix& X, const GradedMatrix& Y) {
      const GradedMatrix a = fa(d);
      return std::pair{wedge_product(X, a, max_degree),
                       combine(wedge_product(Y, a, max_degree), wedge_product(X, d.form, max_degree), 1.0)};
    };
    GradedMatrix X{{Mask(0), Matrix::Identity(l, l)}};
    GradedMatrix Y;
    for (int k = 0; k < steps; ++k) {
      const LoopData& d0 = grid[2 * k];
      const LoopData& d1 = grid[2 * k + 1];
      const LoopData& d2 = grid[2 * k + 2];
      auto [kx1, ky1] = rhs(d0, X, Y);
      auto [kx2, ky2] = rhs(d1, combine(X, kx1, h / 2), combine(Y, ky1, h / 2));
      auto [kx3, ky3] = rhs(d1, combine(X, kx2, h / 2), combine(Y, ky2, h / 2));
      auto [kx4, ky4] = rhs(d2, combine(X, kx3, h), combine(Y, ky3, h));
      X = combine(combine(combine(combine(X, kx1, h / 6), kx2, h / 3), kx3, h / 3), kx4, h / 6);
      Y = combine(combine(combine(combine(Y, ky1, h / 6), ky2, h / 3), ky3, h / 3), ky4, h / 6);
    }
    for (const auto& [m, c] : trace_of(Y)) out[m] += q.weights[si] * c;
  }
  return out;
}

NumericForm bch_minus_iterated(const UnitaryMap& g, const Plot& p, const std::vector<double>& y, int n,
                               const BchSettings& settings) {
  if (n < 1) throw std::invalid_argument("odd Bismut-Chern degree index must be >= 1");
  if (g.frame()->size() != p.d) throw std::invalid_argument("plot target dimension does not match the map");
  const int l = g.size();
  const int max_degree = 2 * n - 1;
  CompiledMatForm w(maurer_cartan(g));
  LoopGeometry geo(p, y);
  const Quadrature q = gauss_legendre(settings.quad_order);
  auto K = [&](double t) { return geo.contract(w.at(geo.point(t)), l); };

  // Loop data at every simplex time, shared across s nodes.
  const SimplexRule rule = simplex_rule(n, q);
  std::vector<double> times;
  for (const auto& pt : rule.points) times.insert(times.end(), pt.begin(), pt.end());
  times.push_back(1.0);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<LoopData> data;
  for (double t : times) data.push_back(loop_data(w, geo, t, max_degree));

  std::vector<int> positions(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) positions[static_cast<std::size_t>(j)] = j;
  auto factor = [&](int i, int pos, double s, std::size_t ti) -> GradedMatrix {
    return i == pos ? data[ti].form : scaled(data[ti].square, s * s - s);
  };
  NumericForm all = iterated(l, n, K, q.nodes, q.weights, positions, settings, max_degree, factor);
  return degree_part(all, max_degree);
}

NumericForm bch_plus_eval(const MatForm& C, const Plot& p, const std::vector<double>& y, int n,
                          const BchSettings& settings) {
  if (n < 0) throw std::invalid_argument("even Bismut-Chern degree index must be >= 0");
  if (C.frame()->size() != p.d) throw std::invalid_argument("plot target dimension does not match the connection");
  const int l = C.rows();
  const int max_degree = 2 * n;
  CompiledMatForm c(C);
  CompiledMatForm r(curvature(C));
  LoopGeometry geo(p, y);
  auto K = [&](double t) { return geo.contract(c.at(geo.point(t)), l); };
  const Quadrature q = gauss_legendre(settings.quad_order);
  const SimplexRule rule = simplex_rule(n, q);
  std::vector<double> times;
  for (const auto& pt : rule.points) times.insert(times.end(), pt.begin(), pt.end());
  times.push_back(1.0);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<GradedMatrix> curv;
  for (double t : times) curv.push_back(geo.pullback(r.at(geo.point(t))));
  auto factor = [&](int, int, double, std::size_t ti) -> GradedMatrix { return curv[ti]; };
  NumericForm all = iterated(l, n, K, {1.0}, {1.0}, {0}, settings, max_degree, factor);
  return degree_part(all, max_degree);
}

std::vector<std::vector<double>> default_samples(const Plot& p) {
  const std::vector<double> base{0.0, 0.3125, 0.71};
  std::vector<std::vector<double>> out;
  if (p.m == 0) return {{}};
  for (double b : base) {
    std::vector<double> y(p.m);
    for (int k = 0; k < p.m; ++k) y[k] = b + 0.137 * k;
    out.push_back(std::move(y));
  }
  return out;
}

CompareReport bch_vs_rho_compare(const UnitaryMap& g, const Plot& p, int n, double tolerance,
                                 const std::vector<std::vector<double>>& samples, const BchSettings& settings,
                                 int max_length) {
  CompareReport report;
  report.degree = 2 * n - 1;
  report.tolerance = tolerance;
  std::vector<NumericForm> exact(samples.size());
  int small_in_a_row = 0;
  int k = n;
  for (; k <= max_length && small_in_a_row < 2; ++k) {
    Form term = rho_chern_minus(g, k, p, true);
    double largest = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      for (const auto& [m, c] : degree_part(numeric_form(term, samples[i]), report.degree)) {
        exact[i][m] += c;
        largest = std::max(largest, std::abs(c));
      }
    }
    small_in_a_row = largest < 1e-14 ? small_in_a_row + 1 : 0;
  }
  report.truncation = k - 1;
  const bool converged = small_in_a_row >= 2;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    NumericForm ode = degree_part(bch_minus_ode(g, p, samples[i], report.degree, settings), report.degree);
    NumericForm it = bch_minus_iterated(g, p, samples[i], n, settings);
    report.ode_vs_iterated = std::max(report.ode_vs_iterated, relative_deviation(ode, it));
    report.rho_vs_ode = std::max(report.rho_vs_ode, relative_deviation(exact[i], ode));
    report.rho_vs_iterated = std::max(report.rho_vs_iterated, relative_deviation(exact[i], it));
  }
  report.passed = converged && report.ode_vs_iterated <= tolerance && report.rho_vs_ode <= tolerance &&
                  report.rho_vs_iterated <= tolerance;
  return report;
}

}  // namespace chenchern
