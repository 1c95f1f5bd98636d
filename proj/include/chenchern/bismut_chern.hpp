#ifndef CHENCHERN_BISMUT_CHERN_HPP
#define CHENCHERN_BISMUT_CHERN_HPP

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "chenchern/chen_integral.hpp"

namespace chenchern {

struct BchSettings {
  double rk4_step = 1e-3;
  int quad_order = 24;
};

/// Numeric value of a form on the plot domain at one point: coefficient per
/// dx mask (masks use dx_bit of the domain coordinates).
using NumericForm = std::map<Mask, std::complex<double>>;

NumericForm numeric_form(const Form& w, const std::vector<double>& y);
NumericForm degree_part(const NumericForm& w, int degree);
/// max over masks of |a - b| / max(1, |a|, |b|).
double relative_deviation(const NumericForm& a, const NumericForm& b);

/// Gauss-Legendre nodes and weights on [0,1].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Quadrature gauss_legendre(int order);

/// P(t_end) for P' = -s w_g(gamma') P, P(0) = 1, along the loop
/// gamma(t) = A y + v t + c, by RK4.
Eigen::MatrixXcd parallel_transport(const UnitaryMap& g, double s, const Plot& p, const std::vector<double>& y,
                                    double t_end, const BchSettings& settings = {});

/// Bch^- at y in all degrees from the coupled system
///   X' = X (s i w + (s^2 - s) w^2),  Y' = Y (s i w + (s^2 - s) w^2) + X w,
/// X(0) = 1, Y(0) = 0, integrated by RK4 to t = 1 and over s by
/// Gauss-Legendre: int_0^1 Tr Y(1) ds. Degrees above max_degree are dropped.
NumericForm bch_minus_ode(const UnitaryMap& g, const Plot& p, const std::vector<double>& y, int max_degree,
                          const BchSettings& settings = {});

/// Bch^-_{2n-1} at y as an iterated integral over the n-simplex of
/// transported factors P^{-1} F P (one w, n - 1 curvatures (s^2 - s) w^2),
/// closed by P(1)^{-1}; Gauss-Legendre on every simplex axis and in s.
NumericForm bch_minus_iterated(const UnitaryMap& g, const Plot& p, const std::vector<double>& y, int n,
                               const BchSettings& settings = {});

/// Bch^+_{2n}(C) at y: Tr of transported curvatures R_C = dC + C^2 closed by
/// the inverse transport for P' = -C(gamma') P. For n = 0 this is the trace
/// of the inverse holonomy (l on constant loops).
NumericForm bch_plus_eval(const MatForm& C, const Plot& p, const std::vector<double>& y, int n,
                          const BchSettings& settings = {});

struct CompareReport {
  int degree = 0;
  int truncation = 0;          // chain lengths summed on the exact side
  double ode_vs_iterated = 0;  // relative deviations, max over sample points
  double rho_vs_ode = 0;
  double rho_vs_iterated = 0;
  double tolerance = 0;
  bool passed = false;
};

/// Compares the degree 2n-1 parts of sum_k rho(Ch^-_k(g)) (exact, summed
/// until the added terms fall below 1e-13 or max_length is reached),
/// bch_minus_ode and bch_minus_iterated at the sample points.
CompareReport bch_vs_rho_compare(const UnitaryMap& g, const Plot& p, int n, double tolerance,
                                 const std::vector<std::vector<double>>& samples, const BchSettings& settings = {},
                                 int max_length = 40);

/// Sample points of the plot domain used by the comparisons.
std::vector<std::vector<double>> default_samples(const Plot& p);

}  // namespace chenchern

#endif  // CHENCHERN_BISMUT_CHERN_HPP
