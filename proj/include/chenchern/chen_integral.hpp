#ifndef CHENCHERN_CHEN_INTEGRAL_HPP
#define CHENCHERN_CHEN_INTEGRAL_HPP

#include <string>
#include <vector>

#include "chenchern/chain.hpp"
#include "chenchern/unitary.hpp"

namespace chenchern {

/// Affine family of loops f(y, t) = A y + v t + c in T^d, parametrized by
/// y in T^m. A is stored row-per-target: A[j][k] multiplies y_k in x_j.
/// Offsets must be multiples of 1/4 so that phases stay exact.
struct Plot {
  int m = 0;
  int d = 0;
  std::vector<std::vector<long>> A;
  std::vector<long> v;
  std::vector<Rational> c;
  std::string label;
};

void validate_plot(const Plot& p);
/// The frame T^m of the plot domain.
FramePtr plot_domain(const Plot& p);
/// Constant loops through the identity map T^d -> T^d.
Plot identity_plot(int d);
/// Adds the loop direction as an extra domain coordinate: A' = [A | v].
Plot extend_by_rotation(const Plot& p);
/// Plots over T^d used by the evaluation checks: constant, single-loop and
/// moving families with quarter offsets.
std::vector<Plot> plot_battery(int d);

/// Iterated integral int_{simplex} a_0(0) ^ (i a_1 - b_1)(t_1) ^ ... of every
/// tensor, pulled back to the plot domain.
Form tilde_rho_eval(const Chain& w, const Plot& p);
/// tilde_rho_eval averaged over the loop rotation.
Form rho_eval(const Chain& w, const Plot& p);
/// rho_eval on constant loops through the identity of T^d.
Form restrict_to_M(const Chain& w);

/// int_0^1 phi_s^* i rho(w) ds, realized by contracting rho(w) on the
/// extended plot with the rotation direction and averaging it.
Form p_term(const Chain& w, const Plot& p);

struct ChainMapSides {
  Form lhs;  // rho((b + B) w)
  Form rhs;  // d rho(w) + P rho(w)
};
ChainMapSides chain_map_sides(const Chain& w, const Plot& p);
bool chain_map_check(const Chain& w, const Plot& p);

/// rho (or tilde-rho) of Ch^-_n(g) computed without building the chain:
/// matrix-valued iterated integrals of s i w + (s^2 - s) w^2 and w.
Form rho_chern_minus(const UnitaryMap& g, int n, const Plot& p, bool average = true);

/// (-1)^{n-1} (n-1)!/(2n-1)! Tr[w_g^{2n-1}].
Form odd_chern_form(const UnitaryMap& g, int n);

}  // namespace chenchern

#endif  // CHENCHERN_CHEN_INTEGRAL_HPP
