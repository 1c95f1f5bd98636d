#ifndef CHENCHERN_NORMS_HPP
#define CHENCHERN_NORMS_HPP

#include <string>

#include "chenchern/chain.hpp"
#include "chenchern/unitary.hpp"

namespace chenchern {

/// eps_C(w) = sum over stored terms of |coefficient| * C^{|I|}, alpha and
/// beta parts alike (|I| counts dx's, not theta).
struct SeminormSpec {
  double base = 1.0;
};

double form_seminorm(const Form& w, const SeminormSpec& eps);
/// Upper bound for eps_n: sum over the canonical tensors of |coefficient|
/// times the product of slot seminorms.
double tensor_seminorm_upper(const Chain& w, const SeminormSpec& eps);
/// sum_{n <= N} eps_n(w_n) / sqrt(n!).
double kappa_upper(const Chain& w, const SeminormSpec& eps, int N);

/// sup over s in [0,1] of max(eps(1), eps(A^s_ij), eps(B_ij)). The sup is
/// taken on a 1/1000 grid and refined by golden-section search.
double chern_growth_constant(const UnitaryMap& g, const SeminormSpec& eps);

/// sum_{n > N} n x^n / sqrt(n!): explicit terms until the ratio drops below
/// 1/10, then a geometric majorant. Infinite when the terms overflow.
double growth_tail(double x, int N);
/// sum_{n <= N} n x^n / sqrt(n!).
double growth_partial(double x, int N);

/// eps_n(Ch^-_n(g)) bounded through the factored form
/// sum_k int_0^1 tr(M_A(s)^{k-1} M_B M_A(s)^{n-k}) ds with entrywise
/// seminorm matrices; valid without expanding the chain.
double chern_component_bound(const UnitaryMap& g, const SeminormSpec& eps, int n);

struct GrowthReport {
  double lhs = 0;         // kappa bound of Ch^-(g) truncated at N
  double rhs = 0;         // partial sum + tail
  double constant = 0;    // C_eps
  int explicit_upto = 0;  // components evaluated from the expanded chain
  bool holds = false;
};
/// Components n <= explicit_upto come from the expanded chain, the rest from
/// chern_component_bound.
GrowthReport growth_bound_check(const UnitaryMap& g, const SeminormSpec& eps, int N, int explicit_upto);

}  // namespace chenchern

#endif  // CHENCHERN_NORMS_HPP
