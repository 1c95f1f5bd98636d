#ifndef CHENCHERN_CHERN_HPP
#define CHENCHERN_CHERN_HPP

#include <vector>

#include "chenchern/chain.hpp"
#include "chenchern/unitary.hpp"

namespace chenchern {

/// A^s(g) = s w + s(1-s) theta w^2 and B^s(g) = -theta w over the frame of g
/// extended by the parameter s (last variable, no differential).
struct ScriptAB {
  FramePtr frame;
  int s = 0;
  MatForm A;
  MatForm B;
};
ScriptAB script_A_B(const UnitaryMap& g);

/// Tr_n[v0 (x) ... (x) vn] = sum v0_{i0 i1} (x) v1_{i1 i2} (x) ... (x) vn_{in i0}.
Chain generalized_trace(const std::vector<MatForm>& slots);

/// Tr_n of slots over a frame whose last `params` variables appear without
/// differentials; the coefficient product is integrated over [0,1]^params
/// and the chain is returned on the remaining frame.
Chain generalized_trace_integrated(const std::vector<MatForm>& slots, int params);

/// Ch^-_n(g); Ch^-_0 = 0.
Chain chern_minus(const UnitaryMap& g, int n);
/// Components 0..N summed into one chain.
Chain chern_minus_upto(const UnitaryMap& g, int N);

using ConnectionForm = MatForm;
/// R_C = dC + C ^ C.
MatForm curvature(const ConnectionForm& C);
/// Ch^+_n(C) = Tr_n[1 (x) (C - theta R_C)^{(x) n}].
Chain chern_plus(const ConnectionForm& C, int n);

/// Tr_n[1 (x) w_g^{(x) n}].
Chain trace_power(const UnitaryMap& g, int n);
/// (b<Ch^-_n>)_n + (b<Ch^-_{n+1}>)_n.
Chain b_chern_component(const UnitaryMap& g, int n);
bool bchern_identity_check(const UnitaryMap& g, int n);

struct DegenerateGenerator {
  DegenerateKind kind;
  std::vector<Form> factors;
  int r;
  Scalar coef;
};
Chain generator_sum(const std::vector<DegenerateGenerator>& gens, const FramePtr& frame);

/// Leibniz generators L_k = sum over indices of
/// <h_{i0 a} (x) g_{a i1} (x) w_{i1 i2} (x) ... (x) w_{ik i0}> with f = g in
/// slot 1 and h = g^{-1}; L_k = T_k + H_k - H_{k-1} where T_k = Tr_k[1 (x) w^k]
/// and H_k = Tr_{k+1}[h (x) dg (x) w^k] (L_0 = H_0 uses the wrap-around form).
std::vector<DegenerateGenerator> leibniz_trace_generators(const UnitaryMap& g, int k);
/// {L_{n-1}, L_n}: a sum of degenerate generators whose length-n component
/// is exactly Tr_n[1 (x) w_g^{(x) n}]. The spill-over in lengths n-1 and n+1
/// telescopes against the neighbouring witnesses.
std::vector<DegenerateGenerator> trace_degenerate_witness(const UnitaryMap& g, int n);

bool direct_sum_chern(const UnitaryMap& g, const UnitaryMap& h, int N);

/// Homotopy chain w_n for a path g_t given on the frame of M extended by an
/// interval coordinate t (the last variable). The contraction with d/dt
/// treats theta as odd; the past-theta convention leaves a residual that
/// tilde-rho detects from n = 2 on.
Chain build_homotopy_chain(const UnitaryMap& path, int n);
/// (b<w_n>)_n + (b<w_{n+1}>)_n - (Ch^-_n(g_1) - Ch^-_n(g_0)).
Chain homotopy_residual(const UnitaryMap& path, int n);

/// Integration along [0,1] of the interval coordinate v: contracts d/dv in
/// the slot carrying dv (sign (-1)^{r_{i-1}}), discards tensors with dv in
/// more than one slot, integrates the product of coefficients and drops v.
Chain fiber_integrate_chain(const Chain& w, int v);
/// s w_g on the frame of g extended by the interval coordinate s.
ConnectionForm scaled_connection(const UnitaryMap& g);
/// fiber_integrate_chain(Ch^+_n(s w_g)) == Ch^-_n(g).
bool periodicity_check(const UnitaryMap& g, int n);

}  // namespace chenchern

#endif  // CHENCHERN_CHERN_HPP
