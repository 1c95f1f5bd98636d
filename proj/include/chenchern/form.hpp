#ifndef CHENCHERN_FORM_HPP
#define CHENCHERN_FORM_HPP

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "chenchern/trig_poly.hpp"

namespace chenchern {

/// Bit 0 is the odd generator theta of the circle factor; bit v+1 is dx_v.
using Mask = std::uint32_t;
inline constexpr Mask kTheta = 1;
inline constexpr Mask dx_bit(int v) { return Mask(1) << (v + 1); }
inline bool has_theta(Mask m) { return (m & kTheta) != 0; }
/// Cyclic-complex grading: form degree, minus 2 when theta is present
/// (so alpha + theta*beta has grading deg alpha).
inline int grading(Mask m) { return std::popcount(m) - 2 * static_cast<int>(m & kTheta); }
/// Sign of dx_a ^ dx_b relative to the sorted product, 0 if they overlap.
int merge_sign(Mask a, Mask b);

/// Differential form alpha + theta ^ beta with trig-polynomial coefficients.
/// Plain forms on the base simply have no theta components.
class Form {
 public:
  using Components = std::map<Mask, TrigPoly>;

  Form() : frame_(std::make_shared<Frame>()) {}
  explicit Form(FramePtr frame) : frame_(std::move(frame)) {}

  static Form function(const TrigPoly& f);
  static Form constant(FramePtr frame, const Scalar& c);
  static Form basis(FramePtr frame, Mask mask, const Monomial& m, const Scalar& c);
  static Form dx(FramePtr frame, int v);
  static Form theta(FramePtr frame);

  const FramePtr& frame() const { return frame_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  TrigPoly component(Mask mask) const;
  void add(Mask mask, const TrigPoly& p);
  void add_term(Mask mask, const Monomial& m, const Scalar& c);

  /// All components share one grading; the zero form counts as homogeneous.
  bool is_homogeneous() const;
  /// Grading of a nonzero homogeneous form.
  int degree() const;
  Form graded_part(int j) const;
  /// Largest stored form degree counting dx only.
  int max_dx_degree() const;

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(Form a) { return a *= Scalar(-1); }
  friend Form operator*(Form a, const Scalar& c) { return a *= c; }
  friend Form operator*(const TrigPoly& f, const Form& w);

  friend bool operator==(const Form& a, const Form& b);
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

 private:
  FramePtr frame_;
  Components comps_;
};

using TTForm = Form;

Form alpha_part(const Form& w);
/// beta with w = alpha + theta ^ beta.
Form beta_part(const Form& w);
Form make_tt(const Form& alpha, const Form& beta);

Form wedge(const Form& a, const Form& b);
/// Exterior derivative in the coordinate variables; theta is closed.
Form exterior_d(const Form& w);
/// d_T(alpha + theta beta) = d alpha + beta - theta d beta.
Form d_T(const Form& w);

/// Contraction with a constant vector field sum_v V_v d/dx_v. Theta is
/// passed over without sign: i(alpha + theta beta) = i alpha + theta i beta.
Form contract(const Form& w, const std::vector<Rational>& field);
Form contract_var(const Form& w, int v);
/// Contraction as an odd derivation with theta counted as a 1-form:
/// i(alpha + theta beta) = i alpha - theta i beta.
Form contract_var_graded(const Form& w, int v);

/// Affine map between frames: source variable k becomes
/// sum_j coeff[k][j] * target_j + offset[k].
struct AffineMap {
  FramePtr target;
  std::vector<std::vector<std::int64_t>> coeff;
  std::vector<Rational> offset;
};
Form pullback(const Form& w, const AffineMap& phi);
/// The identity-on-shared-names embedding of a frame into a larger frame.
AffineMap inclusion(const FramePtr& source, const FramePtr& target);

/// Moves w into another frame; index_map as for TrigPoly reframe. Forms
/// with differentials of dropped variables are rejected.
Form reframe(const Form& w, const FramePtr& target, const std::vector<int>& index_map);
/// Drops an interval variable the form no longer depends on.
Form drop_var(const Form& w, int v);

/// Pullback along the slice x_v = const keeping x_v as a variable: drops
/// every component containing dx_v.
Form kill_differential(const Form& w, int v);

/// Contracts with d/ds for the interval coordinate s = v, integrates s over
/// [0,1] and drops s from the frame.
Form fiber_integrate_I(const Form& w, int v);
/// Integrates a variable with no differential over [0,1] (or its circle
/// mean when periodic) and drops it.
Form integrate_param(const Form& w, int v);

std::map<Mask, std::complex<double>> evaluate(const Form& w, const std::vector<double>& point);

std::string mask_to_string(const Frame& frame, Mask m);
std::string to_string(const Form& w);

}  // namespace chenchern

#endif  // CHENCHERN_FORM_HPP
