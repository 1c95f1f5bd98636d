#ifndef CHENCHERN_TRIG_POLY_HPP
#define CHENCHERN_TRIG_POLY_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chenchern/scalar.hpp"

namespace chenchern {

enum class VarKind { Periodic, Interval };

/// A variable of a coefficient ring. Coordinate variables carry a
/// differential dx in forms; parameters (like the homotopy scale s before
/// integration) do not.
struct Var {
  std::string name;
  VarKind kind = VarKind::Periodic;
  bool coordinate = true;

  friend bool operator==(const Var&, const Var&) = default;
};

class Frame {
 public:
  Frame() = default;
  explicit Frame(std::vector<Var> vars) : vars_(std::move(vars)) {}

  /// T^d with coordinates x1..xd.
  static std::shared_ptr<const Frame> torus(int d);

  int size() const { return static_cast<int>(vars_.size()); }
  const Var& var(int i) const { return vars_.at(i); }
  const std::vector<Var>& vars() const { return vars_; }
  /// -1 if absent.
  int index_of(const std::string& name) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<Var> vars_;
};

using FramePtr = std::shared_ptr<const Frame>;

FramePtr make_frame(std::vector<Var> vars);
FramePtr append_vars(const FramePtr& base, const std::vector<Var>& extra);
bool same_frame(const FramePtr& a, const FramePtr& b);

/// Exponent data of x^e * e^{i tau q x} for each variable, flattened as
/// [4q_0, e_0, 4q_1, e_1, ...]. Frequencies are stored in quarter units so
/// that phases at quarter points stay Gaussian rational.
using Monomial = std::vector<std::int32_t>;

inline std::int32_t freq4(const Monomial& m, int v) { return m[2 * v]; }
inline std::int32_t power(const Monomial& m, int v) { return m[2 * v + 1]; }
Monomial unit_monomial(int nvars);
bool is_unit_monomial(const Monomial& m);

/// Finite sum of Scalar * prod_v x_v^{e_v} e^{i tau q_v x_v}.
class TrigPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  TrigPoly() : frame_(std::make_shared<Frame>()) {}
  explicit TrigPoly(FramePtr frame) : frame_(std::move(frame)) {}

  static TrigPoly constant(FramePtr frame, const Scalar& c);
  /// e^{i tau q x_v}.
  static TrigPoly exp_i(FramePtr frame, int v, const Rational& q);
  /// x_v^e.
  static TrigPoly monomial_power(FramePtr frame, int v, int e);
  static TrigPoly term(FramePtr frame, Monomial m, const Scalar& c);

  const FramePtr& frame() const { return frame_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when every term is the unit monomial.
  bool is_constant() const;
  Scalar constant_term() const;
  /// True when no term depends on variable v.
  bool independent_of(int v) const;

  void add_term(const Monomial& m, const Scalar& c);

  TrigPoly& operator+=(const TrigPoly& other);
  TrigPoly& operator-=(const TrigPoly& other);
  TrigPoly& operator*=(const Scalar& c);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator-(TrigPoly a) { return a *= Scalar(-1); }
  friend TrigPoly operator*(TrigPoly a, const Scalar& c) { return a *= c; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);

  friend bool operator==(const TrigPoly& a, const TrigPoly& b);
  friend bool operator!=(const TrigPoly& a, const TrigPoly& b) { return !(a == b); }

 private:
  FramePtr frame_;
  Terms terms_;
};

Monomial multiply_monomials(const Monomial& a, const Monomial& b);

/// Complex conjugate for real values of all variables.
TrigPoly conj(const TrigPoly& p);

TrigPoly derivative(const TrigPoly& p, int v);
/// Antiderivative in an interval variable vanishing at 0.
TrigPoly antiderivative(const TrigPoly& p, int v);
/// Mean over the circle of a periodic variable (the frequency-0 slice).
TrigPoly fourier_integral(const TrigPoly& p, int v);

/// Affine substitution x_v -> sum_j coeff[j] x_j + offset. The result lives
/// on the same frame and no longer depends on x_v. Polynomial powers of x_v
/// are only supported when the right side is a single variable with
/// coefficient 1 and zero offset, or a constant.
struct AffineSub {
  std::vector<std::int64_t> coeff;  // one per frame variable, coeff[v] must be 0
  Rational offset;
};
TrigPoly substitute(const TrigPoly& p, int v, const AffineSub& sub);
TrigPoly substitute_constant(const TrigPoly& p, int v, const Rational& value);
/// x_v -> x_w.
TrigPoly substitute_var(const TrigPoly& p, int v, int w);
/// Integral over [0,1] in an interval variable (result independent of v).
TrigPoly integrate_unit(const TrigPoly& p, int v);

/// Moves p into a different frame. index_map[i] gives the target index of
/// source variable i, or -1 when p must not depend on it.
TrigPoly reframe(const TrigPoly& p, const FramePtr& target, const std::vector<int>& index_map);

/// Numeric value at a point (one real per frame variable).
std::complex<double> evaluate(const TrigPoly& p, const std::vector<double>& point);

std::string to_string(const TrigPoly& p);

}  // namespace chenchern

#endif  // CHENCHERN_TRIG_POLY_HPP
