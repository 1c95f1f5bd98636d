#ifndef CHENCHERN_UNITARY_HPP
#define CHENCHERN_UNITARY_HPP

#include <variant>
#include <vector>

#include "chenchern/mat_form.hpp"

namespace chenchern {

/// diag(e^{i tau <q_j, x>}); one frequency vector per diagonal entry with
/// one entry per frame variable (integers on periodic variables, quarter
/// multiples on interval ones).
struct DiagExp {
  std::vector<std::vector<Rational>> freq;
};

/// Constant l x l matrix with U U* = 1 holding exactly.
struct ConstUnitary {
  std::vector<std::vector<Scalar>> entries;
};

using UnitaryGenerator = std::variant<DiagExp, ConstUnitary>;

/// Product of generators g = G_1 G_2 ... G_k, valued in U(l) over a frame.
/// The matrix and its inverse are expanded exactly at construction.
class UnitaryMap {
 public:
  UnitaryMap(FramePtr frame, int l, std::vector<UnitaryGenerator> word);

  static UnitaryMap identity(FramePtr frame, int l);

  int size() const { return l_; }
  const FramePtr& frame() const { return frame_; }
  const std::vector<UnitaryGenerator>& word() const { return word_; }
  const MatForm& matrix() const { return g_; }
  const MatForm& inverse() const { return g_inv_; }

 private:
  FramePtr frame_;
  int l_;
  std::vector<UnitaryGenerator> word_;
  MatForm g_;
  MatForm g_inv_;
};

/// Block-diagonal g (+) h.
UnitaryMap direct_sum(const UnitaryMap& g, const UnitaryMap& h);

/// Restriction of a map on frame F to the slice x_v = value, returned on F
/// with variable v removed. value must be a multiple of 1/4.
UnitaryMap restrict_at(const UnitaryMap& g, int v, const Rational& value);

/// omega_g = g^{-1} dg over the coordinate variables of the frame.
MatForm maurer_cartan(const UnitaryMap& g);

}  // namespace chenchern

#endif  // CHENCHERN_UNITARY_HPP
