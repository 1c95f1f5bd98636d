#ifndef CHENCHERN_MAT_FORM_HPP
#define CHENCHERN_MAT_FORM_HPP

#include <functional>
#include <vector>

#include "chenchern/form.hpp"

namespace chenchern {

/// Matrix with Form entries. The product wedges entries in order, so the
/// Koszul signs of the entry degrees are those of the wedge product.
class MatForm {
 public:
  MatForm() = default;
  MatForm(FramePtr frame, int rows, int cols);

  static MatForm identity(FramePtr frame, int l);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FramePtr& frame() const { return frame_; }
  Form& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Form& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
  bool is_zero() const;

  MatForm& operator+=(const MatForm& other);
  MatForm& operator-=(const MatForm& other);
  MatForm& operator*=(const Scalar& c);
  friend MatForm operator+(MatForm a, const MatForm& b) { return a += b; }
  friend MatForm operator-(MatForm a, const MatForm& b) { return a -= b; }
  friend MatForm operator-(MatForm a) { return a *= Scalar(-1); }
  friend MatForm operator*(MatForm a, const Scalar& c) { return a *= c; }
  friend MatForm operator*(const TrigPoly& f, const MatForm& a);
  /// Matrix product with wedged entries.
  friend MatForm operator*(const MatForm& a, const MatForm& b);

  friend bool operator==(const MatForm& a, const MatForm& b);

 private:
  FramePtr frame_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Form> entries_;
};

MatForm entrywise(const MatForm& a, const std::function<Form(const Form&)>& fn);
/// Left multiplication of every entry by the form w (w ^ a_ij).
MatForm left_wedge(const Form& w, const MatForm& a);
Form trace(const MatForm& a);

}  // namespace chenchern

#endif  // CHENCHERN_MAT_FORM_HPP
