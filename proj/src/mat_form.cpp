#include "chenchern/mat_form.hpp"

#include <stdexcept>

namespace chenchern {

MatForm::MatForm(FramePtr frame, int rows, int cols)
    : frame_(std::move(frame)), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows * cols), Form(frame_)) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix sizes must be positive");
}

MatForm MatForm::identity(FramePtr frame, int l) {
  MatForm m(frame, l, l);
  for (int i = 0; i < l; ++i) m(i, i) = Form::constant(frame, Scalar(1));
  return m;
}

bool MatForm::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

MatForm& MatForm::operator+=(const MatForm& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

MatForm& MatForm::operator-=(const MatForm& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

MatForm& MatForm::operator*=(const Scalar& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

MatForm operator*(const TrigPoly& f, const MatForm& a) {
  MatForm out(a.frame_, a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = f * a.entries_[k];
  return out;
}

MatForm operator*(const MatForm& a, const MatForm& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  MatForm out(a.frame_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < b.cols_; ++j) {
      Form sum(a.frame_);
      for (int k = 0; k < a.cols_; ++k) sum += wedge(a(i, k), b(k, j));
      out(i, j) = std::move(sum);
    }
  }
  return out;
}

bool operator==(const MatForm& a, const MatForm& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

MatForm entrywise(const MatForm& a, const std::function<Form(const Form&)>& fn) {
  // fn may move entries to another frame; the result follows it.
  std::vector<Form> mapped;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) mapped.push_back(fn(a(i, j)));
  }
  MatForm out(mapped.front().frame(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = std::move(mapped[static_cast<std::size_t>(i * a.cols() + j)]);
  }
  return out;
}

MatForm left_wedge(const Form& w, const MatForm& a) {
  return entrywise(a, [&](const Form& e) { return wedge(w, e); });
}

Form trace(const MatForm& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace of a non-square matrix");
  Form sum(a.frame());
  for (int i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

}  // namespace chenchern
