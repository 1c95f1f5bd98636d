#ifndef CHENCHERN_SCALAR_HPP
#define CHENCHERN_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chenchern {

using Rational = mpq_class;

/// Thrown when an exact computation leaves the supported coefficient class.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num/den in lowest terms.
Rational frac(long num, long den);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Gaussian rational re + i*im.
struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Element of Q(i)[tau, 1/tau], tau standing for 2*pi.
///
/// Terms are kept sorted by tau power with zero coefficients removed, so two
/// scalars are equal exactly when their term vectors are equal.
class Scalar {
 public:
  using Term = std::pair<int, GaussianRational>;

  Scalar() = default;
  Scalar(long value);  // NOLINT: integers promote implicitly
  Scalar(const Rational& value);  // NOLINT
  Scalar(const Rational& re, const Rational& im, int tau_power = 0);

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar tau(int power = 1) { return Scalar(Rational(1), Rational(0), power); }
  /// e^{i tau q} for q a multiple of 1/4; throws otherwise.
  static Scalar unit_phase(const Rational& q);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when this is a plain Gaussian rational (only tau^0).
  bool is_tau_free() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_one() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator*=(const Rational& q);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, const Rational& q) { return a *= q; }
  friend Scalar operator-(Scalar a);

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// Inverse; only single-term scalars are invertible inside the ring.
  Scalar inverse() const;

  void insert_term(int tau_power, const GaussianRational& c);

 private:
  std::vector<Term> terms_;
};

Scalar conj(const Scalar& a);

/// Substitutes tau -> 2*pi in long double and rounds to double.
std::complex<double> numeric_eval(const Scalar& a);

std::ostream& operator<<(std::ostream& os, const Scalar& a);
std::string to_string(const Scalar& a);

}  // namespace chenchern

#endif  // CHENCHERN_SCALAR_HPP
