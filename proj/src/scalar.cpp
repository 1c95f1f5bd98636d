#include "chenchern/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

namespace chenchern {

Rational parse_rational(const std::string& text) {
  Rational q;
  std::string cleaned;
  for (char ch : text) {
    if (ch != ' ' && ch != '+') cleaned.push_back(ch);
  }
  if (cleaned.empty() || q.set_str(cleaned, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Scalar::Scalar(long value) {
  if (value != 0) terms_.push_back({0, {Rational(value), Rational(0)}});
}

Scalar::Scalar(const Rational& value) {
  if (sgn(value) != 0) terms_.push_back({0, {value, Rational(0)}});
}

Scalar::Scalar(const Rational& re, const Rational& im, int tau_power) {
  GaussianRational c{re, im};
  if (!c.is_zero()) terms_.push_back({tau_power, std::move(c)});
}

Scalar Scalar::unit_phase(const Rational& q) {
  Rational four_q = q * 4;
  if (four_q.get_den() != 1) {
    throw AlgebraError("phase e^{i tau q} is not Gaussian rational for q = " + q.get_str());
  }
  mpz_class r = four_q.get_num() % 4;
  if (r < 0) r += 4;
  switch (r.get_si()) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
  }
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.re == 1 &&
         sgn(terms_[0].second.im) == 0;
}

void Scalar::insert_term(int tau_power, const GaussianRational& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), tau_power,
                             [](const Term& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == tau_power) {
    it->second.re += c.re;
    it->second.im += c.im;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (!c.is_zero()) {
    terms_.insert(it, {tau_power, c});
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  for (const auto& [p, c] : other.terms_) insert_term(p, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  for (const auto& [p, c] : other.terms_) insert_term(p, {-c.re, -c.im});
  return *this;
}

Scalar operator-(Scalar a) {
  for (auto& [p, c] : a.terms_) {
    c.re = -c.re;
    c.im = -c.im;
  }
  return a;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    const auto& [pa, ca] = a.terms_[0];
    const auto& [pb, cb] = b.terms_[0];
    GaussianRational c{ca.re * cb.re - ca.im * cb.im, ca.re * cb.im + ca.im * cb.re};
    if (!c.is_zero()) out.terms_.push_back({pa + pb, std::move(c)});
    return out;
  }
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      out.insert_term(pa + pb, {ca.re * cb.re - ca.im * cb.im, ca.re * cb.im + ca.im * cb.re});
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

Scalar& Scalar::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) {
    c.re *= q;
    c.im *= q;
  }
  return *this;
}

bool operator<(const Scalar& a, const Scalar& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const Scalar::Term& x, const Scalar::Term& y) {
        if (x.first != y.first) return x.first < y.first;
        if (x.second.re != y.second.re) return x.second.re < y.second.re;
        return x.second.im < y.second.im;
      });
}

Scalar Scalar::inverse() const {
  if (terms_.size() != 1) {
    throw AlgebraError("scalar " + to_string(*this) + " is not invertible in Q(i)[tau,1/tau]");
  }
  const auto& [p, c] = terms_[0];
  Rational norm = c.re * c.re + c.im * c.im;
  return Scalar(c.re / norm, -c.im / norm, -p);
}

Scalar conj(const Scalar& a) {
  Scalar out;
  for (const auto& [p, c] : a.terms()) out.insert_term(p, {c.re, -c.im});
  return out;
}

std::complex<double> numeric_eval(const Scalar& a) {
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double re = 0.0L;
  long double im = 0.0L;
  for (const auto& [p, c] : a.terms()) {
    long double scale = std::pow(two_pi, static_cast<long double>(p));
    re += scale * static_cast<long double>(c.re.get_d());
    im += scale * static_cast<long double>(c.im.get_d());
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) {
  if (a.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [p, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re.get_str();
    if (sgn(c.im) != 0) os << (sgn(c.im) > 0 ? "+" : "") << c.im.get_str() << "i";
    os << ")";
    if (p != 0) os << "*tau^" << p;
  }
  return os;
}

std::string to_string(const Scalar& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

}  // namespace chenchern
