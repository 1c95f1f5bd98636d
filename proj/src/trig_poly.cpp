#include "chenchern/trig_poly.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace chenchern {

int Frame::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return -1;
}

FramePtr Frame::torus(int d) {
  std::vector<Var> vars;
  for (int i = 0; i < d; ++i) vars.push_back({"x" + std::to_string(i + 1), VarKind::Periodic, true});
  return std::make_shared<const Frame>(std::move(vars));
}

FramePtr make_frame(std::vector<Var> vars) { return std::make_shared<const Frame>(std::move(vars)); }

FramePtr append_vars(const FramePtr& base, const std::vector<Var>& extra) {
  std::vector<Var> vars = base->vars();
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make_frame(std::move(vars));
}

bool same_frame(const FramePtr& a, const FramePtr& b) { return a == b || *a == *b; }

Monomial unit_monomial(int nvars) { return Monomial(2 * static_cast<std::size_t>(nvars), 0); }

bool is_unit_monomial(const Monomial& m) {
  for (auto x : m) {
    if (x != 0) return false;
  }
  return true;
}

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

namespace {

void require_same(const FramePtr& a, const FramePtr& b) {
  if (!same_frame(a, b)) throw std::invalid_argument("trig polynomials over different variable frames");
}

// 1/(i tau q) for q = f/4.
Scalar inverse_i_tau(std::int64_t f4) {
  Rational q(f4, 4);
  q.canonicalize();
  return Scalar(Rational(0), Rational(-1) / q, -1);
}

}  // namespace

TrigPoly TrigPoly::constant(FramePtr frame, const Scalar& c) {
  TrigPoly p(frame);
  p.add_term(unit_monomial(frame->size()), c);
  return p;
}

TrigPoly TrigPoly::exp_i(FramePtr frame, int v, const Rational& q) {
  Rational f = q * 4;
  if (f.get_den() != 1) throw AlgebraError("frequency must be a multiple of 1/4");
  if (frame->var(v).kind == VarKind::Periodic && Rational(q).get_den() != 1) {
    throw AlgebraError("periodic variable " + frame->var(v).name + " needs an integer frequency");
  }
  Monomial m = unit_monomial(frame->size());
  m[2 * v] = static_cast<std::int32_t>(f.get_num().get_si());
  return term(std::move(frame), std::move(m), Scalar(1));
}

TrigPoly TrigPoly::monomial_power(FramePtr frame, int v, int e) {
  if (frame->var(v).kind == VarKind::Periodic && e != 0) {
    throw AlgebraError("polynomial powers of periodic variable " + frame->var(v).name);
  }
  Monomial m = unit_monomial(frame->size());
  m[2 * v + 1] = e;
  return term(std::move(frame), std::move(m), Scalar(1));
}

TrigPoly TrigPoly::term(FramePtr frame, Monomial m, const Scalar& c) {
  TrigPoly p(std::move(frame));
  p.add_term(m, c);
  return p;
}

bool TrigPoly::is_constant() const {
  for (const auto& [m, c] : terms_) {
    if (!is_unit_monomial(m)) return false;
  }
  return true;
}

Scalar TrigPoly::constant_term() const {
  auto it = terms_.find(unit_monomial(frame_->size()));
  return it == terms_.end() ? Scalar() : it->second;
}

bool TrigPoly::independent_of(int v) const {
  for (const auto& [m, c] : terms_) {
    if (m[2 * v] != 0 || m[2 * v + 1] != 0) return false;
  }
  return true;
}

void TrigPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    frame_ = other.frame_;
    terms_ = other.terms_;
    return *this;
  }
  require_same(frame_, other.frame_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) {
  if (other.terms_.empty()) return *this;
  if (!terms_.empty()) require_same(frame_, other.frame_);
  if (terms_.empty()) frame_ = other.frame_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TrigPoly& TrigPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  if (a.is_zero()) return TrigPoly(b.frame_);
  if (b.is_zero()) return TrigPoly(a.frame_);
  require_same(a.frame_, b.frame_);
  TrigPoly out(a.frame_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply_monomials(ma, mb), ca * cb);
  }
  return out;
}

bool operator==(const TrigPoly& a, const TrigPoly& b) {
  if (a.terms_ != b.terms_) return false;
  return a.terms_.empty() || same_frame(a.frame_, b.frame_);
}

TrigPoly conj(const TrigPoly& p) {
  TrigPoly out(p.frame());
  for (const auto& [m, c] : p.terms()) {
    Monomial n = m;
    for (std::size_t v = 0; v < n.size(); v += 2) n[v] = -n[v];
    out.add_term(n, conj(c));
  }
  return out;
}

TrigPoly derivative(const TrigPoly& p, int v) {
  TrigPoly out(p.frame());
  for (const auto& [m, c] : p.terms()) {
    std::int32_t f = m[2 * v];
    std::int32_t e = m[2 * v + 1];
    if (f != 0) out.add_term(m, c * Scalar(Rational(0), frac(f, 4), 1));
    if (e != 0) {
      Monomial lower = m;
      lower[2 * v + 1] = e - 1;
      out.add_term(lower, c * Scalar(static_cast<long>(e)));
    }
  }
  return out;
}

TrigPoly antiderivative(const TrigPoly& p, int v) {
  if (p.frame()->var(v).kind != VarKind::Interval) {
    throw AlgebraError("antiderivative in periodic variable " + p.frame()->var(v).name +
                       "; use fourier_integral");
  }
  TrigPoly out(p.frame());
  for (const auto& [m, c] : p.terms()) {
    std::int32_t f = m[2 * v];
    std::int32_t e = m[2 * v + 1];
    if (f == 0) {
      Monomial up = m;
      up[2 * v + 1] = e + 1;
      out.add_term(up, c * frac(1, e + 1));
      continue;
    }
    // F_k = a x^k E - k a F_{k-1}, F_0 = a (E - 1), a = 1/(i tau q).
    Scalar a = inverse_i_tau(f);
    std::vector<Scalar> with_exp(static_cast<std::size_t>(e) + 1);
    Scalar without_exp;
    with_exp[0] = a;
    without_exp = -a;
    for (int k = 1; k <= e; ++k) {
      Scalar factor = -(a * Scalar(static_cast<long>(k)));
      for (int j = 0; j < k; ++j) with_exp[j] *= factor;
      without_exp *= factor;
      with_exp[k] = a;
    }
    for (int k = 0; k <= e; ++k) {
      Monomial mk = m;
      mk[2 * v + 1] = k;
      out.add_term(mk, c * with_exp[k]);
    }
    Monomial m0 = m;
    m0[2 * v] = 0;
    m0[2 * v + 1] = 0;
    out.add_term(m0, c * without_exp);
  }
  return out;
}

TrigPoly fourier_integral(const TrigPoly& p, int v) {
  if (p.frame()->var(v).kind != VarKind::Periodic) {
    throw AlgebraError("fourier_integral over interval variable " + p.frame()->var(v).name);
  }
  TrigPoly out(p.frame());
  for (const auto& [m, c] : p.terms()) {
    if (m[2 * v] == 0) out.add_term(m, c);
  }
  return out;
}

namespace {

TrigPoly raise(const TrigPoly& base, int e) {
  TrigPoly out = TrigPoly::constant(base.frame(), Scalar(1));
  for (int k = 0; k < e; ++k) out = out * base;
  return out;
}

}  // namespace

TrigPoly substitute(const TrigPoly& p, int v, const AffineSub& sub) {
  const FramePtr& frame = p.frame();
  if (static_cast<int>(sub.coeff.size()) != frame->size() || sub.coeff[v] != 0) {
    throw std::invalid_argument("malformed affine substitution");
  }
  int single = -1;
  int nonzero = 0;
  for (int j = 0; j < frame->size(); ++j) {
    if (sub.coeff[j] != 0) {
      ++nonzero;
      single = j;
    }
  }
  bool simple_rename = nonzero == 1 && sub.coeff[single] == 1 && sgn(sub.offset) == 0;
  TrigPoly linear(frame);
  bool linear_built = false;

  TrigPoly out(frame);
  for (const auto& [m, c] : p.terms()) {
    std::int64_t f = m[2 * v];
    std::int32_t e = m[2 * v + 1];
    Monomial base = m;
    base[2 * v] = 0;
    base[2 * v + 1] = 0;
    for (int j = 0; j < frame->size(); ++j) base[2 * j] += static_cast<std::int32_t>(f * sub.coeff[j]);
    Scalar coef = c;
    if (f != 0 && sgn(sub.offset) != 0) coef *= Scalar::unit_phase(frac(f, 4) * sub.offset);
    if (e == 0) {
      out.add_term(base, coef);
    } else if (nonzero == 0) {
      Rational pw = 1;
      for (int k = 0; k < e; ++k) pw *= sub.offset;
      out.add_term(base, coef * pw);
    } else if (simple_rename) {
      base[2 * single + 1] += e;
      out.add_term(base, coef);
    } else {
      if (!linear_built) {
        for (int j = 0; j < frame->size(); ++j) {
          if (sub.coeff[j] != 0) linear += TrigPoly::monomial_power(frame, j, 1) * Scalar(sub.coeff[j]);
        }
        linear += TrigPoly::constant(frame, Scalar(sub.offset));
        linear_built = true;
      }
      out += TrigPoly::term(frame, base, coef) * raise(linear, e);
    }
  }
  return out;
}

TrigPoly substitute_constant(const TrigPoly& p, int v, const Rational& value) {
  AffineSub sub{std::vector<std::int64_t>(p.frame()->size(), 0), value};
  return substitute(p, v, sub);
}

TrigPoly substitute_var(const TrigPoly& p, int v, int w) {
  AffineSub sub{std::vector<std::int64_t>(p.frame()->size(), 0), Rational(0)};
  sub.coeff[w] = 1;
  return substitute(p, v, sub);
}

TrigPoly integrate_unit(const TrigPoly& p, int v) {
  // Fast path for the common pure-polynomial case.
  TrigPoly out(p.frame());
  TrigPoly oscillating(p.frame());
  for (const auto& [m, c] : p.terms()) {
    if (m[2 * v] == 0) {
      Monomial m0 = m;
      std::int32_t e = m0[2 * v + 1];
      m0[2 * v + 1] = 0;
      out.add_term(m0, c * frac(1, e + 1));
    } else {
      oscillating.add_term(m, c);
    }
  }
  if (!oscillating.is_zero()) out += substitute_constant(antiderivative(oscillating, v), v, Rational(1));
  return out;
}

TrigPoly reframe(const TrigPoly& p, const FramePtr& target, const std::vector<int>& index_map) {
  TrigPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial t = unit_monomial(target->size());
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if (index_map[i] < 0) {
        if (m[2 * i] != 0 || m[2 * i + 1] != 0) {
          throw std::invalid_argument("reframe drops variable " + p.frame()->var(static_cast<int>(i)).name +
                                      " that the polynomial depends on");
        }
        continue;
      }
      t[2 * index_map[i]] += m[2 * i];
      t[2 * index_map[i] + 1] += m[2 * i + 1];
    }
    out.add_term(t, c);
  }
  return out;
}

std::complex<double> evaluate(const TrigPoly& p, const std::vector<double>& point) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double phase = 0.0;
    double mag = 1.0;
    for (std::size_t j = 0; j < point.size(); ++j) {
      phase += two_pi * (m[2 * j] / 4.0) * point[j];
      if (m[2 * j + 1] != 0) mag *= std::pow(point[j], m[2 * j + 1]);
    }
    sum += numeric_eval(c) * mag * std::polar(1.0, phase);
  }
  return sum;
}

std::string to_string(const TrigPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c << "]";
    for (int j = 0; j < p.frame()->size(); ++j) {
      const std::string& name = p.frame()->var(j).name;
      if (m[2 * j + 1] != 0) os << "*" << name << "^" << m[2 * j + 1];
      if (m[2 * j] != 0) os << "*e(" << frac(m[2 * j], 4).get_str() << " " << name << ")";
    }
  }
  return os.str();
}

}  // namespace chenchern
