#include "chenchern/form.hpp"

#include <sstream>
#include <stdexcept>

namespace chenchern {

int merge_sign(Mask a, Mask b) {
  if ((a & b) != 0) return 0;
  int swaps = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    Mask above = j + 1 >= 32 ? 0 : ~((Mask(1) << (j + 1)) - 1);
    swaps += std::popcount(a & above);
  }
  return (swaps & 1) ? -1 : 1;
}

Form Form::function(const TrigPoly& f) {
  Form w(f.frame());
  w.add(0, f);
  return w;
}

Form Form::constant(FramePtr frame, const Scalar& c) {
  return function(TrigPoly::constant(std::move(frame), c));
}

Form Form::basis(FramePtr frame, Mask mask, const Monomial& m, const Scalar& c) {
  Form w(frame);
  w.add_term(mask, m, c);
  return w;
}

Form Form::dx(FramePtr frame, int v) {
  if (!frame->var(v).coordinate) throw std::invalid_argument("variable " + frame->var(v).name + " has no differential");
  int n = frame->size();
  return basis(std::move(frame), dx_bit(v), unit_monomial(n), Scalar(1));
}

Form Form::theta(FramePtr frame) {
  int n = frame->size();
  return basis(std::move(frame), kTheta, unit_monomial(n), Scalar(1));
}

TrigPoly Form::component(Mask mask) const {
  auto it = comps_.find(mask);
  return it == comps_.end() ? TrigPoly(frame_) : it->second;
}

void Form::add(Mask mask, const TrigPoly& p) {
  if (p.is_zero()) return;
  if (!same_frame(frame_, p.frame())) {
    if (comps_.empty() && frame_->size() == 0) {
      frame_ = p.frame();
    } else {
      throw std::invalid_argument("form and coefficient over different frames");
    }
  }
  auto [it, inserted] = comps_.try_emplace(mask, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

void Form::add_term(Mask mask, const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = comps_.find(mask);
  if (it == comps_.end()) {
    comps_.emplace(mask, TrigPoly::term(frame_, m, c));
    return;
  }
  it->second.add_term(m, c);
  if (it->second.is_zero()) comps_.erase(it);
}

bool Form::is_homogeneous() const {
  if (comps_.empty()) return true;
  int j = grading(comps_.begin()->first);
  for (const auto& [mask, p] : comps_) {
    if (grading(mask) != j) return false;
  }
  return true;
}

int Form::degree() const {
  if (comps_.empty()) throw std::logic_error("degree of the zero form");
  if (!is_homogeneous()) throw std::logic_error("degree of an inhomogeneous form");
  return grading(comps_.begin()->first);
}

Form Form::graded_part(int j) const {
  Form out(frame_);
  for (const auto& [mask, p] : comps_) {
    if (grading(mask) == j) out.comps_.emplace(mask, p);
  }
  return out;
}

int Form::max_dx_degree() const {
  int best = 0;
  for (const auto& [mask, p] : comps_) best = std::max(best, std::popcount(mask & ~kTheta));
  return best;
}

Form& Form::operator+=(const Form& other) {
  for (const auto& [mask, p] : other.comps_) add(mask, p);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  for (const auto& [mask, p] : other.comps_) add(mask, -p);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    comps_.clear();
    return *this;
  }
  for (auto& [mask, p] : comps_) p *= c;
  return *this;
}

Form operator*(const TrigPoly& f, const Form& w) {
  Form out(w.frame_);
  for (const auto& [mask, p] : w.comps_) out.add(mask, f * p);
  return out;
}

bool operator==(const Form& a, const Form& b) {
  if (a.comps_ != b.comps_) return false;
  return a.comps_.empty() || same_frame(a.frame_, b.frame_);
}

Form alpha_part(const Form& w) {
  Form out(w.frame());
  for (const auto& [mask, p] : w.components()) {
    if (!has_theta(mask)) out.add(mask, p);
  }
  return out;
}

Form beta_part(const Form& w) {
  Form out(w.frame());
  for (const auto& [mask, p] : w.components()) {
    if (has_theta(mask)) out.add(mask & ~kTheta, p);
  }
  return out;
}

Form make_tt(const Form& alpha, const Form& beta) {
  if (!alpha.is_zero() && !beta.is_zero() && !same_frame(alpha.frame(), beta.frame())) {
    throw std::invalid_argument("alpha and beta over different frames");
  }
  Form out = alpha_part(alpha);
  if (out.is_zero()) out = Form(alpha.is_zero() ? beta.frame() : alpha.frame());
  for (const auto& [mask, p] : beta.components()) {
    if (has_theta(mask)) throw std::invalid_argument("beta may not contain theta");
    out.add(mask | kTheta, p);
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  if (a.is_zero()) return Form(b.frame());
  if (b.is_zero()) return Form(a.frame());
  if (!same_frame(a.frame(), b.frame())) throw std::invalid_argument("wedge of forms over different frames");
  Form out(a.frame());
  for (const auto& [ma, pa] : a.components()) {
    for (const auto& [mb, pb] : b.components()) {
      int s = merge_sign(ma, mb);
      if (s == 0) continue;
      TrigPoly prod = pa * pb;
      if (s < 0) prod *= Scalar(-1);
      out.add(ma | mb, prod);
    }
  }
  return out;
}

Form exterior_d(const Form& w) {
  const FramePtr& frame = w.frame();
  Form out(frame);
  for (const auto& [mask, p] : w.components()) {
    for (int v = 0; v < frame->size(); ++v) {
      if (!frame->var(v).coordinate || (mask & dx_bit(v)) != 0) continue;
      TrigPoly dp = derivative(p, v);
      if (dp.is_zero()) continue;
      if (merge_sign(dx_bit(v), mask) < 0) dp *= Scalar(-1);
      out.add(mask | dx_bit(v), dp);
    }
  }
  return out;
}

Form d_T(const Form& w) {
  Form out = exterior_d(w);
  for (const auto& [mask, p] : w.components()) {
    if (has_theta(mask)) out.add(mask & ~kTheta, p);
  }
  return out;
}

Form contract(const Form& w, const std::vector<Rational>& field) {
  const FramePtr& frame = w.frame();
  if (static_cast<int>(field.size()) != frame->size()) throw std::invalid_argument("vector field size mismatch");
  Form out(frame);
  for (const auto& [mask, p] : w.components()) {
    int passed = 0;
    for (int v = 0; v < frame->size(); ++v) {
      if ((mask & dx_bit(v)) == 0) continue;
      if (sgn(field[v]) != 0) {
        Scalar c(field[v]);
        if (passed & 1) c = -c;
        out.add(mask & ~dx_bit(v), p * c);
      }
      ++passed;
    }
  }
  return out;
}

Form contract_var(const Form& w, int v) {
  std::vector<Rational> field(w.frame()->size(), Rational(0));
  field[v] = 1;
  return contract(w, field);
}

Form contract_var_graded(const Form& w, int v) {
  return contract_var(alpha_part(w), v) - wedge(Form::theta(w.frame()), contract_var(beta_part(w), v));
}

AffineMap inclusion(const FramePtr& source, const FramePtr& target) {
  AffineMap phi{target, {}, {}};
  for (const auto& var : source->vars()) {
    int j = target->index_of(var.name);
    if (j < 0) throw std::invalid_argument("variable " + var.name + " missing from target frame");
    std::vector<std::int64_t> row(target->size(), 0);
    row[j] = 1;
    phi.coeff.push_back(std::move(row));
    phi.offset.emplace_back(0);
  }
  return phi;
}

Form pullback(const Form& w, const AffineMap& phi) {
  const FramePtr& source = w.frame();
  const FramePtr& target = phi.target;
  const int ns = source->size();
  const int nt = target->size();
  if (static_cast<int>(phi.coeff.size()) != ns || static_cast<int>(phi.offset.size()) != ns) {
    throw std::invalid_argument("affine map does not match the source frame");
  }
  // Coefficients: substitute inside a combined frame [target..., source...].
  std::vector<Var> combined_vars = target->vars();
  combined_vars.insert(combined_vars.end(), source->vars().begin(), source->vars().end());
  FramePtr combined = make_frame(std::move(combined_vars));
  std::vector<int> into_combined(ns);
  for (int k = 0; k < ns; ++k) into_combined[k] = nt + k;
  std::vector<int> back(nt + ns, -1);
  for (int j = 0; j < nt; ++j) back[j] = j;
  std::vector<AffineSub> subs(ns);
  for (int k = 0; k < ns; ++k) {
    subs[k].coeff.assign(nt + ns, 0);
    for (int j = 0; j < nt; ++j) subs[k].coeff[j] = phi.coeff[k].at(j);
    subs[k].offset = phi.offset[k];
  }
  // Differentials: dy_k = sum_j a_kj dz_j.
  std::vector<Form> dys(ns, Form(target));
  for (int k = 0; k < ns; ++k) {
    if (!source->var(k).coordinate) continue;
    for (int j = 0; j < nt; ++j) {
      if (phi.coeff[k][j] != 0 && target->var(j).coordinate) {
        dys[k] += Form::dx(target, j) * Scalar(static_cast<long>(phi.coeff[k][j]));
      }
    }
  }

  Form out(target);
  for (const auto& [mask, p] : w.components()) {
    Form frame_part = has_theta(mask) ? Form::theta(target) : Form::constant(target, Scalar(1));
    for (int k = 0; k < ns && !frame_part.is_zero(); ++k) {
      if (mask & dx_bit(k)) frame_part = wedge(frame_part, dys[k]);
    }
    if (frame_part.is_zero()) continue;
    TrigPoly coef = reframe(p, combined, into_combined);
    for (int k = 0; k < ns; ++k) {
      if (!coef.independent_of(nt + k)) coef = substitute(coef, nt + k, subs[k]);
    }
    coef = reframe(coef, target, back);
    out += coef * frame_part;
  }
  return out;
}

Form reframe(const Form& w, const FramePtr& target, const std::vector<int>& index_map) {
  Form out(target);
  for (const auto& [mask, p] : w.components()) {
    Mask nm = mask & kTheta;
    int sign = 1;
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if ((mask & dx_bit(static_cast<int>(i))) == 0) continue;
      if (index_map[i] < 0) throw std::invalid_argument("reframe drops a differential");
      Mask bit = dx_bit(index_map[i]);
      sign *= merge_sign(nm, bit);
      nm |= bit;
    }
    TrigPoly q = reframe(p, target, index_map);
    if (sign < 0) q *= Scalar(-1);
    out.add(nm, q);
  }
  return out;
}

Form drop_var(const Form& w, int v) {
  const FramePtr& frame = w.frame();
  std::vector<Var> vars = frame->vars();
  vars.erase(vars.begin() + v);
  FramePtr target = make_frame(std::move(vars));
  std::vector<int> index_map(frame->size());
  for (int i = 0; i < frame->size(); ++i) index_map[i] = i < v ? i : (i == v ? -1 : i - 1);
  return reframe(w, target, index_map);
}

Form kill_differential(const Form& w, int v) {
  Form out(w.frame());
  for (const auto& [mask, p] : w.components()) {
    if ((mask & dx_bit(v)) == 0) out.add(mask, p);
  }
  return out;
}

Form fiber_integrate_I(const Form& w, int v) {
  const Var& var = w.frame()->var(v);
  if (var.kind != VarKind::Interval || !var.coordinate) {
    throw std::invalid_argument("fiber integration needs an interval coordinate, got " + var.name);
  }
  Form contracted = contract_var(w, v);
  Form integrated(w.frame());
  for (const auto& [mask, p] : contracted.components()) integrated.add(mask, integrate_unit(p, v));
  return drop_var(integrated, v);
}

Form integrate_param(const Form& w, int v) {
  const Var& var = w.frame()->var(v);
  Form integrated(w.frame());
  for (const auto& [mask, p] : w.components()) {
    if (mask & dx_bit(v)) throw std::invalid_argument("integrate_param on a form containing d" + var.name);
    integrated.add(mask, var.kind == VarKind::Interval ? integrate_unit(p, v) : fourier_integral(p, v));
  }
  return drop_var(integrated, v);
}

std::map<Mask, std::complex<double>> evaluate(const Form& w, const std::vector<double>& point) {
  std::map<Mask, std::complex<double>> out;
  for (const auto& [mask, p] : w.components()) out[mask] = evaluate(p, point);
  return out;
}

std::string mask_to_string(const Frame& frame, Mask m) {
  std::string s;
  if (has_theta(m)) s = "theta";
  for (int v = 0; v < frame.size(); ++v) {
    if (m & dx_bit(v)) {
      if (!s.empty()) s += "^";
      s += "d" + frame.var(v).name;
    }
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Form& w) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, p] : w.components()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(p) << ")" << mask_to_string(*w.frame(), mask);
  }
  return os.str();
}

}  // namespace chenchern
