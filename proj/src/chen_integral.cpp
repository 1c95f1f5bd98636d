#include "chenchern/chen_integral.hpp"

#include <stdexcept>

#include "chenchern/chern.hpp"

namespace chenchern {

namespace {

bool quarter(const Rational& q) {
  mpq_class four = q * 4;
  return four.get_den() == 1;
}

/// Frame T^m followed by the rotation parameter u (when averaging) and the
/// time parameter t, both without differentials.
struct EvalFrame {
  FramePtr frame;
  int u = -1;
  int t = -1;
};

EvalFrame eval_frame(const Plot& p, bool average, const std::vector<std::string>& extra = {}) {
  std::vector<Var> vars = plot_domain(p)->vars();
  EvalFrame out;
  if (average) {
    out.u = static_cast<int>(vars.size());
    vars.push_back(Var{"u", VarKind::Interval, false});
  }
  for (const auto& name : extra) vars.push_back(Var{name, VarKind::Interval, false});
  out.t = static_cast<int>(vars.size());
  vars.push_back(Var{"t", VarKind::Interval, false});
  out.frame = make_frame(std::move(vars));
  return out;
}

/// x_j = sum_k A_jk y_k + v_j (t + u) + c_j, with the t term only when moving.
AffineMap loop_map(const Plot& p, const EvalFrame& ef, bool at_time) {
  AffineMap phi;
  phi.target = ef.frame;
  phi.coeff.assign(p.d, std::vector<std::int64_t>(ef.frame->size(), 0));
  phi.offset = p.c;
  for (int j = 0; j < p.d; ++j) {
    for (int k = 0; k < p.m; ++k) phi.coeff[j][k] = p.A[j][k];
    if (ef.u >= 0) phi.coeff[j][ef.u] = p.v[j];
    if (at_time) phi.coeff[j][ef.t] = p.v[j];
  }
  return phi;
}

std::vector<Rational> speed(const Plot& p) {
  std::vector<Rational> out;
  for (long x : p.v) out.emplace_back(x);
  return out;
}

Form antiderivative_form(const Form& w, int v) {
  Form out(w.frame());
  for (const auto& [mask, poly] : w.components()) out.add(mask, antiderivative(poly, v));
  return out;
}

/// (i_v alpha - beta) of a slot form.
Form loop_slot(const Form& w, const std::vector<Rational>& v) { return contract(alpha_part(w), v) - beta_part(w); }

void check_chain_frame(const Chain& w, const Plot& p) {
  const FramePtr& f = w.frame();
  if (f->size() != p.d) throw std::invalid_argument("plot target dimension does not match the chain frame");
  for (const auto& var : f->vars()) {
    if (var.kind != VarKind::Periodic || !var.coordinate) {
      throw std::invalid_argument("plot evaluation needs a chain over a torus");
    }
  }
}

Form evaluate_chain(const Chain& w, const Plot& p, bool average) {
  validate_plot(p);
  check_chain_frame(w, p);
  const EvalFrame ef = eval_frame(p, average);
  const AffineMap at_t = loop_map(p, ef, true);
  const AffineMap at_0 = loop_map(p, ef, false);
  const std::vector<Rational> v = speed(p);
  const FramePtr& frame = w.frame();

  Form acc(ef.frame);
  for (const auto& [key, coef] : w.terms()) {
    std::vector<Form> slots = slot_forms(frame, key);
    Form head = pullback(alpha_part(slots[0]), at_0);
    if (head.is_zero()) continue;
    Form h = Form::constant(ef.frame, Scalar(1));
    for (std::size_t i = 1; i < slots.size() && !h.is_zero(); ++i) {
      h = antiderivative_form(wedge(h, pullback(loop_slot(slots[i], v), at_t)), ef.t);
    }
    if (h.is_zero()) continue;
    // h is the integral over {t_1 <= ... <= t_n <= t}; close at t = 1.
    Form closed(ef.frame);
    for (const auto& [mask, poly] : h.components()) closed.add(mask, substitute_constant(poly, ef.t, Rational(1)));
    acc += wedge(head, closed) * coef;
  }
  Form out = drop_var(acc, ef.t);
  if (average) out = integrate_param(out, ef.u);
  return out;
}

}  // namespace

void validate_plot(const Plot& p) {
  if (p.m < 0 || p.d < 0) throw std::invalid_argument("plot dimensions must be non-negative");
  if (static_cast<int>(p.A.size()) != p.d || static_cast<int>(p.v.size()) != p.d ||
      static_cast<int>(p.c.size()) != p.d) {
    throw std::invalid_argument("plot data does not match the target dimension");
  }
  for (const auto& row : p.A) {
    if (static_cast<int>(row.size()) != p.m) throw std::invalid_argument("plot matrix row has the wrong length");
  }
  for (const auto& c : p.c) {
    if (!quarter(c)) throw std::invalid_argument("plot offsets must be multiples of 1/4");
  }
}

FramePtr plot_domain(const Plot& p) { return Frame::torus(p.m); }

Plot identity_plot(int d) {
  Plot p{d, d, std::vector<std::vector<long>>(d, std::vector<long>(d, 0)), std::vector<long>(d, 0),
         std::vector<Rational>(d, Rational(0)), "identity"};
  for (int j = 0; j < d; ++j) p.A[j][j] = 1;
  return p;
}

Plot extend_by_rotation(const Plot& p) {
  Plot out = p;
  out.m = p.m + 1;
  for (int j = 0; j < p.d; ++j) out.A[j].push_back(p.v[j]);
  out.label = p.label + "+rotation";
  return out;
}

std::vector<Plot> plot_battery(int d) {
  std::vector<Plot> out;
  out.push_back(identity_plot(d));
  auto zeros = [&](int m) { return std::vector<std::vector<long>>(d, std::vector<long>(m, 0)); };
  auto offsets = [&](long num) {
    std::vector<Rational> c(d);
    for (int j = 0; j < d; ++j) c[j] = frac(num * (j + 1), 4);
    return c;
  };
  {
    Plot p{0, d, zeros(0), std::vector<long>(d, 0), offsets(1), "point"};
    p.v[0] = 1;
    p.label = "single loop";
    out.push_back(p);
  }
  {
    Plot p{1, d, zeros(1), std::vector<long>(d, 0), offsets(1), "line"};
    for (int j = 0; j < d; ++j) p.A[j][0] = j % 2 == 0 ? 1 : -1;
    out.push_back(p);
  }
  {
    Plot p{1, d, zeros(1), std::vector<long>(d, 1), offsets(3), "moving line"};
    p.A[0][0] = 1;
    if (d > 1) p.v[1] = -1;
    out.push_back(p);
  }
  {
    const int m = d < 2 ? d : 2;
    Plot p{m, d, zeros(m), std::vector<long>(d, 0), offsets(2), "moving sheet"};
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < m; ++k) p.A[j][k] = (j + k) % 2 == 0 ? 1 : (k == 0 ? 2 : 0);
      p.v[j] = j == 0 ? 1 : (j % 2 == 0 ? 0 : 2);
    }
    out.push_back(p);
  }
  {
    Plot p = identity_plot(d);
    p.v.assign(d, 0);
    p.v[d - 1] = 1;
    p.c = offsets(1);
    p.label = "identity family with loop";
    out.push_back(p);
  }
  return out;
}

Form tilde_rho_eval(const Chain& w, const Plot& p) { return evaluate_chain(w, p, false); }

Form rho_eval(const Chain& w, const Plot& p) { return evaluate_chain(w, p, true); }

Form restrict_to_M(const Chain& w) { return rho_eval(w, identity_plot(w.frame()->size())); }

Form p_term(const Chain& w, const Plot& p) {
  Form extended = rho_eval(w, extend_by_rotation(p));
  return integrate_param(contract_var(extended, p.m), p.m);
}

ChainMapSides chain_map_sides(const Chain& w, const Plot& p) {
  Chain bw = hochschild_b(w) + connes_B(w);
  return {rho_eval(bw, p), exterior_d(rho_eval(w, p)) + p_term(w, p)};
}

bool chain_map_check(const Chain& w, const Plot& p) {
  ChainMapSides sides = chain_map_sides(w, p);
  return sides.lhs == sides.rhs;
}

Form rho_chern_minus(const UnitaryMap& g, int n, const Plot& p, bool average) {
  validate_plot(p);
  if (g.frame()->size() != p.d) throw std::invalid_argument("plot target dimension does not match the map");
  const EvalFrame ef = eval_frame(p, average, {"s"});
  const int s = ef.t - 1;
  const int l = g.size();
  if (n <= 0) return Form(plot_domain(p));
  const AffineMap at_t = loop_map(p, ef, true);
  const std::vector<Rational> v = speed(p);
  MatForm omega = maurer_cartan(g);
  MatForm omega2 = omega * omega;
  auto pull = [&](const MatForm& m) { return entrywise(m, [&](const Form& e) { return pullback(e, at_t); }); };
  TrigPoly sp = TrigPoly::monomial_power(ef.frame, s, 1);
  MatForm fa = sp * pull(entrywise(omega, [&](const Form& e) { return contract(e, v); })) +
               (sp * sp - sp) * pull(omega2);
  MatForm fb = pull(omega);
  auto integrate_t = [&](const MatForm& m) {
    return entrywise(m, [&](const Form& e) { return antiderivative_form(e, ef.t); });
  };
  MatForm g0 = MatForm::identity(ef.frame, l);
  MatForm g1(ef.frame, l, l);
  for (int k = 1; k <= n; ++k) {
    MatForm next1 = integrate_t(g1 * fa + g0 * fb);
    g0 = integrate_t(g0 * fa);
    g1 = std::move(next1);
  }
  Form tr = trace(g1);
  Form closed(ef.frame);
  for (const auto& [mask, poly] : tr.components()) closed.add(mask, substitute_constant(poly, ef.t, Rational(1)));
  Form out = integrate_param(drop_var(closed, ef.t), s);
  if (average) out = integrate_param(out, ef.u);
  return out;
}

Form odd_chern_form(const UnitaryMap& g, int n) {
  if (n < 1) throw std::invalid_argument("odd Chern form needs n >= 1");
  MatForm omega = maurer_cartan(g);
  MatForm power = omega;
  for (int k = 1; k < 2 * n - 1; ++k) power = power * omega;
  mpz_class num = 1;
  mpz_class den = 1;
  for (int k = 2; k < n; ++k) num *= k;
  for (int k = 2; k < 2 * n; ++k) den *= k;
  Rational coef(num, den);
  coef.canonicalize();
  if (n % 2 == 0) coef = -coef;
  return trace(power) * Scalar(coef);
}

}  // namespace chenchern
