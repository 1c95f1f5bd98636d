#include "chenchern/chern.hpp"

#include <stdexcept>

namespace chenchern {

namespace {

std::vector<int> prefix_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

MatForm extend(const MatForm& a, const FramePtr& target) {
  std::vector<int> index_map = prefix_map(a.frame()->size());
  return entrywise(a, [&](const Form& e) { return reframe(e, target, index_map); });
}

FramePtr with_param(const FramePtr& base, const std::string& name) {
  return append_vars(base, {Var{name, VarKind::Interval, false}});
}

FramePtr prefix_frame(const FramePtr& frame, int n) {
  std::vector<Var> vars(frame->vars().begin(), frame->vars().begin() + n);
  return make_frame(std::move(vars));
}

// One term of a matrix entry, split into the part on the kept frame and the
// (frequency, power) data of each integrated parameter.
struct EntryTerm {
  Mask mask;
  Monomial base;
  std::vector<std::int32_t> param;
  Scalar coef;
};

struct TraceExpansion {
  int l = 0;
  int nb = 0;
  int params = 0;
  std::vector<std::vector<std::vector<EntryTerm>>> entries;  // [slot][i*l+j]
  std::map<std::vector<std::int32_t>, Scalar> integral_cache;
  Chain* out = nullptr;

  Scalar integral(const std::vector<std::int32_t>& data) {
    auto it = integral_cache.find(data);
    if (it != integral_cache.end()) return it->second;
    static const FramePtr line = make_frame({Var{"u", VarKind::Interval, false}});
    Scalar value(1);
    for (int p = 0; p < params && !value.is_zero(); ++p) {
      TrigPoly mono = TrigPoly::term(line, Monomial{data[2 * p], data[2 * p + 1]}, Scalar(1));
      value *= integrate_unit(mono, 0).constant_term();
    }
    integral_cache.emplace(data, value);
    return value;
  }

  void walk(std::size_t slot, int i0, int i, TensorKey& key, std::vector<std::int32_t>& param, const Scalar& coef) {
    const std::size_t nslots = entries.size();
    if (slot == nslots) {
      Scalar c = params > 0 ? coef * integral(param) : coef;
      out->add_basis(key, c);
      return;
    }
    const bool last = slot + 1 == nslots;
    for (int j = 0; j < l; ++j) {
      if (last && j != i0) continue;
      const auto& terms = entries[slot][static_cast<std::size_t>(i * l + j)];
      for (const auto& t : terms) {
        if (slot >= 1 && t.mask == 0 && is_unit_monomial(t.base)) continue;
        const std::size_t ksize = key.size();
        key.push_back(static_cast<std::int32_t>(t.mask));
        key.insert(key.end(), t.base.begin(), t.base.end());
        for (int p = 0; p < 2 * params; ++p) param[p] += t.param[p];
        walk(slot + 1, i0, j, key, param, coef * t.coef);
        for (int p = 0; p < 2 * params; ++p) param[p] -= t.param[p];
        key.resize(ksize);
      }
    }
  }
};

}  // namespace

ScriptAB script_A_B(const UnitaryMap& g) {
  ScriptAB out;
  out.frame = with_param(g.frame(), "s");
  out.s = out.frame->size() - 1;
  MatForm omega = extend(maurer_cartan(g), out.frame);
  MatForm omega2 = omega * omega;
  TrigPoly s = TrigPoly::monomial_power(out.frame, out.s, 1);
  TrigPoly s_one_minus_s = s - s * s;
  Form theta = Form::theta(out.frame);
  out.A = s * omega + s_one_minus_s * left_wedge(theta, omega2);
  out.B = -left_wedge(theta, omega);
  return out;
}

Chain generalized_trace_integrated(const std::vector<MatForm>& slots, int params) {
  if (slots.empty()) throw std::invalid_argument("generalized trace needs at least one slot");
  const FramePtr& frame = slots[0].frame();
  const int l = slots[0].rows();
  for (const auto& s : slots) {
    if (s.rows() != l || s.cols() != l) throw std::invalid_argument("generalized trace slot size mismatch");
    if (!same_frame(s.frame(), frame)) throw std::invalid_argument("generalized trace slots over different frames");
  }
  const int nv = frame->size();
  const int nb = nv - params;
  FramePtr base = params == 0 ? frame : prefix_frame(frame, nb);
  Chain out(base);

  TraceExpansion ex;
  ex.l = l;
  ex.nb = nb;
  ex.params = params;
  ex.out = &out;
  ex.entries.resize(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    ex.entries[k].resize(static_cast<std::size_t>(l * l));
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) {
        auto& list = ex.entries[k][static_cast<std::size_t>(i * l + j)];
        for (const auto& [mask, p] : slots[k](i, j).components()) {
          for (int v = nb; v < nv; ++v) {
            if (mask & dx_bit(v)) throw std::invalid_argument("integrated parameter carries a differential");
          }
          for (const auto& [mono, c] : p.terms()) {
            EntryTerm t{mask, Monomial(mono.begin(), mono.begin() + 2 * nb),
                        std::vector<std::int32_t>(mono.begin() + 2 * nb, mono.end()), c};
            list.push_back(std::move(t));
          }
        }
      }
    }
  }
  TensorKey key;
  key.push_back(static_cast<std::int32_t>(slots.size()) - 1);
  std::vector<std::int32_t> param(2 * static_cast<std::size_t>(params), 0);
  for (int i0 = 0; i0 < l; ++i0) ex.walk(0, i0, i0, key, param, Scalar(1));
  return out;
}

Chain generalized_trace(const std::vector<MatForm>& slots) { return generalized_trace_integrated(slots, 0); }

Chain chern_minus(const UnitaryMap& g, int n) {
  Chain out(g.frame());
  if (n <= 0) return out;
  ScriptAB ab = script_A_B(g);
  MatForm one = MatForm::identity(ab.frame, g.size());
  for (int k = 1; k <= n; ++k) {
    std::vector<MatForm> slots{one};
    for (int i = 1; i <= n; ++i) slots.push_back(i == k ? ab.B : ab.A);
    out += generalized_trace_integrated(slots, 1);
  }
  return out;
}

Chain chern_minus_upto(const UnitaryMap& g, int N) {
  Chain out(g.frame());
  for (int n = 1; n <= N; ++n) out += chern_minus(g, n);
  return out;
}

MatForm curvature(const ConnectionForm& C) {
  return entrywise(C, [](const Form& e) { return exterior_d(e); }) + C * C;
}

Chain chern_plus(const ConnectionForm& C, int n) {
  MatForm slot = C - left_wedge(Form::theta(C.frame()), curvature(C));
  std::vector<MatForm> slots{MatForm::identity(C.frame(), C.rows())};
  for (int i = 0; i < n; ++i) slots.push_back(slot);
  return generalized_trace(slots);
}

Chain trace_power(const UnitaryMap& g, int n) {
  MatForm omega = maurer_cartan(g);
  std::vector<MatForm> slots{MatForm::identity(g.frame(), g.size())};
  for (int i = 0; i < n; ++i) slots.push_back(omega);
  return generalized_trace(slots);
}

Chain b_chern_component(const UnitaryMap& g, int n) {
  return hochschild_b(chern_minus(g, n)).length_component(n) + hochschild_b(chern_minus(g, n + 1)).length_component(n);
}

bool bchern_identity_check(const UnitaryMap& g, int n) { return b_chern_component(g, n) == trace_power(g, n); }

Chain generator_sum(const std::vector<DegenerateGenerator>& gens, const FramePtr& frame) {
  Chain out(frame);
  for (const auto& gen : gens) out += make_degenerate(gen.kind, gen.factors, gen.r) * gen.coef;
  return out;
}

std::vector<DegenerateGenerator> leibniz_trace_generators(const UnitaryMap& g, int k) {
  const int l = g.size();
  const MatForm& gm = g.matrix();
  const MatForm& h = g.inverse();
  MatForm omega = maurer_cartan(g);
  std::vector<DegenerateGenerator> out;
  // indices: i0, a, then i1..ik (the omega chain returns to i0)
  std::vector<int> idx(static_cast<std::size_t>(k) + 2, 0);
  const long total = [&] {
    long t = 1;
    for (std::size_t q = 0; q < idx.size(); ++q) t *= l;
    return t;
  }();
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (auto& x : idx) {
      x = static_cast<int>(c % l);
      c /= l;
    }
    const int i0 = idx[0];
    const int a = idx[1];
    std::vector<Form> factors;
    factors.push_back(h(i0, a));
    if (k == 0) {
      factors.push_back(gm(a, i0));
    } else {
      factors.push_back(gm(a, idx[2]));
      for (int q = 1; q <= k; ++q) {
        int from = idx[static_cast<std::size_t>(q) + 1];
        int to = q == k ? i0 : idx[static_cast<std::size_t>(q) + 2];
        factors.push_back(omega(from, to));
      }
    }
    bool zero = false;
    for (const auto& f : factors) zero = zero || f.is_zero();
    if (zero) continue;
    out.push_back({DegenerateKind::Leibniz, std::move(factors), 1, Scalar(1)});
  }
  return out;
}

std::vector<DegenerateGenerator> trace_degenerate_witness(const UnitaryMap& g, int n) {
  if (n < 1) throw std::invalid_argument("trace witness needs n >= 1");
  std::vector<DegenerateGenerator> out = leibniz_trace_generators(g, n - 1);
  std::vector<DegenerateGenerator> more = leibniz_trace_generators(g, n);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

bool direct_sum_chern(const UnitaryMap& g, const UnitaryMap& h, int N) {
  UnitaryMap gh = direct_sum(g, h);
  for (int n = 0; n <= N; ++n) {
    if (chern_minus(gh, n) != chern_minus(g, n) + chern_minus(h, n)) return false;
  }
  return true;
}

Chain build_homotopy_chain(const UnitaryMap& path, int n) {
  const int t = path.frame()->size() - 1;
  if (t < 0 || path.frame()->var(t).kind != VarKind::Interval || !path.frame()->var(t).coordinate) {
    throw std::invalid_argument("homotopy path needs an interval coordinate as its last variable");
  }
  FramePtr base = prefix_frame(path.frame(), t);
  Chain out(base);
  if (n <= 0) return out;
  ScriptAB ab = script_A_B(path);
  auto slice = [&](const MatForm& m) { return entrywise(m, [&](const Form& e) { return kill_differential(e, t); }); };
  auto iota = [&](const MatForm& m) { return entrywise(m, [&](const Form& e) { return contract_var_graded(e, t); }); };
  MatForm A = slice(ab.A);
  MatForm B = slice(ab.B);
  MatForm iA = slice(iota(ab.A));
  MatForm iB = slice(iota(ab.B));
  MatForm one = MatForm::identity(ab.frame, path.size());

  auto add = [&](const std::vector<MatForm>& tail, const Scalar& sign) {
    std::vector<MatForm> slots{one};
    slots.insert(slots.end(), tail.begin(), tail.end());
    Chain c = generalized_trace_integrated(slots, 2);
    out += c * sign;
  };
  for (int k = 1; k <= n; ++k) {
    // - A^l (x) iA (x) A^{k-l-2} (x) B (x) A^{n-k}
    for (int l = 0; l <= k - 2; ++l) {
      std::vector<MatForm> tail;
      for (int q = 0; q < l; ++q) tail.push_back(A);
      tail.push_back(iA);
      for (int q = 0; q < k - l - 2; ++q) tail.push_back(A);
      tail.push_back(B);
      for (int q = 0; q < n - k; ++q) tail.push_back(A);
      add(tail, Scalar(-1));
    }
    // + A^{k-1} (x) B (x) A^l (x) iA (x) A^{n-k-l-1}
    for (int l = 0; l <= n - k - 1; ++l) {
      std::vector<MatForm> tail;
      for (int q = 0; q < k - 1; ++q) tail.push_back(A);
      tail.push_back(B);
      for (int q = 0; q < l; ++q) tail.push_back(A);
      tail.push_back(iA);
      for (int q = 0; q < n - k - l - 1; ++q) tail.push_back(A);
      add(tail, Scalar(1));
    }
    // - A^{k-1} (x) iB (x) A^{n-k}
    std::vector<MatForm> tail;
    for (int q = 0; q < k - 1; ++q) tail.push_back(A);
    tail.push_back(iB);
    for (int q = 0; q < n - k; ++q) tail.push_back(A);
    add(tail, Scalar(-1));
  }
  return out;
}

Chain homotopy_residual(const UnitaryMap& path, int n) {
  const int t = path.frame()->size() - 1;
  Chain bw = hochschild_b(build_homotopy_chain(path, n)).length_component(n) +
             hochschild_b(build_homotopy_chain(path, n + 1)).length_component(n);
  UnitaryMap g0 = restrict_at(path, t, Rational(0));
  UnitaryMap g1 = restrict_at(path, t, Rational(1));
  return bw - (chern_minus(g1, n) - chern_minus(g0, n));
}

Chain fiber_integrate_chain(const Chain& w, int v) {
  const FramePtr& frame = w.frame();
  const Var& var = frame->var(v);
  if (var.kind != VarKind::Interval || !var.coordinate) {
    throw std::invalid_argument("fiber integration needs an interval coordinate, got " + var.name);
  }
  const int nv = frame->size();
  std::vector<Var> vars = frame->vars();
  vars.erase(vars.begin() + v);
  FramePtr target = make_frame(std::move(vars));
  std::vector<int> index_map(nv);
  for (int i = 0; i < nv; ++i) index_map[i] = i < v ? i : (i == v ? -1 : i - 1);
  static const FramePtr line = make_frame({Var{"u", VarKind::Interval, false}});

  Chain out(target);
  for (const auto& [key, c] : w.terms()) {
    const int n = tensor_length(key);
    int carrier = -1;
    bool killed = false;
    for (int i = 0; i <= n; ++i) {
      if (slot_mask(key, i, nv) & dx_bit(v)) {
        if (carrier >= 0) killed = true;
        carrier = i;
      }
    }
    if (carrier < 0 || killed) continue;
    std::vector<int> j = slot_gradings(key, nv);
    long r_prev = 0;
    for (int i = 0; i < carrier; ++i) r_prev += j[i] - (i == 0 ? 0 : 1);
    Scalar coef = c;
    if (carrier > 0 && (r_prev % 2 != 0)) coef = -coef;
    std::int32_t freq = 0;
    std::int32_t pw = 0;
    std::vector<Form> slots;
    for (int i = 0; i <= n; ++i) {
      Mask mask = slot_mask(key, i, nv);
      Monomial mono = slot_monomial(key, i, nv);
      freq += mono[2 * v];
      pw += mono[2 * v + 1];
      mono[2 * v] = 0;
      mono[2 * v + 1] = 0;
      Form f = Form::basis(frame, mask, mono, Scalar(1));
      if (i == carrier) f = contract_var(f, v);
      slots.push_back(reframe(f, target, index_map));
    }
    TrigPoly mono = TrigPoly::term(line, Monomial{freq, pw}, Scalar(1));
    coef *= integrate_unit(mono, 0).constant_term();
    out.add_tensor(slots, coef);
  }
  return out;
}

ConnectionForm scaled_connection(const UnitaryMap& g) {
  FramePtr frame = append_vars(g.frame(), {Var{"s", VarKind::Interval, true}});
  MatForm omega = extend(maurer_cartan(g), frame);
  return TrigPoly::monomial_power(frame, frame->size() - 1, 1) * omega;
}

bool periodicity_check(const UnitaryMap& g, int n) {
  ConnectionForm C = scaled_connection(g);
  Chain lifted = fiber_integrate_chain(chern_plus(C, n), C.frame()->size() - 1);
  return lifted == chern_minus(g, n);
}

}  // namespace chenchern
