#include "chenchern/unitary.hpp"

#include <stdexcept>

namespace chenchern {

namespace {

MatForm generator_matrix(const FramePtr& frame, int l, const UnitaryGenerator& gen, bool inverse) {
  MatForm m(frame, l, l);
  if (const auto* diag = std::get_if<DiagExp>(&gen)) {
    if (static_cast<int>(diag->freq.size()) != l) throw std::invalid_argument("DiagExp needs one frequency vector per entry");
    for (int j = 0; j < l; ++j) {
      const auto& q = diag->freq[j];
      if (static_cast<int>(q.size()) != frame->size()) throw std::invalid_argument("DiagExp frequency vector size mismatch");
      TrigPoly e = TrigPoly::constant(frame, Scalar(1));
      for (int v = 0; v < frame->size(); ++v) {
        if (sgn(q[v]) != 0) e = e * TrigPoly::exp_i(frame, v, inverse ? Rational(-q[v]) : q[v]);
      }
      m(j, j) = Form::function(e);
    }
    return m;
  }
  const auto& u = std::get<ConstUnitary>(gen).entries;
  if (static_cast<int>(u.size()) != l) throw std::invalid_argument("ConstUnitary size mismatch");
  for (int i = 0; i < l; ++i) {
    if (static_cast<int>(u[i].size()) != l) throw std::invalid_argument("ConstUnitary size mismatch");
    for (int j = 0; j < l; ++j) m(i, j) = Form::constant(frame, inverse ? conj(u[j][i]) : u[i][j]);
  }
  return m;
}

void check_const_unitary(const ConstUnitary& u, int l) {
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      Scalar sum;
      for (int k = 0; k < l; ++k) sum += u.entries[i][k] * conj(u.entries[j][k]);
      if (sum != Scalar(i == j ? 1 : 0)) throw std::invalid_argument("ConstUnitary generator is not exactly unitary");
    }
  }
}

UnitaryGenerator pad(const UnitaryGenerator& gen, int before, int after, int nvars) {
  if (const auto* diag = std::get_if<DiagExp>(&gen)) {
    DiagExp out;
    std::vector<Rational> zero(nvars, Rational(0));
    out.freq.assign(before, zero);
    out.freq.insert(out.freq.end(), diag->freq.begin(), diag->freq.end());
    out.freq.insert(out.freq.end(), after, zero);
    return out;
  }
  const auto& u = std::get<ConstUnitary>(gen).entries;
  int inner = static_cast<int>(u.size());
  int l = before + inner + after;
  ConstUnitary out{std::vector<std::vector<Scalar>>(l, std::vector<Scalar>(l))};
  for (int i = 0; i < l; ++i) {
    bool in_block = i >= before && i < before + inner;
    if (!in_block) out.entries[i][i] = Scalar(1);
  }
  for (int i = 0; i < inner; ++i) {
    for (int j = 0; j < inner; ++j) out.entries[before + i][before + j] = u[i][j];
  }
  return out;
}

}  // namespace

UnitaryMap::UnitaryMap(FramePtr frame, int l, std::vector<UnitaryGenerator> word)
    : frame_(std::move(frame)), l_(l), word_(std::move(word)) {
  if (l <= 0) throw std::invalid_argument("unitary size must be positive");
  g_ = MatForm::identity(frame_, l);
  g_inv_ = MatForm::identity(frame_, l);
  for (const auto& gen : word_) {
    if (const auto* u = std::get_if<ConstUnitary>(&gen)) check_const_unitary(*u, l);
    g_ = g_ * generator_matrix(frame_, l, gen, false);
    g_inv_ = generator_matrix(frame_, l, gen, true) * g_inv_;
  }
  if (!(g_ * g_inv_ == MatForm::identity(frame_, l))) {
    throw std::logic_error("unitary word does not invert exactly");
  }
}

UnitaryMap UnitaryMap::identity(FramePtr frame, int l) { return UnitaryMap(std::move(frame), l, {}); }

UnitaryMap direct_sum(const UnitaryMap& g, const UnitaryMap& h) {
  if (!same_frame(g.frame(), h.frame())) throw std::invalid_argument("direct sum over different frames");
  const int nv = g.frame()->size();
  std::vector<UnitaryGenerator> word;
  for (const auto& gen : g.word()) word.push_back(pad(gen, 0, h.size(), nv));
  for (const auto& gen : h.word()) word.push_back(pad(gen, g.size(), 0, nv));
  return UnitaryMap(g.frame(), g.size() + h.size(), std::move(word));
}

UnitaryMap restrict_at(const UnitaryMap& g, int v, const Rational& value) {
  std::vector<Var> vars = g.frame()->vars();
  vars.erase(vars.begin() + v);
  FramePtr target = make_frame(std::move(vars));
  const int l = g.size();
  std::vector<UnitaryGenerator> word;
  for (const auto& gen : g.word()) {
    if (const auto* diag = std::get_if<DiagExp>(&gen)) {
      DiagExp rest;
      ConstUnitary phase{std::vector<std::vector<Scalar>>(l, std::vector<Scalar>(l))};
      bool any_phase = false;
      for (int j = 0; j < l; ++j) {
        std::vector<Rational> q = diag->freq[j];
        phase.entries[j][j] = Scalar::unit_phase(q[v] * value);
        if (!phase.entries[j][j].is_one()) any_phase = true;
        q.erase(q.begin() + v);
        rest.freq.push_back(std::move(q));
      }
      word.push_back(std::move(rest));
      if (any_phase) word.push_back(std::move(phase));
    } else {
      word.push_back(gen);
    }
  }
  return UnitaryMap(target, l, std::move(word));
}

MatForm maurer_cartan(const UnitaryMap& g) {
  return g.inverse() * entrywise(g.matrix(), [](const Form& f) { return exterior_d(f); });
}

}  // namespace chenchern
