#include "chenchern/chain.hpp"

#include <sstream>
#include <stdexcept>

namespace chenchern {

namespace {

int stride(int nvars) { return 1 + 2 * nvars; }

void expand(const std::vector<Form>& slots, std::size_t i, TensorKey& key, const Scalar& coef,
            std::map<TensorKey, Scalar>& out) {
  if (i == slots.size()) {
    auto [it, inserted] = out.try_emplace(key, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second.is_zero()) out.erase(it);
    }
    return;
  }
  const std::size_t base = key.size();
  for (const auto& [mask, p] : slots[i].components()) {
    for (const auto& [mono, c] : p.terms()) {
      if (i >= 1 && mask == 0 && is_unit_monomial(mono)) continue;
      key.push_back(static_cast<std::int32_t>(mask));
      key.insert(key.end(), mono.begin(), mono.end());
      expand(slots, i + 1, key, coef * c, out);
      key.resize(base);
    }
  }
}

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Chain Chain::tensor(const std::vector<Form>& slots, const Scalar& c) {
  Chain w;
  w.add_tensor(slots, c);
  return w;
}

void Chain::adopt_frame(const FramePtr& frame) {
  if (same_frame(frame_, frame)) return;
  if (terms_.empty()) {
    frame_ = frame;
    return;
  }
  throw std::invalid_argument("chains over different frames");
}

void Chain::add_tensor(const std::vector<Form>& slots, const Scalar& c) {
  if (slots.empty()) throw std::invalid_argument("elementary tensor needs at least one slot");
  if (c.is_zero()) return;
  for (const auto& s : slots) {
    if (s.is_zero()) return;
  }
  adopt_frame(slots[0].frame());
  for (const auto& s : slots) {
    if (!same_frame(s.frame(), frame_)) throw std::invalid_argument("tensor slots over different frames");
  }
  TensorKey key;
  key.reserve(1 + slots.size() * stride(frame_->size()));
  key.push_back(static_cast<std::int32_t>(slots.size()) - 1);
  expand(slots, 0, key, c, terms_);
}

void Chain::add_basis(const TensorKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  const int nv = frame_->size();
  for (int i = 1; i <= tensor_length(key); ++i) {
    if (slot_mask(key, i, nv) == 0 && is_unit_monomial(slot_monomial(key, i, nv))) return;
  }
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Chain Chain::length_component(int n) const {
  Chain out(frame_);
  for (const auto& [key, c] : terms_) {
    if (key[0] == n) out.terms_.emplace(key, c);
  }
  return out;
}

int Chain::max_length() const {
  int best = -1;
  for (const auto& [key, c] : terms_) best = std::max(best, key[0]);
  return best;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.terms_.empty()) return *this;
  adopt_frame(other.frame_);
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (other.terms_.empty()) return *this;
  adopt_frame(other.frame_);
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Chain& Chain::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, x] : terms_) x *= c;
  return *this;
}

bool operator==(const Chain& a, const Chain& b) {
  if (a.terms_ != b.terms_) return false;
  return a.terms_.empty() || same_frame(a.frame_, b.frame_);
}

int tensor_length(const TensorKey& key) { return key.at(0); }

Mask slot_mask(const TensorKey& key, int slot, int nvars) {
  return static_cast<Mask>(key[1 + slot * stride(nvars)]);
}

Monomial slot_monomial(const TensorKey& key, int slot, int nvars) {
  auto begin = key.begin() + 2 + slot * stride(nvars);
  return Monomial(begin, begin + 2 * nvars);
}

Form slot_form(const FramePtr& frame, const TensorKey& key, int slot) {
  const int nv = frame->size();
  return Form::basis(frame, slot_mask(key, slot, nv), slot_monomial(key, slot, nv), Scalar(1));
}

std::vector<int> slot_gradings(const TensorKey& key, int nvars) {
  std::vector<int> j(tensor_length(key) + 1);
  for (std::size_t i = 0; i < j.size(); ++i) j[i] = grading(slot_mask(key, static_cast<int>(i), nvars));
  return j;
}

std::vector<Form> slot_forms(const FramePtr& frame, const TensorKey& key) {
  std::vector<Form> out;
  for (int i = 0; i <= tensor_length(key); ++i) out.push_back(slot_form(frame, key, i));
  return out;
}

int total_degree(const TensorKey& key, int nvars) {
  int sum = tensor_length(key);
  for (int j : slot_gradings(key, nvars)) sum += j;
  return sum;
}

Chain gamma(const Chain& w) {
  Chain out(w.frame());
  const int nv = w.frame()->size();
  for (const auto& [key, c] : w.terms()) out.add_basis(key, parity_sign(total_degree(key, nv)) < 0 ? -c : c);
  return out;
}

Chain hochschild_b(const Chain& w) {
  const FramePtr& frame = w.frame();
  const int nv = frame->size();
  Chain out(frame);
  for (const auto& [key, c] : w.terms()) {
    const int n = tensor_length(key);
    std::vector<Form> slots = slot_forms(frame, key);
    std::vector<int> j = slot_gradings(key, nv);
    std::vector<long> r(n + 1);
    long acc = 0;
    for (int l = 0; l <= n; ++l) {
      acc += j[l];
      r[l] = acc - l;
    }
    // differential terms
    for (int i = 0; i <= n; ++i) {
      Form dw = d_T(slots[i]);
      if (dw.is_zero()) continue;
      std::vector<Form> t = slots;
      t[i] = dw;
      Scalar sign = (i == 0) ? Scalar(1) : Scalar(-parity_sign(r[i - 1]));
      out.add_tensor(t, c * sign);
    }
    // product terms
    for (int i = 0; i < n; ++i) {
      Form prod = wedge(slots[i], slots[i + 1]);
      if (prod.is_zero()) continue;
      std::vector<Form> t(slots.begin(), slots.begin() + i);
      t.push_back(prod);
      t.insert(t.end(), slots.begin() + i + 2, slots.end());
      out.add_tensor(t, c * Scalar(-parity_sign(r[i])));
    }
    // wrap-around term
    if (n >= 1) {
      Form prod = wedge(slots[n], slots[0]);
      if (!prod.is_zero()) {
        std::vector<Form> t{prod};
        t.insert(t.end(), slots.begin() + 1, slots.begin() + n);
        out.add_tensor(t, c * Scalar(parity_sign(static_cast<long>(j[n] - 1) * r[n - 1])));
      }
    }
  }
  return out;
}

Chain connes_B(const Chain& w, BoundaryConvention convention) {
  const FramePtr& frame = w.frame();
  const int nv = frame->size();
  const int stride_v = stride(nv);
  Chain out(frame);
  TensorKey one_slot(stride_v, 0);
  for (const auto& [key, c] : w.terms()) {
    const int n = tensor_length(key);
    std::vector<int> j = slot_gradings(key, nv);
    // rm[i] = r_{i-1}
    std::vector<long> rm(n + 2);
    rm[0] = convention == BoundaryConvention::MinusOne ? -1 : 0;
    long acc = 0;
    for (int l = 0; l <= n; ++l) {
      acc += j[l];
      rm[l + 1] = acc - l;
    }
    const long rn = rm[n + 1];
    for (int i = 0; i <= n; ++i) {
      // slot 0 ends up in position >= 1; a unit there kills the term
      if (i > 0 && slot_mask(key, 0, nv) == 0 && is_unit_monomial(slot_monomial(key, 0, nv))) continue;
      TensorKey rotated;
      rotated.reserve(key.size() + stride_v);
      rotated.push_back(n + 1);
      rotated.insert(rotated.end(), one_slot.begin(), one_slot.end());
      for (int k = 0; k <= n; ++k) {
        int src = (i + k) % (n + 1);
        auto begin = key.begin() + 1 + src * stride_v;
        rotated.insert(rotated.end(), begin, begin + stride_v);
      }
      out.add_basis(rotated, parity_sign((rm[i] + 1) * (rn - rm[i])) < 0 ? -c : c);
    }
  }
  return out;
}

Chain make_degenerate(DegenerateKind kind, const std::vector<Form>& factors, int r) {
  const int n = static_cast<int>(factors.size()) - 1;
  if (r < 1 || r > n) throw std::invalid_argument("degenerate slot index out of range");
  const Form& f = factors[r];
  for (const auto& [mask, p] : f.components()) {
    if (mask != 0) throw std::invalid_argument("degenerate generator needs a plain function in slot r");
  }
  if (kind == DegenerateKind::Slot0Form) return Chain::tensor(factors);

  Chain out(factors[0].frame());
  // <... w_{r-1} f (x) w_{r+1} ...>
  {
    std::vector<Form> t(factors.begin(), factors.begin() + r);
    t.back() = wedge(t.back(), f);
    t.insert(t.end(), factors.begin() + r + 1, factors.end());
    out.add_tensor(t);
  }
  // <... (x) d_T f (x) ...>
  {
    std::vector<Form> t = factors;
    t[r] = d_T(f);
    out.add_tensor(t);
  }
  // -<... (x) f w_{r+1} ...>
  if (r < n) {
    std::vector<Form> t(factors.begin(), factors.begin() + r);
    t.push_back(wedge(f, factors[r + 1]));
    t.insert(t.end(), factors.begin() + r + 2, factors.end());
    out.add_tensor(t, Scalar(-1));
  } else {
    std::vector<Form> t{wedge(f, factors[0])};
    t.insert(t.end(), factors.begin() + 1, factors.begin() + n);
    out.add_tensor(t, Scalar(-1));
  }
  return out;
}

bool chain_equal(const Chain& a, const Chain& b) { return a == b; }

std::string to_string(const Chain& w) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : w.terms()) {
    if (!first) os << "\n + ";
    first = false;
    os << "[" << c << "] <";
    for (int i = 0; i <= tensor_length(key); ++i) {
      if (i) os << " (x) ";
      os << to_string(slot_form(w.frame(), key, i));
    }
    os << ">";
  }
  return os.str();
}

}  // namespace chenchern
