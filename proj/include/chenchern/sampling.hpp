#ifndef CHENCHERN_SAMPLING_HPP
#define CHENCHERN_SAMPLING_HPP

/// Seeded generators of random scalars, forms and chains shared by the
/// property tests and the verification suites.

#include <random>

#include "chenchern/chain.hpp"

namespace chenchern::sampling {

inline Rational random_rational(std::mt19937_64& rng, int max_num = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return frac(num(rng), den(rng));
}

inline Scalar random_scalar(std::mt19937_64& rng, int max_terms = 3) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> power(-2, 2);
  Scalar s;
  for (int k = count(rng); k > 0; --k) s.insert_term(power(rng), {random_rational(rng), random_rational(rng)});
  return s;
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng) {
  Scalar s;
  while (s.is_zero()) s = random_scalar(rng, 2);
  return s;
}

/// Random trig polynomial: integer frequencies for periodic variables,
/// quarter frequencies and small powers for interval ones.
inline TrigPoly random_poly(std::mt19937_64& rng, const FramePtr& frame, int max_terms = 3, int max_freq = 2) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<int> freq(-max_freq, max_freq);
  std::uniform_int_distribution<int> quarter(-4, 4);
  std::uniform_int_distribution<int> pw(0, 2);
  TrigPoly p(frame);
  for (int k = count(rng); k > 0; --k) {
    Monomial m = unit_monomial(frame->size());
    for (int v = 0; v < frame->size(); ++v) {
      if (frame->var(v).kind == VarKind::Periodic) {
        m[2 * v] = 4 * freq(rng);
      } else {
        m[2 * v] = quarter(rng);
        m[2 * v + 1] = pw(rng);
      }
    }
    Scalar c(random_rational(rng), random_rational(rng));
    if (c.is_zero()) c = Scalar(1);
    p.add_term(m, c);
  }
  return p;
}

/// Random homogeneous alpha + theta beta of grading j over the coordinates.
inline Form random_form(std::mt19937_64& rng, const FramePtr& frame, int j, int max_terms = 2, int max_freq = 2) {
  std::vector<int> coords;
  for (int v = 0; v < frame->size(); ++v) {
    if (frame->var(v).coordinate) coords.push_back(v);
  }
  const int n = static_cast<int>(coords.size());
  std::vector<Mask> masks;
  for (Mask sub = 0; sub < (Mask(1) << n); ++sub) {
    Mask m = 0;
    for (int k = 0; k < n; ++k) {
      if (sub & (Mask(1) << k)) m |= dx_bit(coords[k]);
    }
    if (grading(m) == j) masks.push_back(m);
    if (grading(m | kTheta) == j) masks.push_back(m | kTheta);
  }
  Form w(frame);
  if (masks.empty()) return w;
  std::uniform_int_distribution<std::size_t> pick(0, masks.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  for (int k = count(rng); k > 0; --k) w.add(masks[pick(rng)], random_poly(rng, frame, 2, max_freq));
  return w;
}

/// Sum of a few random elementary tensors with tensor length <= max_len and
/// slot gradings in [0, max_deg].
inline Chain random_chain(std::mt19937_64& rng, const FramePtr& frame, int max_len = 4, int max_deg = 2,
                          int tensors = 2) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> deg(0, max_deg);
  Chain w(frame);
  for (int k = 0; k < tensors; ++k) {
    std::vector<Form> slots;
    int n = len(rng);
    for (int i = 0; i <= n; ++i) slots.push_back(random_form(rng, frame, deg(rng), 1, 1));
    w.add_tensor(slots, Scalar(random_rational(rng), random_rational(rng)));
  }
  return w;
}

/// A random degenerate generator over a torus frame: Slot0Form or Leibniz
/// with a random function in slot r and random homogeneous other slots.
inline Chain random_degenerate(std::mt19937_64& rng, const FramePtr& frame, int max_len = 3, int max_deg = 2) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coin(0, 1);
  const int n = len(rng);
  std::uniform_int_distribution<int> slot(1, n);
  const int r = slot(rng);
  const DegenerateKind kind = coin(rng) == 0 ? DegenerateKind::Slot0Form : DegenerateKind::Leibniz;
  std::vector<Form> factors;
  for (int i = 0; i <= n; ++i) {
    if (i == r) {
      factors.push_back(Form::function(random_poly(rng, frame, 2, 2)));
    } else {
      factors.push_back(random_form(rng, frame, deg(rng), 2, 1));
    }
  }
  return make_degenerate(kind, factors, r);
}

}  // namespace chenchern::sampling

#endif  // CHENCHERN_SAMPLING_HPP
