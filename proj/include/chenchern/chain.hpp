#ifndef CHENCHERN_CHAIN_HPP
#define CHENCHERN_CHAIN_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "chenchern/form.hpp"

namespace chenchern {

/// Flat key of a basis elementary tensor: [n, then per slot: mask followed by
/// the slot monomial]. Every slot is a single basis form with coefficient 1,
/// so a chain is a finitely supported function on keys.
using TensorKey = std::vector<std::int32_t>;

/// Finite sum of elementary tensors <w0 (x) w1 (x) ... (x) wn> over one
/// frame. Multilinearity is applied on insertion; tensors with the unit 1 in
/// a slot >= 1 are dropped (those slots live in Omega / C 1).
class Chain {
 public:
  using Terms = std::map<TensorKey, Scalar>;

  Chain() : frame_(std::make_shared<Frame>()) {}
  explicit Chain(FramePtr frame) : frame_(std::move(frame)) {}

  static Chain tensor(const std::vector<Form>& slots, const Scalar& c = Scalar(1));

  const FramePtr& frame() const { return frame_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_tensor(const std::vector<Form>& slots, const Scalar& c = Scalar(1));
  void add_basis(const TensorKey& key, const Scalar& c);

  /// The part with tensor length n (n+1 slots).
  Chain length_component(int n) const;
  /// -1 for the zero chain.
  int max_length() const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(const Scalar& c);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator-(Chain a) { return a *= Scalar(-1); }
  friend Chain operator*(Chain a, const Scalar& c) { return a *= c; }

  friend bool operator==(const Chain& a, const Chain& b);
  friend bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }

 private:
  void adopt_frame(const FramePtr& frame);

  FramePtr frame_;
  Terms terms_;
};

int tensor_length(const TensorKey& key);
Mask slot_mask(const TensorKey& key, int slot, int nvars);
Monomial slot_monomial(const TensorKey& key, int slot, int nvars);
Form slot_form(const FramePtr& frame, const TensorKey& key, int slot);
std::vector<int> slot_gradings(const TensorKey& key, int nvars);
std::vector<Form> slot_forms(const FramePtr& frame, const TensorKey& key);

/// Total grading sum_i j_i + n of a basis tensor.
int total_degree(const TensorKey& key, int nvars);

Chain gamma(const Chain& w);
Chain hochschild_b(const Chain& w);

/// Value taken for the undefined partial sum r_{-1} in the sign of B.
enum class BoundaryConvention { MinusOne, Zero };
inline constexpr BoundaryConvention kDefaultBoundary = BoundaryConvention::MinusOne;
Chain connes_B(const Chain& w, BoundaryConvention convention = kDefaultBoundary);

enum class DegenerateKind { Slot0Form, Leibniz };
/// Generators of the degenerate subspace. factors holds all n+1 slots;
/// factors[r] is the function f (a plain 0-form), 1 <= r <= n.
///  Slot0Form: <w0 (x) ... (x) f (x) ... (x) wn>.
///  Leibniz:   <... w_{r-1} f (x) w_{r+1} ...> + <... (x) d_T f (x) ...>
///             - <... (x) f w_{r+1} ...>; for r = n the last term wraps to
///             -<f w0 (x) w1 ... (x) w_{n-1}>.
Chain make_degenerate(DegenerateKind kind, const std::vector<Form>& factors, int r);

bool chain_equal(const Chain& a, const Chain& b);

std::string to_string(const Chain& w);

}  // namespace chenchern

#endif  // CHENCHERN_CHAIN_HPP
