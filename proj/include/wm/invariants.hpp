#ifndef WM_INVARIANTS_HPP
#define WM_INVARIANTS_HPP

// Weyl-invariant Fourier polynomials, fundamental characters, the Weyl
// denominator, and the extended-invariant coordinates
//   y_a = e^{d_a x_{l+1}} Y_a,   y_{l+1} = x_{l+1},
// evaluated exactly at rational points. A point carries q_a = e^{x_a} and
// u with e^{x_{l+1}} = u^N, N the root order of the marked pair, so every
// fractional power of e^{x_{l+1}} the pipeline needs is an integer power
// of u.

#include <optional>
#include <vector>

#include "wm/laurent.hpp"
#include "wm/matrix.hpp"
#include "wm/rootsys.hpp"

namespace wm {

struct EvalPoint {
  std::vector<Rational> q;  // size l, all nonzero
  Rational u;               // nonzero
  int root_order = 1;       // N
};

// Orbit averages Y_i = |W(omega_i)|^{-1} sum_{w in W(omega_i)} e^{<w,h>}.
std::vector<Laurent> basic_invariants(const MarkedPair& mp);

// Fundamental characters W_i as weight-multiset generating functions.
// Implemented for families A, D and E6; throws for E7/E8.
std::vector<Laurent> characters(const MarkedPair& mp);

// delta = e^{<w,h>} prod_{beta>0} (1 - e^{-<beta,h>}), expanded.
Laurent weyl_denominator(const RootSystem& rs);
// Same value computed in product form (cheap at a point).
Rational eval_weyl_denominator(const RootSystem& rs, const std::vector<Rational>& q);

// e^{<w,h>} at the point, w in fundamental-weight coordinates.
Rational eval_monomial(const std::vector<Rational>& q, const WeightVec& w);

// Caches the symbolic data needed for repeated point evaluation.
class InvariantContext {
 public:
  explicit InvariantContext(MarkedPair mp, bool with_characters = false);

  const MarkedPair& mp() const { return mp_; }
  const std::vector<Laurent>& Y() const { return Y_; }
  const std::vector<Laurent>& W() const;  // builds characters on first use

 private:
  MarkedPair mp_;
  std::vector<Laurent> Y_;
  mutable std::optional<std::vector<Laurent>> W_;
};

struct ExtendedJacobian {
  std::vector<Rational> y;  // y_1..y_l, then e^{x_{l+1}} = u^N for bookkeeping
  Mat J;                    // (l+1) x (l+1), J(a,i) = dy_a/dx_i
};

ExtendedJacobian extended_jacobian(const InvariantContext& ctx, const EvalPoint& pt);

// Flat coordinates as polynomials in the character (or basic-invariant)
// values and powers of u; t_{l+1} = x_{l+1}/(2*dhat) is implicit.
struct FlatTerm {
  Rational coeff;
  std::vector<int> wexp;  // exponents over the l basis slots
  int upow = 0;
};

struct FlatMap {
  bool uses_characters = true;  // tokens W1..Wl vs Y1..Yl
  std::vector<std::vector<FlatTerm>> coords;  // size l
};

struct FlatChart {
  std::vector<Rational> t;  // t_1..t_l
  Rational s;               // e^{t_{l+1}}
  Mat J;                    // (l+1) x (l+1), J(A,i) = dt_A/dx_i
};

FlatChart flat_chart(const InvariantContext& ctx, const FlatMap& fm, const EvalPoint& pt);

// The embedded E6 flat map evaluated at the point (root order must be
// divisible by 12).
FlatChart e6_flat_map(const InvariantContext& ctx, const EvalPoint& pt);

}  // namespace wm

#endif
