#ifndef WM_GW_HPP
#define WM_GW_HPP

// Closed-form equivariant genus-zero structure constants of the ADE surface
// resolution: the pairing, one-torus triple correlators (scalar torus on
// D/E), the full two-torus A-type correlators, and the D-type tau-coordinate
// quantum part. Everything depends on the point only through the exponential
// root values E_beta = e^{<beta,h>}.

#include <vector>

#include "wm/invariants.hpp"
#include "wm/prepotential.hpp"
#include "wm/rootsys.hpp"

namespace wm {

// E_beta per positive root, indexed like rs.positive_roots.
struct TorusPoint {
  std::vector<Rational> E;
};

TorusPoint torus_point_from_q(const RootSystem& rs, const std::vector<Rational>& q);
// D-type: kappa_j = e^{<eps_j,h>}.
TorusPoint torus_point_from_kappa_d(const RootSystem& rs, const std::vector<Rational>& kappa);
// A-type: kappa_j = prod_{i>=j} e^{-p_i}; E over roots alpha_i+..+alpha_j
// is kappa_{j+1}/kappa_i with kappa_{l+1} = 1.
TorusPoint torus_point_from_kappa_a(const RootSystem& rs, const std::vector<Rational>& kappa);

struct GwContext {
  MarkedPair mp;
  bool two_torus = false;
  Rational nu;         // one-torus weight
  Rational nu1, nu2;   // two-torus weights (A only); for the one-torus
                       // restriction nu1 = (l+1-kbar) nu, nu2 = kbar nu

  static GwContext one_torus(const MarkedPair& mp, const Rational& nu = Rational(1));
  static GwContext two_torus_a(const MarkedPair& mp, const Rational& nu1, const Rational& nu2);
};

Rational gw_eta(const GwContext& ctx, int i, int j);  // 0-based, l = extra slot

Rational gw_triple(const GwContext& ctx, int i, int j, int k, const TorusPoint& tp);
Rational gw_triple_a2(const GwContext& ctx, int i, int j, int k, const TorusPoint& tp);

// Full (l+1)^3 cube of third derivatives of F_GW at the point (nu = 1 chart).
Tensor3 gw_third_tensor(const GwContext& ctx, const TorusPoint& tp);

// D-type quantum part in tau coordinates: (1/2nu) d^3 F^+ / dtau_i,j,k,
// with T_sigma = prod_m (e^{tau_m})^{-Theta_{sigma m}}.
Rational dtype_tau_triple(int l, int i, int j, int k, const std::vector<Rational>& etau);

}  // namespace wm

#endif
