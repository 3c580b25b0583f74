#ifndef WM_LG_HPP
#define WM_LG_HPP

// Relativistic-Toda Landau-Ginzburg superpotentials (types A and D) and the
// residue-sum computation of the dual metric and product. Each direction's
// derivative of log(lambda) is a univariate rational function; integrands
// are assembled from these (so lambda powers cancel before any residue is
// taken) and summed over the divisor support of lambda plus infinity, with
// an overall minus sign from reversing the contour.

#include <vector>

#include "wm/invariants.hpp"
#include "wm/rootsys.hpp"
#include "wm/unirational.hpp"

namespace wm {

struct Superpotential {
  Family family;
  int l = 0;
  int kbar = 0;  // A only, 0-based
  Rational nu;
  std::vector<Rational> kappa;
  Rational overall;  // rational prefactor bookkeeping; cancels in all results
  UniRat lam;        // divisor-normalized superpotential (defined up to scale)
  UniRat dlog;       // d/dmu log(lambda)
  // d(log lambda)/d(log kappa_m) for m = 1..l, then the x_{l+1} direction
  // (a constant: 1/(2 nu) for D, 1/((l+1) nu) for A).
  std::vector<UniRat> logderivs;
  // the same data combined per x-direction (G columns for D, the
  // kappa-to-x dictionary for A)
  std::vector<UniRat> xdirs;
  std::vector<Rational> support;  // finite support of div(lambda)
  MatI cartan;
};

Superpotential build_superpotential(const MarkedPair& mp, const std::vector<Rational>& kappa,
                                    const Rational& nu = Rational(1));

// c^flat(d/dx_i, d/dx_j, d/dx_k); indices 0-based, l = the x_{l+1} slot.
Rational lg_dual_triple(const Superpotential& sp, int i, int j, int k);
Rational lg_dual_eta(const Superpotential& sp, int i, int j);

// Core in log-kappa directions: R_ijk = (1/2nu) c^flat(dlog k_i, dlog k_j,
// dlog k_k), computed by the batch residue sum.
Rational lg_dual_core_R(const Superpotential& sp, int i, int j, int k);

struct PoleTag {
  enum Kind { Zero, Infinity, PlusOne, MinusOne, Kappa, KappaInv } kind;
  int m = 0;  // for Kappa/KappaInv
};

// Single-pole residue contribution R^{[q]}_{ijk} of the D-type integrand.
Rational per_pole_contribution(const Superpotential& sp, int i, int j, int k, const PoleTag& tag);
// All contributions of one integrand (assembled once): 0, infinity, +1, -1,
// then kappa_m and 1/kappa_m alternating for m = 1..l.
std::vector<Rational> per_pole_contributions(const Superpotential& sp, int i, int j, int k);

// Deterministic generic kappa points for the A/D residue pipelines.
bool kappa_generic(Family family, const std::vector<Rational>& kappa);
std::vector<std::vector<Rational>> sample_kappa(Family family, int l, int count,
                                                std::uint64_t seed);

// Closed forms for the combined residues at kappa_m and 1/kappa_m, and the
// constants at 0, infinity, +1, -1.
Rational lemma_pair_closed_form(const Superpotential& sp, int i, int j, int k, int m);
Rational lemma_zero_inf_closed_form(const Superpotential& sp, int i, int j, int k);

// Validates one integrand against the global residue theorem and the pole
// order classification; throws on violation, returns the triple value.
Rational lg_dual_triple_checked(const Superpotential& sp, int i, int j, int k);

struct SpectralPoly {
  Poly Q;               // characteristic polynomial in mu at the point
  std::vector<Poly> P;  // P[r] = mu-coefficients of the lambda^r term
};

// Q = prod_{w in orbit}(e^{<w,x>} - mu) with coefficients evaluated at the
// point; P from shifting the marked invariant by -lambda e^{-x_{l+1}/2}.
SpectralPoly spectral_poly(const InvariantContext& ctx, const WeightVec& rep_weight,
                           const EvalPoint& pt);

// sum over the 27 weights of <w,alpha_i><w,alpha_j> (E6 pairing check).
MatI e6_weight_pairing_sum(const RootSystem& rs);

}  // namespace wm

#endif
