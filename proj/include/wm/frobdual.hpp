#ifndef WM_FROBDUAL_HPP
#define WM_FROBDUAL_HPP

// The initial-conditions duality pipeline: admissible exponents, certified
// point sets, the two (2,1) comparison tensors, and the verification report.
// All comparisons are exact; a failed certificate resamples, never passes.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wm/gw.hpp"
#include "wm/invariants.hpp"
#include "wm/prepotential.hpp"

namespace wm {

struct AdmissibleSet {
  Rational D;                          // max(d_eta + d_delta - d_eps), d_{l+1} = 0
  std::vector<std::vector<int>> s_adm; // deterministic enumeration order
};

AdmissibleSet admissible_exponents(const MarkedPair& mp);

// Builds the generalised Vandermonde minor (Y^N(x^{(M)}))_{N,M} and certifies
// its determinant nonzero.
bool vandermonde_certificate(const InvariantContext& ctx, const AdmissibleSet& adm,
                             const std::vector<EvalPoint>& points);

// Deterministic rational points off the discriminant (and with invertible
// flat-chart Jacobians when a flat map is supplied). Throws when the retry
// budget is exhausted.
std::vector<EvalPoint> sample_points(const InvariantContext& ctx, int count, std::uint64_t seed,
                                     const FlatMap* fm = nullptr, int retry_budget = 200);

// The raising matrix for the dual pairing in the e^{x_{l+1}} = u^N chart:
// diag(-C, 1/(4*dhat)); its corner equals the equivariant pairing of the
// identity class at nu = 1.
Mat dual_pairing_gram(const MarkedPair& mp);

Tensor3 ell_gw(const InvariantContext& ctx, const EvalPoint& pt);
Tensor3 ell_aw(const InvariantContext& ctx, const EvalPoint& pt, const Prepotential& F,
               const Mat& eta_aw, const FlatMap& fm);

// g^{eta alpha} = J B J^T with B the inverse dual Gram matrix.
Mat g_upper(const InvariantContext& ctx, const EvalPoint& pt);

struct DualityCheck {
  int alpha, beta, eps;
  int point_index;
  std::string lhs, rhs;
  bool equal;
};

struct DualityReport {
  std::string family;
  int rank = 0;
  std::uint64_t seed = 0;
  Rational D;
  std::size_t s_adm_size = 0;
  bool certificate = false;
  std::vector<EvalPoint> points;
  std::vector<DualityCheck> checks;
  bool pass = false;
  long elapsed_ms = 0;
};

// Samples |S_adm| certified points, compares ell_gw and ell_aw entrywise at
// each, and reports. Throws std::invalid_argument("prepotential data
// required") when F or fm is missing for the family.
DualityReport verify_duality(const MarkedPair& mp, const Prepotential* F, const FlatMap* fm,
                             std::uint64_t seed, int threads = 1);

// Flat-map file: header "flatmap <family> <rank>", lines "tA : <poly>" with
// terms like "3/4 W1^2 W5 u^3" joined by +/-; tokens Y1..Yl are accepted in
// place of W1..Wl (basic invariants instead of characters).
FlatMap parse_flatmap(std::istream& in, std::string& family, int& rank);

std::string report_to_json(const DualityReport& r);
DualityReport report_from_json(const std::string& text);
std::string report_render_text(const DualityReport& r);

}  // namespace wm

#endif
