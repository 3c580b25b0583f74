#ifndef WM_ROOTSYS_HPP
#define WM_ROOTSYS_HPP

// ADE root systems, Weyl orbits and marked pairs.
//
// Node labeling ("chain-first"): the long chain is numbered 1..m and the
// short branch node comes last.
//   A_l : 1 - 2 - ... - l
//   D_l : 1 - 2 - ... - (l-2) with both l-1 and l attached to l-2
//   E_l : 1 - 2 - ... - (l-1) with node l attached to node 3
// Dictionary to Bourbaki labels:
//   A_l : identity
//   D_l : identity (Bourbaki centre node is l-2 as well)
//   E6  : (1,2,3,4,5,6) -> Bourbaki (1,3,4,5,6,2)
//   E7  : (1,...,7)     -> Bourbaki (1,3,4,5,6,7,2)
//   E8  : (1,...,8)     -> Bourbaki (1,3,4,5,6,7,8,2)
// Weights live in fundamental-weight coordinates: the vector w stands for
// sum_a w_a omega_a, so the exponent vector of the monomial e^{<w,h>} is w
// itself and simple roots are the rows of the Cartan matrix.

#include <string>
#include <vector>

#include "wm/matrix.hpp"
#include "wm/rational.hpp"

namespace wm {

enum class Family { A, D, E };

Family family_from_string(const std::string& s);
std::string family_name(Family f);

using WeightVec = std::vector<std::int32_t>;

struct RootSystem {
  Family family;
  int rank;
  MatI cartan;                         // C_ij, chain-first labels
  Mat inverse_cartan;                  // exact
  std::vector<WeightVec> positive_roots;  // fundamental-weight coordinates

  // <v,w> = v^T C^{-1} w (so <alpha_i,alpha_j> = C_ij).
  Rational pairing(const WeightVec& v, const WeightVec& w) const;
  // s_i(w) = w - w_i * (row i of C); i is 0-based.
  WeightVec simple_reflection(int i, const WeightVec& w) const;
  int trivalent_node() const;  // 0-based; D/E only
};

RootSystem build_root_system(Family family, int rank);

struct MarkedPair {
  RootSystem rs;
  int kbar;                  // 0-based marked node
  std::vector<Rational> d;   // d_a = <omega_a, omega_hat> = (C^{-1})_{a,kbar}
  Rational dhat;             // <omega_hat, omega_hat>
  long mckay_order;          // |G|
  int root_order;            // N: e^{x_{l+1}} = u^N keeps the pipeline rational
};

// kbar is 1-based and required for family A; ignored for D/E (trivalent node).
MarkedPair marked_pair(Family family, int rank, int kbar = -1);

// Breadth-first closure of {w} under simple reflections, deterministic order.
std::vector<WeightVec> weyl_orbit(const RootSystem& rs, const WeightVec& w);

// D-type auxiliary matrices: G (l x l) with G^T G = C, and Theta
// (l(l-1) x l) stacking Theta^+ over Theta^-, rows indexed by the
// lexicographic bijection sigma(i,j), i<j.
void dtype_matrices(int l, MatI& G, MatI& Theta);

// Weyl vector w = sum_i omega_i in fundamental-weight coordinates.
WeightVec weyl_vector(const RootSystem& rs);

}  // namespace wm

#endif
