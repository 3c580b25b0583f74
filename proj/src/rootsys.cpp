#include "wm/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wm {

Family family_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  // accept compact names like "E6"
  if (s.size() == 2 && (s[0] == 'A' || s[0] == 'a')) return Family::A;
  if (s.size() == 2 && (s[0] == 'D' || s[0] == 'd')) return Family::D;
  if (s.size() == 2 && (s[0] == 'E' || s[0] == 'e')) return Family::E;
  throw std::invalid_argument("unknown family: " + s);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

Rational RootSystem::pairing(const WeightVec& v, const WeightVec& w) const {
  Rational acc(0);
  for (int i = 0; i < rank; ++i) {
    if (v[i] == 0) continue;
    Rational row(0);
    for (int j = 0; j < rank; ++j)
      if (w[j] != 0) row += inverse_cartan(i, j) * Rational(w[j]);
    acc += Rational(v[i]) * row;
  }
  return acc;
}

WeightVec RootSystem::simple_reflection(int i, const WeightVec& w) const {
  WeightVec r = w;
  const std::int32_t wi = w[i];
  if (wi == 0) return r;
  for (int j = 0; j < rank; ++j) r[j] -= wi * static_cast<std::int32_t>(cartan(i, j));
  return r;
}

int RootSystem::trivalent_node() const {
  for (int i = 0; i < rank; ++i) {
    int deg = 0;
    for (int j = 0; j < rank; ++j)
      if (j != i && cartan(i, j) != 0) ++deg;
    if (deg == 3) return i;
  }
  throw std::domain_error("no trivalent node");
}

namespace {

MatI ade_cartan(Family family, int rank) {
  MatI c = MatI::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) c(i, i) = 2;
  auto link = [&](int i, int j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < rank - 2; ++i) link(i, i + 1);
      link(rank - 3, rank - 2);
      link(rank - 3, rank - 1);
      break;
    case Family::E:
      for (int i = 0; i + 1 < rank - 1; ++i) link(i, i + 1);
      link(2, rank - 1);
      break;
  }
  return c;
}

size_t expected_positive_roots(Family family, int rank) {
  switch (family) {
    case Family::A: return static_cast<size_t>(rank) * (rank + 1) / 2;
    case Family::D: return static_cast<size_t>(rank) * (rank - 1);
    case Family::E: return rank == 6 ? 36 : (rank == 7 ? 63 : 120);
  }
  return 0;
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  const bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 4) ||
                  (family == Family::E && rank >= 6 && rank <= 8);
  if (!ok) throw std::invalid_argument("unsupported (family, rank)");

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan = ade_cartan(family, rank);
  rs.inverse_cartan = mat_inverse(to_rational(rs.cartan));

  // All roots: reflection closure of the simple roots (rows of C); a root is
  // positive iff its simple-root coordinates C^{-1} w are nonnegative.
  std::set<WeightVec> all;
  std::vector<WeightVec> frontier;
  for (int i = 0; i < rank; ++i) {
    WeightVec alpha(rank);
    for (int j = 0; j < rank; ++j) alpha[j] = static_cast<std::int32_t>(rs.cartan(i, j));
    if (all.insert(alpha).second) frontier.push_back(alpha);
  }
  while (!frontier.empty()) {
    std::vector<WeightVec> next;
    for (const auto& w : frontier)
      for (int i = 0; i < rank; ++i) {
        WeightVec r = rs.simple_reflection(i, w);
        if (all.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }

  std::vector<std::pair<long, WeightVec>> pos;  // (height, root), for ordering
  for (const auto& w : all) {
    long height = 0;
    bool positive = true;
    for (int a = 0; a < rank && positive; ++a) {
      Rational c(0);
      for (int j = 0; j < rank; ++j) c += rs.inverse_cartan(a, j) * Rational(w[j]);
      if (c.get_den() != 1) throw std::logic_error("non-integral root coordinate");
      if (sgn(c) < 0) positive = false;
      height += c.get_num().get_si();
    }
    if (positive) pos.emplace_back(height, w);
  }
  std::sort(pos.begin(), pos.end());
  for (auto& [h, w] : pos) rs.positive_roots.push_back(std::move(w));

  if (rs.positive_roots.size() != expected_positive_roots(family, rank))
    throw std::logic_error("positive root count mismatch");
  return rs;
}

std::vector<WeightVec> weyl_orbit(const RootSystem& rs, const WeightVec& w) {
  std::set<WeightVec> seen{w};
  std::vector<WeightVec> order{w};
  size_t head = 0;
  while (head < order.size()) {
    WeightVec cur = order[head++];
    for (int i = 0; i < rs.rank; ++i) {
      WeightVec r = rs.simple_reflection(i, cur);
      if (seen.insert(r).second) order.push_back(r);
    }
  }
  return order;
}

MarkedPair marked_pair(Family family, int rank, int kbar) {
  MarkedPair mp;
  mp.rs = build_root_system(family, rank);
  if (family == Family::A) {
    if (kbar < 1 || kbar > rank) throw std::invalid_argument("marked node required for type A");
    mp.kbar = kbar - 1;
  } else {
    mp.kbar = mp.rs.trivalent_node();
  }

  mp.d.resize(rank);
  for (int a = 0; a < rank; ++a) mp.d[a] = mp.rs.inverse_cartan(a, mp.kbar);
  mp.dhat = mp.rs.inverse_cartan(mp.kbar, mp.kbar);

  switch (family) {
    case Family::A: mp.mckay_order = rank + 1; break;
    case Family::D: mp.mckay_order = 4L * (rank - 2); break;
    case Family::E: mp.mckay_order = rank == 6 ? 24 : (rank == 7 ? 48 : 120); break;
  }

  // N = lcm of the denominators of {d_a} and 1/(2*dhat); forced even so that
  // e^{x_{l+1}/2} = u^{N/2} stays rational.
  Integer n(1);
  for (const auto& da : mp.d) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), da.get_den().get_mpz_t());
  Rational half_inv = Rational(1) / (2 * mp.dhat);
  mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), half_inv.get_den().get_mpz_t());
  if (mpz_odd_p(n.get_mpz_t())) n *= 2;
  if (!n.fits_sint_p()) throw std::logic_error("root order overflow");
  mp.root_order = static_cast<int>(n.get_si());
  return mp;
}

void dtype_matrices(int l, MatI& G, MatI& Theta) {
  if (l < 4) throw std::invalid_argument("dtype_matrices requires l >= 4");
  G = MatI::Zero(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      long v = 0;
      if (i == j) v += 1;
      if (i == j + 1) v -= 1;
      if (i == l - 2 && j == l - 1) v += 1;
      G(i, j) = v;
    }
  const int m = l * (l - 1) / 2;
  Theta = MatI::Zero(2 * m, l);
  int row = 0;
  for (int i = 0; i < l; ++i)  // Theta^+ block: rows sigma(i,j) lexicographic
    for (int j = i + 1; j < l; ++j) {
      Theta(row, i) = 1;
      Theta(row, j) = 1;
      ++row;
    }
  for (int i = 0; i < l; ++i)  // Theta^- block
    for (int j = i + 1; j < l; ++j) {
      Theta(row, i) = 1;
      Theta(row, j) = -1;
      ++row;
    }
}

WeightVec weyl_vector(const RootSystem& rs) { return WeightVec(rs.rank, 1); }

}  // namespace wm
