#include "wm/gw.hpp"

#include <stdexcept>

namespace wm {

TorusPoint torus_point_from_q(const RootSystem& rs, const std::vector<Rational>& q) {
  TorusPoint tp;
  tp.E.reserve(rs.positive_roots.size());
  for (const auto& beta : rs.positive_roots) tp.E.push_back(eval_monomial(q, beta));
  return tp;
}

TorusPoint torus_point_from_kappa_d(const RootSystem& rs, const std::vector<Rational>& kappa) {
  const int l = rs.rank;
  MatI G, Theta;
  dtype_matrices(l, G, Theta);
  TorusPoint tp;
  for (const auto& beta : rs.positive_roots) {
    // simple-root coordinates c = C^{-1} beta, then eps coordinates c^T G rows
    std::vector<long> c(l);
    for (int a = 0; a < l; ++a) {
      Rational v(0);
      for (int j = 0; j < l; ++j) v += rs.inverse_cartan(a, j) * Rational(beta[j]);
      c[a] = v.get_num().get_si();
    }
    Rational E(1);
    for (int j = 0; j < l; ++j) {
      long e = 0;
      for (int a = 0; a < l; ++a) e += c[a] * G(j, a);
      if (e != 0) E *= pow_int(kappa[j], e);
    }
    tp.E.push_back(E);
  }
  return tp;
}

TorusPoint torus_point_from_kappa_a(const RootSystem& rs, const std::vector<Rational>& kappa) {
  const int l = rs.rank;
  TorusPoint tp;
  auto kap = [&](int j) { return j == l ? Rational(1) : kappa[j]; };  // kappa_{l+1} = 1
  for (const auto& beta : rs.positive_roots) {
    // c_a in {0,1} consecutive for A_l: e^{p_a} = kappa_{a+1}/kappa_a
    Rational E(1);
    for (int a = 0; a < l; ++a) {
      Rational v(0);
      for (int j = 0; j < l; ++j) v += rs.inverse_cartan(a, j) * Rational(beta[j]);
      long c = v.get_num().get_si();
      if (c != 0) E *= pow_int(kap(a + 1) / kap(a), c);
    }
    tp.E.push_back(E);
  }
  return tp;
}

GwContext GwContext::one_torus(const MarkedPair& mp, const Rational& nu) {
  GwContext ctx;
  ctx.mp = mp;
  ctx.two_torus = false;
  ctx.nu = nu;
  if (mp.rs.family == Family::A) {
    ctx.nu1 = Rational(mp.rs.rank + 1 - (mp.kbar + 1)) * nu;
    ctx.nu2 = Rational(mp.kbar + 1) * nu;
  } else {
    ctx.nu1 = ctx.nu2 = nu;
  }
  return ctx;
}

GwContext GwContext::two_torus_a(const MarkedPair& mp, const Rational& nu1, const Rational& nu2) {
  if (mp.rs.family != Family::A) throw std::invalid_argument("two-torus context is A-type only");
  GwContext ctx;
  ctx.mp = mp;
  ctx.two_torus = true;
  ctx.nu = (nu1 + nu2) / Rational(mp.rs.rank + 1);
  ctx.nu1 = nu1;
  ctx.nu2 = nu2;
  return ctx;
}

Rational gw_eta(const GwContext& ctx, int i, int j) {
  const int l = ctx.mp.rs.rank;
  if (i == l && j == l) {
    if (ctx.two_torus || ctx.mp.rs.family == Family::A)
      return Rational(1) / (ctx.nu1 * ctx.nu2 * Rational(ctx.mp.mckay_order));
    return Rational(1) / (ctx.nu * ctx.nu * Rational(ctx.mp.mckay_order));
  }
  if (i < l && j < l) return -Rational(ctx.mp.rs.cartan(i, j));
  return Rational(0);
}

namespace {

void check_semisimple(const RootSystem& rs, const TorusPoint& tp) {
  if (tp.E.size() != rs.positive_roots.size()) throw std::invalid_argument("torus point arity");
  for (const auto& E : tp.E)
    if (E == 1) throw std::domain_error("point on discriminant");
}

// Symmetrized value of the classical A-type trilinear form.
Rational frakC(const GwContext& ctx, int i, int j, int k) {
  const long lp1 = ctx.mp.rs.rank + 1;
  long a = std::min(i, std::min(j, k)) + 1;
  long c = std::max(i, std::max(j, k)) + 1;
  long b = static_cast<long>(i) + j + k + 3 - a - c;
  return (Rational(b) * ctx.nu1 + Rational(lp1 - b) * ctx.nu2) * Rational(a * (lp1 - c)) /
         Rational(lp1);
}

}  // namespace

Rational gw_triple_a2(const GwContext& ctx, int i, int j, int k, const TorusPoint& tp) {
  const RootSystem& rs = ctx.mp.rs;
  const int l = rs.rank;
  if (rs.family != Family::A) throw std::invalid_argument("gw_triple_a2 is A-type only");
  int extra = (i == l) + (j == l) + (k == l);
  if (extra >= 1) {
    int a = l, b = l;
    for (int idx : {i, j, k}) {
      if (idx == l) continue;
      if (a == l)
        a = idx;
      else
        b = idx;
    }
    return gw_eta(ctx, a, b);
  }
  check_semisimple(rs, tp);
  Rational acc(0);
  // classical: - sum C_{ii'} C_{jj'} C_{kk'} frakC_{i'j'k'}
  for (int a = 0; a < l; ++a) {
    if (rs.cartan(i, a) == 0) continue;
    for (int b = 0; b < l; ++b) {
      if (rs.cartan(j, b) == 0) continue;
      for (int c = 0; c < l; ++c) {
        if (rs.cartan(k, c) == 0) continue;
        acc -= Rational(rs.cartan(i, a) * rs.cartan(j, b) * rs.cartan(k, c)) * frakC(ctx, a, b, c);
      }
    }
  }
  // quantum: -(nu1+nu2) sum_beta <a_i,b><a_j,b><a_k,b> / (E_beta - 1)
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    const auto& beta = rs.positive_roots[r];
    long w = static_cast<long>(beta[i]) * beta[j] * beta[k];
    if (w == 0) continue;
    acc -= (ctx.nu1 + ctx.nu2) * Rational(w) / (tp.E[r] - 1);
  }
  return acc;
}

Rational gw_triple(const GwContext& ctx, int i, int j, int k, const TorusPoint& tp) {
  const RootSystem& rs = ctx.mp.rs;
  const int l = rs.rank;
  if (ctx.two_torus) throw std::invalid_argument("gw_triple needs a one-torus context");
  if (rs.family == Family::A) return gw_triple_a2(ctx, i, j, k, tp);

  int extra = (i == l) + (j == l) + (k == l);
  if (extra >= 1) {
    int a = l, b = l;
    for (int idx : {i, j, k}) {
      if (idx == l) continue;
      if (a == l)
        a = idx;
      else
        b = idx;
    }
    return gw_eta(ctx, a, b);
  }
  check_semisimple(rs, tp);
  Rational acc(0);
  for (size_t r = 0; r < rs.positive_roots.size(); ++r) {
    const auto& beta = rs.positive_roots[r];
    long w = static_cast<long>(beta[i]) * beta[j] * beta[k];
    if (w == 0) continue;
    acc -= ctx.nu * Rational(w) * (tp.E[r] + 1) / (tp.E[r] - 1);
  }
  return acc;
}

Tensor3 gw_third_tensor(const GwContext& ctx, const TorusPoint& tp) {
  const int l = ctx.mp.rs.rank;
  Tensor3 out(l + 1);
  for (int i = 0; i <= l; ++i)
    for (int j = i; j <= l; ++j)
      for (int k = j; k <= l; ++k) {
        Rational v = gw_triple(ctx, i, j, k, tp);
        out.at(i, j, k) = v;
        out.at(i, k, j) = v;
        out.at(j, i, k) = v;
        out.at(j, k, i) = v;
        out.at(k, i, j) = v;
        out.at(k, j, i) = v;
      }
  return out;
}

Rational dtype_tau_triple(int l, int i, int j, int k, const std::vector<Rational>& etau) {
  MatI G, Theta;
  dtype_matrices(l, G, Theta);
  Rational acc(0);
  for (int s = 0; s < Theta.rows(); ++s) {
    Rational T(1);
    for (int m = 0; m < l; ++m)
      if (Theta(s, m) != 0) T *= pow_int(etau[m], -Theta(s, m));
    if (T == 1) throw std::domain_error("point on discriminant");
    long w = Theta(s, i) * Theta(s, j) * Theta(s, k);
    if (w == 0) continue;
    acc -= Rational(w) * T / (1 - T);
  }
  return acc;
}

}  // namespace wm
