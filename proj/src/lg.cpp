#include "wm/lg.hpp"

#include <algorithm>
#include <stdexcept>

#include "wm/util.hpp"

namespace wm {

namespace {

UniRat unirat_derivative(const UniRat& f) {
  Poly n = poly_sub(poly_mul(poly_derivative(f.num()), f.den()),
                    poly_mul(f.num(), poly_derivative(f.den())));
  return UniRat(n, poly_mul(f.den(), f.den()));
}

// 1/(mu - a) scaled: c/(mu - a)
UniRat simple_pole(const Rational& c, const Rational& a) {
  return UniRat(Poly{c}, Poly{-a, Rational(1)});
}

void check_generic_d(const std::vector<Rational>& kappa) {
  const size_t l = kappa.size();
  for (size_t i = 0; i < l; ++i) {
    if (is_zero(kappa[i]) || kappa[i] == 1 || kappa[i] == -1)
      throw std::domain_error("non-generic kappa");
    for (size_t j = i; j < l; ++j) {
      if (j > i && kappa[i] == kappa[j]) throw std::domain_error("non-generic kappa");
      if (kappa[i] * kappa[j] == 1) throw std::domain_error("non-generic kappa");
    }
  }
}

void check_generic_a(const std::vector<Rational>& kappa) {
  const size_t l = kappa.size();
  for (size_t i = 0; i < l; ++i) {
    if (is_zero(kappa[i]) || kappa[i] == 1) throw std::domain_error("non-generic kappa");
    for (size_t j = i + 1; j < l; ++j)
      if (kappa[i] == kappa[j]) throw std::domain_error("non-generic kappa");
  }
}

}  // namespace

Superpotential build_superpotential(const MarkedPair& mp, const std::vector<Rational>& kappa,
                                    const Rational& nu) {
  const int l = mp.rs.rank;
  if (static_cast<int>(kappa.size()) != l) throw std::invalid_argument("kappa arity mismatch");
  Superpotential sp;
  sp.family = mp.rs.family;
  sp.l = l;
  sp.kbar = mp.kbar;
  sp.nu = nu;
  sp.kappa = kappa;
  sp.overall = 1;

  if (sp.family == Family::D) {
    check_generic_d(kappa);
    Poly num{Rational(1)};
    for (const auto& k : kappa) {
      num = poly_mul(num, Poly{-k, Rational(1)});
      num = poly_mul(num, Poly{-Rational(1) / k, Rational(1)});
    }
    Poly den{Rational(1)};
    for (int i = 0; i < l - 2; ++i) den = poly_mul(den, Poly{Rational(0), Rational(1)});
    Poly m2{Rational(-1), Rational(0), Rational(1)};  // mu^2 - 1
    den = poly_mul(den, poly_mul(m2, m2));
    sp.lam = UniRat(num, den);
    for (const auto& k : kappa)
      sp.logderivs.push_back(simple_pole(-k, k) + simple_pole(Rational(1) / k, Rational(1) / k));
    sp.logderivs.push_back(UniRat::constant(Rational(1) / (2 * nu)));
    sp.support = {Rational(0), Rational(1), Rational(-1)};
    for (const auto& k : kappa) {
      sp.support.push_back(k);
      sp.support.push_back(Rational(1) / k);
    }
  } else if (sp.family == Family::A) {
    check_generic_a(kappa);
    const long lp1 = l + 1;
    Poly num{Rational(1), Rational(-1)};  // 1 - q
    for (const auto& k : kappa) num = poly_mul(num, Poly{Rational(1), -k});
    Poly den{Rational(1)};
    for (int i = 0; i < l + 1 - (mp.kbar + 1); ++i)
      den = poly_mul(den, Poly{Rational(0), Rational(1)});
    sp.lam = UniRat(num, den);
    // d(log lam)/d(log kappa_m), holding mu fixed (q depends on the kappas
    // through the overall torus factor, hence the 1/(l+1) terms).
    for (int m = 0; m < l; ++m) {
      UniRat d = UniRat(Poly{Rational(0), rat(1, lp1)}, Poly{Rational(1), Rational(-1)});
      for (int k = 0; k < l; ++k) {
        Rational c = kappa[k] * rat(1, lp1);
        if (k == m) c -= kappa[k];
        d = d + UniRat(Poly{Rational(0), c}, Poly{Rational(1), -kappa[k]});
      }
      sp.logderivs.push_back(d);
    }
    sp.logderivs.push_back(UniRat::constant(Rational(1) / (Rational(lp1) * nu)));
    sp.support = {Rational(0), Rational(1)};
    for (const auto& k : kappa) sp.support.push_back(Rational(1) / k);
  } else {
    throw std::invalid_argument("superpotential closed form is A/D only");
  }
  sp.dlog = unirat_derivative(sp.lam) / sp.lam;
  sp.cartan = mp.rs.cartan;

  sp.xdirs.assign(l + 1, UniRat());
  if (sp.family == Family::D) {
    MatI G, Theta;
    dtype_matrices(l, G, Theta);
    for (int a = 0; a < l; ++a) {
      UniRat acc;
      for (int m = 0; m < l; ++m)
        if (G(m, a) != 0) acc = acc + sp.logderivs[m] * UniRat::constant(Rational(G(m, a)));
      sp.xdirs[a] = acc;
    }
  } else {
    for (int a = 0; a < l; ++a) {
      UniRat acc;
      for (int m = 0; m < l; ++m) {
        long K = 0;
        for (int i = m; i < l; ++i) K -= sp.cartan(i, a);
        if (K != 0) acc = acc + sp.logderivs[m] * UniRat::constant(Rational(K));
      }
      sp.xdirs[a] = acc;
    }
  }
  sp.xdirs[l] = sp.logderivs[l];
  return sp;
}

namespace {

// Expected max pole orders for an integrand with n non-constant direction
// factors, from the pole classification of the residue argument.
int expected_order(const Superpotential& sp, const Rational& p, int n) {
  if (is_zero(p)) return n == 0 ? 1 : 0;
  if (sp.family == Family::D && (p == 1 || p == -1)) return 0;
  // zeros of lambda (kappa points for D, 1 and 1/kappa for A)
  return std::max(n - 1, 0);
}

struct ResidueSum {
  Rational total;     // sum over finite divisor support + infinity
  Rational residual;  // trace-formula sum over the leftover denominator roots
};

ResidueSum residue_sum(const Superpotential& sp, const UniRat& f, int n_nonconst,
                       bool validate) {
  ResidueSum out;
  out.total = 0;
  for (const auto& p : sp.support) {
    int ord = pole_order_at(f, p);
    if (validate && ord > expected_order(sp, p, n_nonconst))
      throw std::domain_error("unexpected pole order in residue argument");
    if (ord > 0) out.total += residue_at(f, p, ord);
  }
  out.total += residue_at_infinity(f);
  if (validate) {
    // Global residue theorem: what is left after the divisor support must be
    // carried by the critical points of lambda.
    out.residual = residue_sum_over_cofactor_roots(f, sp.support);
    if (!is_zero(out.total + out.residual))
      throw std::domain_error("global residue theorem violated");
    // And infinity must vanish fast enough per the classification.
    if (n_nonconst >= 1 && order_at_infinity(f) < n_nonconst + 1)
      throw std::domain_error("unexpected pole order at infinity");
  }
  return out;
}

UniRat assemble_integrand(const Superpotential& sp, const UniRat& d1, const UniRat& d2,
                          const UniRat& d3, const Rational& phi_factor) {
  // Assemble numerator and denominator in one go and reduce once; the
  // measure phi^2/(dmu mu^2) contributes phi_factor / mu^2.
  Poly num = poly_mul(poly_mul(d1.num(), d2.num()), d3.num());
  num = poly_mul(num, sp.dlog.den());
  num = poly_scale(num, phi_factor);
  Poly den = poly_mul(poly_mul(d1.den(), d2.den()), d3.den());
  den = poly_mul(den, sp.dlog.num());
  den = poly_mul(den, Poly{Rational(0), Rational(0), Rational(1)});
  return UniRat(std::move(num), std::move(den));
}

Rational phi_factor(const Superpotential& sp) {
  return sp.family == Family::D ? sp.nu : Rational(sp.l + 1) * sp.nu;
}

Rational triple_in_x(const Superpotential& sp, int i, int j, int k, bool validate) {
  int n = (i < sp.l) + (j < sp.l) + (k < sp.l);
  UniRat f = assemble_integrand(sp, sp.xdirs[i], sp.xdirs[j], sp.xdirs[k], phi_factor(sp));
  return -residue_sum(sp, f, n, validate).total;
}

}  // namespace

Rational lg_dual_triple(const Superpotential& sp, int i, int j, int k) {
  return triple_in_x(sp, i, j, k, false);
}

Rational lg_dual_triple_checked(const Superpotential& sp, int i, int j, int k) {
  return triple_in_x(sp, i, j, k, true);
}

Rational lg_dual_eta(const Superpotential& sp, int i, int j) {
  return lg_dual_triple(sp, i, j, sp.l);
}

Rational lg_dual_core_R(const Superpotential& sp, int i, int j, int k) {
  if (sp.family != Family::D) throw std::invalid_argument("log-kappa core is D-type only");
  auto dir = [&](int a) {
    return a < sp.l ? sp.logderivs[a] : UniRat::constant(Rational(1));
  };
  int n = (i < sp.l) + (j < sp.l) + (k < sp.l);
  UniRat f = assemble_integrand(sp, dir(i), dir(j), dir(k), rat(1, 2));
  return -residue_sum(sp, f, n, false).total;
}

Rational per_pole_contribution(const Superpotential& sp, int i, int j, int k,
                               const PoleTag& tag) {
  if (sp.family != Family::D) throw std::invalid_argument("per-pole forms are D-type only");
  auto dir = [&](int a) {
    return a < sp.l ? sp.logderivs[a] : UniRat::constant(Rational(1));
  };
  UniRat f = assemble_integrand(sp, dir(i), dir(j), dir(k), rat(1, 2));
  if (tag.kind == PoleTag::Infinity) return -residue_at_infinity(f);
  Rational p;
  switch (tag.kind) {
    case PoleTag::Zero: p = 0; break;
    case PoleTag::PlusOne: p = 1; break;
    case PoleTag::MinusOne: p = -1; break;
    case PoleTag::Kappa: p = sp.kappa.at(tag.m); break;
    case PoleTag::KappaInv: p = Rational(1) / sp.kappa.at(tag.m); break;
    default: throw std::invalid_argument("bad pole tag");
  }
  int ord = pole_order_at(f, p);
  return ord > 0 ? -residue_at(f, p, ord) : Rational(0);
}

std::vector<Rational> per_pole_contributions(const Superpotential& sp, int i, int j, int k) {
  if (sp.family != Family::D) throw std::invalid_argument("per-pole forms are D-type only");
  auto dir = [&](int a) {
    return a < sp.l ? sp.logderivs[a] : UniRat::constant(Rational(1));
  };
  UniRat f = assemble_integrand(sp, dir(i), dir(j), dir(k), rat(1, 2));
  std::vector<Rational> out;
  auto res = [&](const Rational& p) {
    int ord = pole_order_at(f, p);
    return ord > 0 ? -residue_at(f, p, ord) : Rational(0);
  };
  out.push_back(res(Rational(0)));
  out.push_back(-residue_at_infinity(f));
  out.push_back(res(Rational(1)));
  out.push_back(res(Rational(-1)));
  for (int m = 0; m < sp.l; ++m) {
    out.push_back(res(sp.kappa[m]));
    out.push_back(res(Rational(1) / sp.kappa[m]));
  }
  return out;
}

bool kappa_generic(Family family, const std::vector<Rational>& kappa) {
  try {
    if (family == Family::D)
      check_generic_d(kappa);
    else if (family == Family::A)
      check_generic_a(kappa);
    else
      return false;
  } catch (const std::domain_error&) {
    return false;
  }
  return true;
}

std::vector<std::vector<Rational>> sample_kappa(Family family, int l, int count,
                                                std::uint64_t seed) {
  static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  Rng rng(seed ^ 0x6b61707061ULL);
  std::vector<std::vector<Rational>> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++guard > 10000 * count) throw std::runtime_error("retry budget exhausted");
    std::vector<Rational> k(l);
    for (auto& c : k) {
      long p = primes[rng.below(25)];
      long q = primes[rng.below(25)];
      c = rat(p, q);
    }
    if (kappa_generic(family, k)) out.push_back(std::move(k));
  }
  return out;
}

Rational lemma_zero_inf_closed_form(const Superpotential& sp, int i, int j, int k) {
  if (i == sp.l && j == sp.l && k == sp.l) return rat(1, 2L * (sp.l - 2));
  return Rational(0);
}

Rational lemma_pair_closed_form(const Superpotential& sp, int i, int j, int k, int m) {
  const auto& kp = sp.kappa;
  int count = (i == m) + (j == m) + (k == m);
  if (count == 0 || m >= sp.l) return Rational(0);
  if (count == 3) {
    Rational q(0);
    for (int n = 0; n < sp.l; ++n) {
      if (n == m) continue;
      q += kp[n] * (1 - kp[m] * kp[m]) / ((kp[m] - kp[n]) * (kp[m] * kp[n] - 1));
    }
    return q;
  }
  if (count == 2) {
    int other = i;
    for (int idx : {i, j, k})
      if (idx != m) other = idx;
    if (other == sp.l) return Rational(-1);
    return kp[m] * (kp[other] * kp[other] - 1) /
           ((kp[m] - kp[other]) * (kp[m] * kp[other] - 1));
  }
  return Rational(0);
}

SpectralPoly spectral_poly(const InvariantContext& ctx, const WeightVec& rep_weight,
                           const EvalPoint& pt) {
  const MarkedPair& mp = ctx.mp();
  const RootSystem& rs = mp.rs;
  const int l = rs.rank;
  int deg_lambda;
  if (rs.family == Family::A || rs.family == Family::D)
    deg_lambda = 1;
  else if (rs.rank == 6)
    deg_lambda = 2;
  else
    throw std::domain_error("spectral substitution unsupported for this family");

  auto orbit = weyl_orbit(rs, rep_weight);
  const size_t n = orbit.size();
  std::vector<Rational> z(n);
  for (size_t w = 0; w < n; ++w) z[w] = eval_monomial(pt.q, orbit[w]);

  SpectralPoly out;
  out.Q = Poly{Rational(1)};
  for (size_t w = 0; w < n; ++w) out.Q = poly_mul(out.Q, Poly{z[w], Rational(-1)});

  // dY/dx at the point and the column of its inverse in the marked slot.
  Mat JY(l, l);
  std::vector<Rational> yv(l);
  std::vector<Mat> hess(l);
  {
    std::vector<Rational> grad;
    for (int i = 0; i < l; ++i) {
      ctx.Y()[i].eval_with_hessian(pt.q, yv[i], grad, hess[i]);
      for (int a = 0; a < l; ++a) JY(i, a) = grad[a];
    }
  }
  Mat JYinv = mat_inverse(JY);
  Vec v = JYinv.col(mp.kbar);
  // The shifted invariant in the substitution is the plain orbit sum, not the
  // orbit average our Y use; rescale the derivative direction accordingly.
  WeightVec marked(l, 0);
  marked[mp.kbar] = 1;
  Rational orbit_scale = Rational(1) / Rational(static_cast<long>(weyl_orbit(rs, marked).size()));
  for (int a = 0; a < l; ++a) v(a) *= orbit_scale;

  // dQ/dx_a = -sum_w w_a z_w D_w with Q = (mu - z_w) D_w.
  std::vector<Poly> D(n);
  for (size_t w = 0; w < n; ++w)
    if (poly_deflate(out.Q, z[w], D[w]) < 1) throw std::logic_error("z value not a root");
  std::vector<Poly> dQ(l);
  for (int a = 0; a < l; ++a) {
    Poly acc;
    for (size_t w = 0; w < n; ++w) {
      if (orbit[w][a] == 0) continue;
      acc = poly_add(acc, poly_scale(D[w], -Rational(orbit[w][a]) * z[w]));
    }
    dQ[a] = acc;
  }
  // dQ/dY_kbar by the inverse Jacobian chain.
  Poly Q1;
  for (int a = 0; a < l; ++a)
    if (!is_zero(v(a))) Q1 = poly_add(Q1, poly_scale(dQ[a], v(a)));

  const Rational half = Rational(pt.root_order) / 2;
  if (half.get_den() != 1) throw std::domain_error("non-divisible root_order");
  const long nhalf = half.get_num().get_si();

  out.P.resize(deg_lambda + 1);
  out.P[0] = out.Q;
  out.P[1] = poly_scale(Q1, -pow_int(pt.u, -nhalf));

  if (deg_lambda == 2) {
    // Second derivative in the marked invariant direction.
    // d2Q/dx_a dx_b = sum_w w_a w_b z_w (-D_w)
    //               + sum_{w != v} w_a z_w v_b z_v D_{wv},  Q=(mu-z_w)(mu-z_v)D_{wv}.
    std::vector<std::vector<Poly>> Dp(n, std::vector<Poly>(n));
    for (size_t w = 0; w < n; ++w)
      for (size_t x = w + 1; x < n; ++x) {
        Poly d;
        if (poly_deflate(D[w], z[x], d) < 1) throw std::logic_error("pair deflation failed");
        Dp[w][x] = d;
        Dp[x][w] = std::move(d);
      }
    Poly Q2;
    for (size_t w = 0; w < n; ++w) {
      // coefficient sum_a v_a w_a, reused across both terms
      Rational cw(0);
      for (int a = 0; a < l; ++a)
        if (orbit[w][a] != 0) cw += v(a) * Rational(orbit[w][a]);
      if (!is_zero(cw)) {
        Q2 = poly_add(Q2, poly_scale(D[w], -cw * cw * z[w]));
        for (size_t x = 0; x < n; ++x) {
          if (x == w) continue;
          Rational cx(0);
          for (int b = 0; b < l; ++b)
            if (orbit[x][b] != 0) cx += v(b) * Rational(orbit[x][b]);
          if (is_zero(cx)) continue;
          Q2 = poly_add(Q2, poly_scale(Dp[w][x], cw * z[w] * cx * z[x]));
        }
      }
    }
    // Connection part: u = -JY^{-1} (sum_a v_a dJY/dx_a) v.
    Mat Mv = Mat::Zero(l, l);
    for (int i = 0; i < l; ++i) {
      Vec hv = hess[i] * v;
      for (int b = 0; b < l; ++b) Mv(i, b) = hv(b);
    }
    Vec ucol = -(JYinv * (Mv * v));
    for (int b = 0; b < l; ++b)
      if (!is_zero(ucol(b))) Q2 = poly_add(Q2, poly_scale(dQ[b], ucol(b)));
    out.P[2] = poly_scale(Q2, pow_int(pt.u, -2 * nhalf) / 2);
  }
  return out;
}

MatI e6_weight_pairing_sum(const RootSystem& rs) {
  if (rs.family != Family::E || rs.rank != 6) throw std::invalid_argument("E6 only");
  WeightVec omega1(6, 0);
  omega1[0] = 1;
  auto orbit = weyl_orbit(rs, omega1);
  MatI out = MatI::Zero(6, 6);
  for (const auto& w : orbit)
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) out(i, j) += static_cast<long>(w[i]) * w[j];
  return out;
}

}  // namespace wm
