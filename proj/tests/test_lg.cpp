#include <doctest.h>

#include "wm/gw.hpp"
#include "wm/lg.hpp"
#include "wm/util.hpp"

using namespace wm;

namespace {

Rational rnd_coord(Rng& rng) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  long p = primes[rng.below(10)];
  long q = primes[rng.below(10)];
  return rat(p, q);
}

std::vector<Rational> rnd_kappa_d(Rng& rng, int l) {
  for (;;) {
    std::vector<Rational> k(l);
    for (auto& c : k) c = rnd_coord(rng);
    bool ok = true;
    for (int i = 0; i < l && ok; ++i) {
      if (k[i] == 1 || k[i] == -1) ok = false;
      for (int j = i; j < l && ok; ++j) {
        if (j > i && k[i] == k[j]) ok = false;
        if (k[i] * k[j] == 1) ok = false;
      }
    }
    if (ok) return k;
  }
}

std::vector<Rational> rnd_kappa_a(Rng& rng, int l) {
  for (;;) {
    std::vector<Rational> k(l);
    for (auto& c : k) c = rnd_coord(rng);
    bool ok = true;
    for (int i = 0; i < l && ok; ++i) {
      if (k[i] == 1) ok = false;
      for (int j = i + 1; j < l && ok; ++j)
        if (k[i] == k[j]) ok = false;
    }
    if (ok) return k;
  }
}

}  // namespace

TEST_CASE("superpotential shapes") {
  Rng rng(1);
  MarkedPair d4 = marked_pair(Family::D, 4);
  auto kappa = rnd_kappa_d(rng, 4);
  Superpotential sp = build_superpotential(d4, kappa);
  CHECK(poly_deg(sp.lam.num()) == 8);
  // denominator mu^2 (mu^2-1)^2
  Poly expect = poly_mul(Poly{Rational(0), Rational(0), Rational(1)},
                         poly_mul(Poly{Rational(-1), Rational(0), Rational(1)},
                                  Poly{Rational(-1), Rational(0), Rational(1)}));
  CHECK(sp.lam.den() == expect);

  // displayed log-derivative factors and the displayed d(log lam)/dmu
  for (int m = 0; m < 4; ++m) {
    UniRat want = UniRat(Poly{-kappa[m]}, Poly{-kappa[m], Rational(1)}) +
                  UniRat(Poly{Rational(1) / kappa[m]},
                         Poly{-Rational(1) / kappa[m], Rational(1)});
    CHECK(sp.logderivs[m].num() == want.num());
    CHECK(sp.logderivs[m].den() == want.den());
  }
  UniRat dlog_display;
  for (int r = 0; r < 4; ++r)
    dlog_display = dlog_display + UniRat(Poly{Rational(1)}, Poly{-kappa[r], Rational(1)}) +
                   UniRat(Poly{Rational(1)}, Poly{-Rational(1) / kappa[r], Rational(1)});
  dlog_display = dlog_display - UniRat(Poly{Rational(2)}, Poly{Rational(0), Rational(1)}) -
                 UniRat(Poly{Rational(0), Rational(4)}, Poly{Rational(-1), Rational(0), Rational(1)});
  CHECK(sp.dlog.num() == dlog_display.num());
  CHECK(sp.dlog.den() == dlog_display.den());

  // A-type: lambda vanishes at q = 1
  MarkedPair a3 = marked_pair(Family::A, 3, 2);
  Superpotential spa = build_superpotential(a3, rnd_kappa_a(rng, 3));
  CHECK(spa.lam.eval(Rational(1)) == 0);

  CHECK_THROWS_WITH(
      (void)build_superpotential(d4, {Rational(2), Rational(2), Rational(3), Rational(5)}),
      "non-generic kappa");
  CHECK_THROWS_WITH(
      (void)build_superpotential(d4, {Rational(2), rat(1, 2), Rational(3), Rational(5)}),
      "non-generic kappa");
}

TEST_CASE("D-type dual pairing from residues") {
  Rng rng(2);
  for (int l : {4, 5, 6}) {
    MarkedPair mp = marked_pair(Family::D, l);
    Superpotential sp = build_superpotential(mp, rnd_kappa_d(rng, l));
    for (int i = 0; i < l; ++i)
      for (int j = i; j < l; ++j)
        CHECK(lg_dual_eta(sp, i, j) == -Rational(mp.rs.cartan(i, j)));
    CHECK(lg_dual_eta(sp, l, l) == rat(1, 4L * (l - 2)));
    for (int i = 0; i < l; ++i) CHECK(lg_dual_eta(sp, i, l) == 0);
  }
}

TEST_CASE("per-pole contributions match the closed forms") {
  Rng rng(3);
  for (int l : {4, 5}) {
    MarkedPair mp = marked_pair(Family::D, l);
    auto kappa = rnd_kappa_d(rng, l);
    Superpotential sp = build_superpotential(mp, kappa);
    // all index patterns over {0..l} up to symmetry
    for (int i = 0; i <= l; ++i)
      for (int j = i; j <= l; ++j)
        for (int k = j; k <= l; ++k) {
          CHECK(per_pole_contribution(sp, i, j, k, {PoleTag::PlusOne, 0}) == 0);
          CHECK(per_pole_contribution(sp, i, j, k, {PoleTag::MinusOne, 0}) == 0);
          Rational zero_inf = lemma_zero_inf_closed_form(sp, i, j, k);
          CHECK(per_pole_contribution(sp, i, j, k, {PoleTag::Zero, 0}) == zero_inf);
          CHECK(per_pole_contribution(sp, i, j, k, {PoleTag::Infinity, 0}) == zero_inf);
          for (int m = 0; m < l; ++m) {
            Rational pair = per_pole_contribution(sp, i, j, k, {PoleTag::Kappa, m}) +
                            per_pole_contribution(sp, i, j, k, {PoleTag::KappaInv, m});
            CHECK(pair == lemma_pair_closed_form(sp, i, j, k, m));
          }
        }
  }
}

TEST_CASE("p_12 closed form at kappa = (2,3,5,7)") {
  MarkedPair mp = marked_pair(Family::D, 4);
  std::vector<Rational> kappa{Rational(2), Rational(3), Rational(5), Rational(7)};
  Superpotential sp = build_superpotential(mp, kappa);
  // p_{12} = kappa1 (kappa2^2 - 1) / ((kappa1-kappa2)(kappa1 kappa2 - 1))
  CHECK(lemma_pair_closed_form(sp, 0, 0, 1, 0) == rat(-16, 5));
  Rational generic = per_pole_contribution(sp, 0, 0, 1, {PoleTag::Kappa, 0}) +
                     per_pole_contribution(sp, 0, 0, 1, {PoleTag::KappaInv, 0});
  CHECK(generic == rat(-16, 5));
}

TEST_CASE("lemma equivalence: pole sums equal the batch core") {
  Rng rng(4);
  for (int l : {4, 5, 6, 7}) {
    MarkedPair mp = marked_pair(Family::D, l);
    Superpotential sp = build_superpotential(mp, rnd_kappa_d(rng, l));
    for (int trial = 0; trial < 6; ++trial) {
      int i = static_cast<int>(rng.below(l + 1));
      int j = static_cast<int>(rng.below(l + 1));
      int k = static_cast<int>(rng.below(l + 1));
      Rational sum = per_pole_contribution(sp, i, j, k, {PoleTag::Zero, 0}) +
                     per_pole_contribution(sp, i, j, k, {PoleTag::Infinity, 0}) +
                     per_pole_contribution(sp, i, j, k, {PoleTag::PlusOne, 0}) +
                     per_pole_contribution(sp, i, j, k, {PoleTag::MinusOne, 0});
      for (int m = 0; m < l; ++m)
        sum += per_pole_contribution(sp, i, j, k, {PoleTag::Kappa, m}) +
               per_pole_contribution(sp, i, j, k, {PoleTag::KappaInv, m});
      CHECK(sum == lg_dual_core_R(sp, i, j, k));
    }
  }
}

TEST_CASE("R versus tau-derivatives of the quantum potential") {
  Rng rng(5);
  for (int l : {4, 5, 6, 7, 8}) {
    MarkedPair mp = marked_pair(Family::D, l);
    auto kappa = rnd_kappa_d(rng, l);
    Superpotential sp = build_superpotential(mp, kappa);
    for (int i = 0; i < l; ++i) {
      // R_iii = dtt(i,i,i) - (l - i) with 1-based i
      Rational Riii = lg_dual_core_R(sp, i, i, i);
      CHECK(Riii == dtype_tau_triple(l, i, i, i, kappa) - Rational(l - (i + 1)));
      for (int j = 0; j < l; ++j) {
        if (j == i) continue;
        Rational Riij = lg_dual_core_R(sp, i, i, j);
        int sgn = (i > j) ? 1 : -1;  // sgn(i-j), identical in either labeling
        CHECK(Riij == dtype_tau_triple(l, i, i, j, kappa) - Rational(sgn + 1) / 2);
        for (int k = 0; k < l; ++k) {
          if (k == i || k == j || j > k) continue;
          CHECK(lg_dual_core_R(sp, i, j, k) == 0);
        }
      }
    }
  }
}

TEST_CASE("Theta identities") {
  for (int l = 4; l <= 8; ++l) {
    MatI G, Theta;
    dtype_matrices(l, G, Theta);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        long sum = 0;
        for (int s = 0; s < Theta.rows(); ++s)
          sum += Theta(s, i) * Theta(s, i) * Theta(s, j);
        if (i == j)
          CHECK(sum == 2 * (l - (i + 1)));
        else
          CHECK(sum == ((i > j) ? 1 : -1) + 1);
      }
  }
}

TEST_CASE("D-type mirror: residue triples equal the quantum cohomology triples") {
  Rng rng(6);
  for (int l : {4, 5}) {
    MarkedPair mp = marked_pair(Family::D, l);
    GwContext ctx = GwContext::one_torus(mp);
    auto kappa = rnd_kappa_d(rng, l);
    Superpotential sp = build_superpotential(mp, kappa);
    TorusPoint tp = torus_point_from_kappa_d(mp.rs, kappa);
    for (int i = 0; i <= l; ++i)
      for (int j = i; j <= l; ++j)
        for (int k = j; k <= l; ++k)
          CHECK(lg_dual_triple(sp, i, j, k) == gw_triple(ctx, i, j, k, tp));
  }
}

TEST_CASE("A-type mirror: residue triples equal the restricted two-torus triples") {
  Rng rng(7);
  for (int l : {1, 2, 3}) {
    for (int kbar = 1; kbar <= l; ++kbar) {
      MarkedPair mp = marked_pair(Family::A, l, kbar);
      GwContext ctx = GwContext::two_torus_a(mp, Rational(l + 1 - kbar), Rational(kbar));
      auto kappa = rnd_kappa_a(rng, l);
      Superpotential sp = build_superpotential(mp, kappa);
      TorusPoint tp = torus_point_from_kappa_a(mp.rs, kappa);
      for (int i = 0; i <= l; ++i)
        for (int j = i; j <= l; ++j)
          for (int k = j; k <= l; ++k)
            CHECK(lg_dual_triple(sp, i, j, k) == gw_triple_a2(ctx, i, j, k, tp));
    }
  }
}

TEST_CASE("assembly validation: classification bounds and residue theorem") {
  Rng rng(8);
  MarkedPair d5 = marked_pair(Family::D, 5);
  Superpotential sp = build_superpotential(d5, rnd_kappa_d(rng, 5));
  for (int i = 0; i <= 5; ++i)
    for (int j = i; j <= 5; ++j)
      for (int k = j; k <= 5; ++k)
        CHECK(lg_dual_triple_checked(sp, i, j, k) == lg_dual_triple(sp, i, j, k));

  MarkedPair a2 = marked_pair(Family::A, 2, 1);
  Superpotential spa = build_superpotential(a2, rnd_kappa_a(rng, 2));
  for (int i = 0; i <= 2; ++i)
    for (int j = i; j <= 2; ++j)
      for (int k = j; k <= 2; ++k)
        CHECK(lg_dual_triple_checked(spa, i, j, k) == lg_dual_triple(spa, i, j, k));
}

TEST_CASE("invariance of dual structure constants under lambda rescaling") {
  // only log-derivatives and divisor data enter, so scaling lam by a constant
  // must not change anything; verified by scaling the stored lam directly.
  Rng rng(9);
  MarkedPair d4 = marked_pair(Family::D, 4);
  auto kappa = rnd_kappa_d(rng, 4);
  Superpotential sp = build_superpotential(d4, kappa);
  Superpotential scaled = sp;
  scaled.lam = sp.lam * UniRat::constant(rat(7, 3));
  scaled.dlog = sp.dlog;  // unchanged by construction: d log(c f) = d log f
  for (int i = 0; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) CHECK(lg_dual_eta(scaled, i, j) == lg_dual_eta(sp, i, j));
}

TEST_CASE("spectral polynomial: A1 and degree checks") {
  MarkedPair a1 = marked_pair(Family::A, 1, 1);
  InvariantContext ctx(a1);
  EvalPoint pt{{Rational(3)}, Rational(2), a1.root_order};
  WeightVec omega1{1};
  SpectralPoly spoly = spectral_poly(ctx, omega1, pt);
  // Q = mu^2 - 2 Y_1 mu + 1 evaluated at the point: Y_1 = (3 + 1/3)/2 = 5/3
  REQUIRE(spoly.Q.size() == 3);
  CHECK(spoly.Q[2] == 1);
  CHECK(spoly.Q[1] == -2 * rat(5, 3));
  CHECK(spoly.Q[0] == 1);
  CHECK(spoly.P.size() == 2);

  MarkedPair d4 = marked_pair(Family::D, 4);
  InvariantContext ctxd(d4);
  EvalPoint ptd{{Rational(2), Rational(3), Rational(5), Rational(7)}, Rational(2),
                d4.root_order};
  WeightVec om1(4, 0);
  om1[0] = 1;
  SpectralPoly spd = spectral_poly(ctxd, om1, ptd);
  CHECK(poly_deg(spd.Q) == 8);  // orbit size 2l
}

TEST_CASE("E6 spectral polynomial: lambda^2 coefficient") {
  MarkedPair mp = marked_pair(Family::E, 6);
  InvariantContext ctx(mp);
  EvalPoint pt;
  pt.root_order = 12;
  pt.q = {Rational(2), rat(3, 2), Rational(5), rat(7, 3), Rational(3), rat(5, 2)};
  pt.u = Rational(3);
  WeightVec omega1(6, 0);
  omega1[0] = 1;
  SpectralPoly spoly = spectral_poly(ctx, omega1, pt);
  CHECK(poly_deg(spoly.Q) == 27);
  REQUIRE(spoly.P.size() == 3);
  // expected: e^{-x7} mu^9 (mu^3 - 1)^3 with e^{x7} = u^12
  Poly cube{Rational(-1), Rational(0), Rational(0), Rational(1)};  // mu^3 - 1
  Poly expect = poly_mul(cube, poly_mul(cube, cube));
  Poly shift(9, Rational(0));
  shift.push_back(Rational(1));  // mu^9
  expect = poly_mul(expect, shift);
  expect = poly_scale(expect, pow_int(pt.u, -12));
  CHECK(spoly.P[2] == expect);
}

TEST_CASE("spectral substitution reproduces the superpotential divisor") {
  // Solving P(lambda, mu) = 0 for lambda in the degree-one cases gives
  // lambda proportional to Q(mu) / (dQ/dY_marked)(mu), so the
  // marked-direction derivative must be a constant multiple of the
  // superpotential denominator and Q a constant multiple of its numerator.
  Rng rng(23);
  for (int l : {4, 5}) {
    MarkedPair mp = marked_pair(Family::D, l);
    InvariantContext ctx(mp);
    auto kappa = rnd_kappa_d(rng, l);
    Superpotential sp = build_superpotential(mp, kappa);
    // torus point with these kappa values: q_a = prod_j kappa_j^{G_{ja}}
    // is not rational in general, so evaluate at an independent point and
    // only compare the mu-shape of the derivative.
    EvalPoint pt;
    pt.root_order = mp.root_order;
    pt.u = Rational(2);
    pt.q.resize(l);
    do {
      for (auto& c : pt.q) c = rnd_coord(rng);
    } while (is_zero(eval_weyl_denominator(mp.rs, pt.q)));
    WeightVec om1(l, 0);
    om1[0] = 1;
    SpectralPoly spoly = spectral_poly(ctx, om1, pt);
    // dQ/dY_marked must be c * mu^{l-2} (mu^2-1)^2
    Poly expect = Poly{Rational(1)};
    for (int i = 0; i < l - 2; ++i) expect = poly_mul(expect, Poly{Rational(0), Rational(1)});
    Poly m2{Rational(-1), Rational(0), Rational(1)};
    expect = poly_mul(expect, poly_mul(m2, m2));
    REQUIRE(poly_deg(spoly.P[1]) == poly_deg(expect));
    Rational scale = spoly.P[1].back() / expect.back();
    CHECK(!is_zero(scale));
    CHECK(spoly.P[1] == poly_scale(expect, scale));
  }
  for (int kbar = 1; kbar <= 3; ++kbar) {
    MarkedPair mp = marked_pair(Family::A, 3, kbar);
    InvariantContext ctx(mp);
    EvalPoint pt;
    pt.root_order = mp.root_order;
    pt.u = Rational(3);
    pt.q.resize(3);
    do {
      for (auto& c : pt.q) c = rnd_coord(rng);
    } while (is_zero(eval_weyl_denominator(mp.rs, pt.q)));
    WeightVec om1(3, 0);
    om1[0] = 1;
    SpectralPoly spoly = spectral_poly(ctx, om1, pt);
    // the defining-representation curve is linear in the marked invariant
    // with derivative (-mu)^{l+1-kbar} up to scale
    REQUIRE(spoly.P.size() == 2);
    Poly d1 = spoly.P[1];
    CHECK(poly_deg(d1) == 4 - kbar);
    for (int i = 0; i < 4 - kbar; ++i) CHECK(is_zero(d1[i]));
  }
}

TEST_CASE("E6 dual pairing via the 27-weight sum") {
  RootSystem e6 = build_root_system(Family::E, 6);
  MatI S = e6_weight_pairing_sum(e6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      CHECK(S(i, j) == 6 * e6.cartan(i, j));
      if (i == j) CHECK(S(i, j) == 12);
    }
}
