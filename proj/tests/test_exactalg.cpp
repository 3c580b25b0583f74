#include <doctest.h>

#include "wm/laurent.hpp"
#include "wm/matrix.hpp"
#include "wm/unirational.hpp"
#include "wm/util.hpp"

using namespace wm;

namespace {

// Independent residue oracle: symbolic differentiation of the cofactor
// (quotient rule all the way), evaluated at the pole. Deliberately avoids the
// Taylor-shift path used by residue_at.
Rational residue_oracle(const UniRat& f, const Rational& pole, int mult) {
  Poly shifted = f.num();
  for (int i = 0; i < mult; ++i) shifted = poly_mul(shifted, Poly{-pole, Rational(1)});
  UniRat g(shifted, f.den());
  Rational fact(1);
  for (int i = 1; i < mult; ++i) {
    // quotient rule
    Poly n = poly_sub(poly_mul(poly_derivative(g.num()), g.den()),
                      poly_mul(g.num(), poly_derivative(g.den())));
    g = UniRat(n, poly_mul(g.den(), g.den()));
    fact *= i;
  }
  return g.eval(pole) / fact;
}

Rational rnd_rat(Rng& rng) {
  long n = static_cast<long>(rng.below(19)) - 9;
  long d = 1 + static_cast<long>(rng.below(7));
  return rat(n, d);
}

}  // namespace

TEST_CASE("residue_at on stated examples") {
  UniRat inv_mu(Poly{Rational(1)}, Poly{Rational(0), Rational(1)});
  CHECK(residue_at(inv_mu, 0, 1) == 1);

  UniRat f2(Poly{Rational(2), Rational(3)}, Poly{Rational(0), Rational(0), Rational(1)});
  CHECK(residue_at(f2, 0, 2) == 3);

  Poly den = poly_mul(Poly{Rational(-2), Rational(1)}, Poly{Rational(-5), Rational(1)});
  UniRat f3(Poly{Rational(1)}, den);
  CHECK(residue_at(f3, 2, 1) == rat(-1, 3));
  CHECK(residue_at(f3, 5, 1) == rat(1, 3));
  CHECK(residue_at(f3, 2, 1) + residue_at(f3, 5, 1) + residue_at_infinity(f3) == 0);

  // mult below the true pole order must be refused
  CHECK_THROWS_WITH(residue_at(f2, 0, 1), "pole order exceeded");
  // mult above the true order is a valid upper bound
  CHECK(residue_at(f2, 0, 5) == 3);
  // regular point: zero residue
  CHECK(residue_at(f3, 7, 2) == 0);
}

TEST_CASE("residue_at_infinity basics") {
  UniRat inv_mu(Poly{Rational(1)}, Poly{Rational(0), Rational(1)});
  CHECK(residue_at_infinity(inv_mu) == -1);
  UniRat mu(Poly{Rational(0), Rational(1)}, Poly{Rational(1)});
  CHECK(residue_at_infinity(mu) == 0);
  CHECK(residue_at_infinity(UniRat::constant(rat(7, 3))) == 0);
}

TEST_CASE("global residue theorem on random rational-pole functions") {
  Rng rng(20240913);
  for (int trial = 0; trial < 60; ++trial) {
    int npoles = 1 + static_cast<int>(rng.below(6));
    std::vector<Rational> poles;
    std::vector<int> mult;
    Poly den{Rational(1)};
    for (int i = 0; i < npoles; ++i) {
      Rational p;
      bool fresh = false;
      while (!fresh) {
        p = rnd_rat(rng);
        fresh = true;
        for (const auto& q : poles)
          if (q == p) fresh = false;
      }
      int m = 1 + static_cast<int>(rng.below(3));
      poles.push_back(p);
      mult.push_back(m);
      for (int r = 0; r < m; ++r) den = poly_mul(den, Poly{-p, Rational(1)});
    }
    Poly num;
    int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(den.size() + 1)));
    for (int i = 0; i <= deg; ++i) num.push_back(rnd_rat(rng));
    num = poly_trim(std::move(num));
    if (num.empty()) num = Poly{Rational(1)};
    UniRat f(num, den);

    Rational total(0);
    for (size_t i = 0; i < poles.size(); ++i) {
      Rational r = residue_at(f, poles[i], mult[i]);
      CHECK(r == residue_oracle(f, poles[i], mult[i]));
      total += r;
    }
    total += residue_at_infinity(f);
    CHECK(total == 0);
  }
}

TEST_CASE("trace-formula residue sum over an irreducible cofactor") {
  // f = 1/((mu-1)(mu^2-2)): residues at +-sqrt(2) are irrational but their
  // sum is rational and the residue theorem closes the contour.
  Poly den =
      poly_mul(Poly{Rational(-1), Rational(1)}, Poly{Rational(-2), Rational(0), Rational(1)});
  UniRat f(Poly{Rational(1)}, den);
  Rational at1 = residue_at(f, 1, 1);
  Rational cof = residue_sum_over_cofactor_roots(f, {Rational(1)});
  CHECK(at1 == -1);  // 1/(1-2)
  CHECK(cof == 1);
  CHECK(at1 + cof + residue_at_infinity(f) == 0);

  Rng rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    Poly d{rnd_rat(rng), rnd_rat(rng), rnd_rat(rng), Rational(1)};  // random cubic
    Rational p = rnd_rat(rng);
    Poly full = poly_mul(d, Poly{-p, Rational(1)});
    Poly num{rnd_rat(rng), rnd_rat(rng), Rational(1)};
    UniRat f2(num, full);
    if (pole_order_at(f2, p) != 1) continue;  // p accidentally a root of d
    Rational sum = residue_at(f2, p, 1) + residue_sum_over_cofactor_roots(f2, {p}) +
                   residue_at_infinity(f2);
    CHECK(sum == 0);
  }
}

TEST_CASE("eval_with_gradient on stated examples") {
  Laurent p(2);
  p.add_term({2, -1}, Rational(1));
  Rational v;
  std::vector<Rational> g;
  p.eval_with_gradient({Rational(2), Rational(3)}, v, g);
  CHECK(v == rat(4, 3));
  CHECK(g[0] == rat(8, 3));
  CHECK(g[1] == rat(-4, 3));

  Laurent p2(1);
  p2.add_term({1}, Rational(1));
  p2.add_term({-1}, Rational(1));
  p2.eval_with_gradient({Rational(2)}, v, g);
  CHECK(v == rat(5, 2));
  CHECK(g[0] == rat(3, 2));

  Laurent p3 = Laurent::constant(3, Rational(7));
  p3.eval_with_gradient({Rational(1), Rational(2), Rational(3)}, v, g);
  CHECK(v == 7);
  for (const auto& c : g) CHECK(c == 0);

  CHECK_THROWS_WITH((void)p.eval({Rational(0), Rational(1)}),
                    "nonzero evaluation point required");
}

TEST_CASE("gradient agrees with symbolic differentiation term by term") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    int nv = 1 + static_cast<int>(rng.below(4));
    Laurent p(nv);
    for (int t = 0; t < 8; ++t) {
      ExpVec e(nv);
      for (auto& x : e) x = static_cast<int>(rng.below(9)) - 4;
      p.add_term(e, rnd_rat(rng));
    }
    std::vector<Rational> pt(nv);
    for (auto& c : pt) {
      do {
        c = rnd_rat(rng);
      } while (is_zero(c));
    }
    Rational v;
    std::vector<Rational> g;
    p.eval_with_gradient(pt, v, g);
    CHECK(v == p.eval(pt));
    for (int a = 0; a < nv; ++a) CHECK(g[a] == p.derivative(a).eval(pt));

    Rational v2;
    Mat h;
    std::vector<Rational> g2;
    p.eval_with_hessian(pt, v2, g2, h);
    CHECK(v2 == v);
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nv; ++b) CHECK(h(a, b) == p.derivative(a).derivative(b).eval(pt));
  }
}

TEST_CASE("mat_inverse on stated examples") {
  CHECK(mat_inverse(mat_identity(4)) == mat_identity(4));
  Mat m(2, 2);
  m << Rational(2), Rational(1), Rational(1), Rational(1);
  Mat inv(2, 2);
  inv << Rational(1), Rational(-1), Rational(-1), Rational(2);
  CHECK(mat_inverse(m) == inv);
  Mat sing(2, 2);
  sing << Rational(1), Rational(1), Rational(1), Rational(1);
  CHECK_THROWS_WITH((void)mat_inverse(sing), "singular matrix");
}

TEST_CASE("random matrix inverse round trip") {
  Rng rng(7);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rnd_rat(rng);
    Rational det = mat_det_exact(m);
    if (is_zero(det)) continue;
    CHECK(mat_inverse(m) * m == mat_identity(n));
  }
}

TEST_CASE("nonzero_det_certificate") {
  CHECK(nonzero_det_certificate(mat_identity(5)));
  Mat zrow = mat_identity(4);
  for (int j = 0; j < 4; ++j) zrow(2, j) = 0;
  CHECK_FALSE(nonzero_det_certificate(zrow));

  Mat hilbert(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) hilbert(i, j) = rat(1, i + j + 1);
  CHECK(nonzero_det_certificate(hilbert));

  // agreement with the exact determinant, including engineered singular cases
  Rng rng(31337);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng.below(11));  // up to 12x12
    Mat m(n, n);
    if (trial % 3 == 0) {
      int r = std::max(1, n - 1 - static_cast<int>(rng.below(2)));
      Mat a(n, r), b(r, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) a(i, j) = rnd_rat(rng);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = rnd_rat(rng);
      m = a * b;
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rnd_rat(rng);
    }
    CHECK(nonzero_det_certificate(m) == !is_zero(mat_det_exact(m)));
  }
}

TEST_CASE("laurent scale_args and products") {
  Laurent p(2);
  p.add_term({1, 0}, Rational(1));
  p.add_term({0, 1}, Rational(2));
  Laurent d = p.scale_args(2);
  CHECK(d.terms().at({2, 0}) == 1);
  CHECK(d.terms().at({0, 2}) == 2);
  Laurent prod = p * p;
  CHECK(prod.terms().at({2, 0}) == 1);
  CHECK(prod.terms().at({1, 1}) == 4);
  CHECK(prod.terms().at({0, 2}) == 4);
}
