#include "wm/unirational.hpp"

#include <algorithm>
#include <stdexcept>

namespace wm {

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_trim(Poly p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(r));
}

Poly poly_scale(const Poly& a, const Rational& c) {
  if (is_zero(c)) return {};
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rational(static_cast<long>(i));
  return poly_trim(std::move(r));
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  r = a;
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  const Rational& lc = b.back();
  while (poly_deg(r) >= poly_deg(b)) {
    int shift = poly_deg(r) - poly_deg(b);
    Rational f = r.back() / lc;
    q[shift] += f;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    r = poly_trim(std::move(r));
  }
  q = poly_trim(std::move(q));
}

namespace {

using ZPoly = std::vector<Integer>;

// Primitive integer image of a rational polynomial.
ZPoly primitive_z(const Poly& p) {
  Integer lcm(1);
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z(p.size());
  Integer content(0);
  for (size_t i = 0; i < p.size(); ++i) {
    Rational v = p[i] * Rational(lcm);
    z[i] = v.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[i].get_mpz_t());
  }
  if (content > 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return z;
}

void make_primitive(ZPoly& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
  if (z.empty()) return;
  Integer content(0);
  for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero), primitive-reduced at each step to
// keep coefficients small.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const size_t db = b.size() - 1;
  const Integer& lcb = b.back();
  while (a.size() >= b.size()) {
    if (a.back() == 0) {
      a.pop_back();
      continue;
    }
    Integer f = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i + 1 < a.size(); ++i) a[i] *= lcb;
    for (size_t i = 0; i < db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    make_primitive(a);
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  if (a.empty() || b.empty()) {
    Poly g = a.empty() ? std::move(b) : std::move(a);
    if (!g.empty()) {
      Rational lc = g.back();
      for (auto& c : g) c /= lc;
    }
    return g;
  }
  ZPoly za = primitive_z(a), zb = primitive_z(b);
  if (za.size() < zb.size()) std::swap(za, zb);
  while (!zb.empty()) {
    ZPoly r = pseudo_rem(za, zb);
    za = std::move(zb);
    zb = std::move(r);
  }
  Poly g(za.size());
  const Integer& lc = za.back();
  for (size_t i = 0; i < za.size(); ++i) {
    g[i] = Rational(za[i]) / Rational(lc);
  }
  return g;
}

namespace {

// Monic g = gcd(a,b) together with s, t such that s*a + t*b = g.
Poly poly_ext_gcd(Poly a, Poly b, Poly& s, Poly& t) {
  Poly s0{Rational(1)}, s1{}, t0{}, t1{Rational(1)};
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) {
    s = {};
    t = {};
    return a;
  }
  Rational lc = a.back();
  for (auto& c : a) c /= lc;
  s = poly_scale(s0, Rational(1) / lc);
  t = poly_scale(t0, Rational(1) / lc);
  return a;
}

}  // namespace

Poly poly_taylor_shift(const Poly& p, const Rational& c) {
  Poly b = p;
  const int n = poly_deg(b);
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) b[j] += c * b[j + 1];
  return b;
}

int poly_deflate(const Poly& p, const Rational& root, Poly& out) {
  out = poly_trim(p);
  if (out.empty()) return 0;
  int count = 0;
  for (;;) {
    if (!is_zero(poly_eval(out, root))) break;
    // synthetic division by (mu - root)
    Poly q(out.size() - 1);
    Rational carry(0);
    for (size_t i = out.size(); i-- > 1;) {
      carry = out[i] + carry * root;
      q[i - 1] = carry;
      carry = q[i - 1];
    }
    out = poly_trim(std::move(q));
    ++count;
    if (out.empty()) break;
  }
  return count;
}

UniRat::UniRat(Poly num, Poly den) : num_(poly_trim(std::move(num))), den_(poly_trim(std::move(den))) {
  if (den_.empty()) throw std::domain_error("zero denominator");
  normalize();
}

void UniRat::normalize() {
  if (num_.empty()) {
    den_ = {Rational(1)};
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (poly_deg(g) > 0) {
    Poly q, r;
    poly_divmod(num_, g, q, r);
    num_ = q;
    poly_divmod(den_, g, q, r);
    den_ = q;
  }
  Rational lc = den_.back();
  for (auto& c : den_) c /= lc;
  for (auto& c : num_) c /= lc;
}

UniRat UniRat::operator+(const UniRat& o) const {
  return UniRat(poly_add(poly_mul(num_, o.den_), poly_mul(o.num_, den_)), poly_mul(den_, o.den_));
}

UniRat UniRat::operator-(const UniRat& o) const {
  return UniRat(poly_sub(poly_mul(num_, o.den_), poly_mul(o.num_, den_)), poly_mul(den_, o.den_));
}

UniRat UniRat::operator*(const UniRat& o) const {
  return UniRat(poly_mul(num_, o.num_), poly_mul(den_, o.den_));
}

UniRat UniRat::operator/(const UniRat& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return UniRat(poly_mul(num_, o.den_), poly_mul(den_, o.num_));
}

UniRat UniRat::operator-() const {
  UniRat r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Rational UniRat::eval(const Rational& x) const {
  Rational d = poly_eval(den_, x);
  if (wm::is_zero(d)) throw std::domain_error("evaluation at a pole");
  return poly_eval(num_, x) / d;
}

int pole_order_at(const UniRat& f, const Rational& pole) {
  Poly rest;
  return poly_deflate(f.den(), pole, rest);
}

int order_at_infinity(const UniRat& f) {
  if (f.is_zero()) return 1 << 20;
  return poly_deg(f.den()) - poly_deg(f.num());
}

Rational residue_at(const UniRat& f, const Rational& pole, int mult) {
  if (mult <= 0) throw std::domain_error("pole order exceeded");
  Poly d0;
  int e = poly_deflate(f.den(), pole, d0);
  if (e > mult) throw std::domain_error("pole order exceeded");
  if (e == 0) return Rational(0);

  // h(y) := (mu-pole)^mult f expanded around mu = pole + y; the residue is the
  // y^{mult-1} series coefficient of h.
  Poly shifted_num = f.num();
  for (int i = 0; i < mult - e; ++i) shifted_num = poly_mul(shifted_num, Poly{-pole, Rational(1)});
  shifted_num = poly_taylor_shift(shifted_num, pole);
  Poly shifted_den = poly_taylor_shift(d0, pole);

  const int order = mult - 1;
  std::vector<Rational> series(order + 1, Rational(0));
  const Rational inv0 = Rational(1) / shifted_den[0];
  for (int k = 0; k <= order; ++k) {
    Rational acc = (k < static_cast<int>(shifted_num.size())) ? shifted_num[k] : Rational(0);
    for (int j = 0; j < k; ++j) {
      if (k - j < static_cast<int>(shifted_den.size())) acc -= series[j] * shifted_den[k - j];
    }
    series[k] = acc * inv0;
  }
  return series[order];
}

Rational residue_at_infinity(const UniRat& f) {
  if (f.is_zero()) return Rational(0);
  Poly q, r;
  poly_divmod(f.num(), f.den(), q, r);
  const int d = poly_deg(f.den());
  if (r.empty() || poly_deg(r) != d - 1) return Rational(0);
  return -r.back() / f.den().back();
}

Rational residue_sum_over_cofactor_roots(const UniRat& f, const std::vector<Rational>& known_poles) {
  // Split the denominator as Dk * Dc, where Dk carries the known rational
  // poles. Partial fractions through Bezout put f's Dc-part in the form W/Dc,
  // and the sum of its residues over every root of Dc is a pure coefficient
  // read-off (the trace formula).
  Poly dc = f.den();
  Poly dk{Rational(1)};
  for (const auto& p : known_poles) {
    Poly rest;
    int e = poly_deflate(dc, p, rest);
    for (int i = 0; i < e; ++i) dk = poly_mul(dk, Poly{-p, Rational(1)});
    dc = rest;
  }
  if (poly_deg(dc) <= 0) return Rational(0);
  Poly s, t;
  Poly g = poly_ext_gcd(dk, dc, s, t);
  if (poly_deg(g) != 0) throw std::domain_error("known poles not coprime to cofactor");
  // 1/(dk*dc) = s/dc + t/dk, hence the Dc-part of f is (num*s mod dc)/dc,
  // and the sum of its residues over all roots of dc is minus its residue at
  // infinity.
  Poly w = poly_mul(f.num(), s);
  Poly q, r;
  poly_divmod(w, dc, q, r);
  return -residue_at_infinity(UniRat(r, dc));
}

}  // namespace wm
