#ifndef WM_UNIRATIONAL_HPP
#define WM_UNIRATIONAL_HPP

// Dense univariate polynomials and reduced rational functions over Q in one
// variable mu. Residues are extracted by exact Taylor shift of the pole-free
// cofactor, never by symbolic differentiation of quotients.

#include <vector>

#include "wm/rational.hpp"

namespace wm {

// Coefficient list, p[i] multiplies mu^i. The zero polynomial is {}.
using Poly = std::vector<Rational>;

int poly_deg(const Poly& p);  // -1 for the zero polynomial
Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& c);
Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_derivative(const Poly& p);
// Division with remainder: a = q*b + r, deg r < deg b.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_gcd(Poly a, Poly b);  // monic gcd
// Coefficients of p(mu + c) (exact Taylor shift).
Poly poly_taylor_shift(const Poly& p, const Rational& c);
// Number of times (mu - root) divides p; deflated quotient in `out`.
int poly_deflate(const Poly& p, const Rational& root, Poly& out);

class UniRat {
 public:
  UniRat() : num_{}, den_{Rational(1)} {}
  UniRat(Poly num, Poly den);
  static UniRat from_poly(Poly p) { return UniRat(std::move(p), {Rational(1)}); }
  static UniRat constant(const Rational& c) { return from_poly(c == 0 ? Poly{} : Poly{c}); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.empty(); }

  UniRat operator+(const UniRat& o) const;
  UniRat operator-(const UniRat& o) const;
  UniRat operator*(const UniRat& o) const;
  UniRat operator/(const UniRat& o) const;
  UniRat operator-() const;

  Rational eval(const Rational& x) const;  // throws on a pole

 private:
  void normalize();
  Poly num_, den_;
};

// Coefficient of (mu - pole)^{-1} in the local expansion of f, assuming
// (mu - pole)^mult f is regular there. Throws std::domain_error
// ("pole order exceeded") when the actual pole order is larger than mult.
Rational residue_at(const UniRat& f, const Rational& pole, int mult);

// Minus the mu^{-1} coefficient of the expansion at infinity, so that the sum
// of residue_at over all finite poles plus residue_at_infinity vanishes.
Rational residue_at_infinity(const UniRat& f);

// Pole order of f at a point (0 when regular, counting zeros as 0).
int pole_order_at(const UniRat& f, const Rational& pole);
// Order of vanishing at infinity: deg den - deg num (negative for a pole).
int order_at_infinity(const UniRat& f);

// Sum of residues of f over the roots of the monic square-free factor d of
// f's denominator that remains after removing the listed rational poles.
// Computed by the trace formula (no root isolation). Used to validate
// integrand assembly through the global residue theorem.
Rational residue_sum_over_cofactor_roots(const UniRat& f, const std::vector<Rational>& known_poles);

}  // namespace wm

#endif
