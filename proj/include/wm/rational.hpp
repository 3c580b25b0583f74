#ifndef WM_RATIONAL_HPP
#define WM_RATIONAL_HPP

// Exact rational scalars. Every quantity in this library is an element of Q;
// there is no floating point anywhere on a numerical code path.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wm {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p/q" or "p/q"; whitespace-free token.
inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// r^e for integer e (negative allowed when r != 0).
inline Rational pow_int(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (is_zero(r)) {
    if (e < 0) throw std::domain_error("0 to negative power");
    return Rational(0);
  }
  Rational base = e > 0 ? r : Rational(1) / r;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
  // base is canonical, so base^n is too
  return out;
}

}  // namespace wm

#endif
