#ifndef WM_LAURENT_HPP
#define WM_LAURENT_HPP

// Sparse Laurent polynomials over Q in the torus variables q_a = e^{x_a}.
// Exponent vectors are stored in a std::map with lexicographic ordering, so
// iteration order (and anything serialized from it) is deterministic.

#include <cstdint>
#include <map>
#include <vector>

#include "wm/matrix.hpp"
#include "wm/rational.hpp"

namespace wm {

using ExpVec = std::vector<std::int32_t>;

class Laurent {
 public:
  Laurent() : nvars_(0) {}
  explicit Laurent(int nvars) : nvars_(nvars) {}
  static Laurent monomial(int nvars, const ExpVec& e, const Rational& c);
  static Laurent constant(int nvars, const Rational& c);

  int nvars() const { return nvars_; }
  size_t nterms() const { return terms_.size(); }
  const std::map<ExpVec, Rational>& terms() const { return terms_; }

  void add_term(const ExpVec& e, const Rational& c);

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(const Rational& c) const;
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // p(k*x): multiplies every exponent vector by k.
  Laurent scale_args(int k) const;
  // d/dx_a, acting on a term as multiplication by its a-th exponent.
  Laurent derivative(int a) const;

  // point must have nvars nonzero entries; throws std::domain_error
  // ("nonzero evaluation point required") otherwise.
  Rational eval(const std::vector<Rational>& point) const;
  void eval_with_gradient(const std::vector<Rational>& point, Rational& value,
                          std::vector<Rational>& grad) const;
  // Also fills hess(a,b) = d^2 p / dx_a dx_b.
  void eval_with_hessian(const std::vector<Rational>& point, Rational& value,
                         std::vector<Rational>& grad, Mat& hess) const;

 private:
  int nvars_;
  std::map<ExpVec, Rational> terms_;
};

}  // namespace wm

#endif
