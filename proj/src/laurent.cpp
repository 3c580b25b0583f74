#include "wm/laurent.hpp"

#include <stdexcept>

namespace wm {

Laurent Laurent::monomial(int nvars, const ExpVec& e, const Rational& c) {
  Laurent p(nvars);
  p.add_term(e, c);
  return p;
}

Laurent Laurent::constant(int nvars, const Rational& c) {
  return monomial(nvars, ExpVec(nvars, 0), c);
}

void Laurent::add_term(const ExpVec& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
  if (is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r(nvars_);
  ExpVec e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Laurent Laurent::operator*(const Rational& c) const {
  Laurent r(nvars_);
  if (is_zero(c)) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Laurent Laurent::operator-() const { return *this * Rational(-1); }

Laurent Laurent::scale_args(int k) const {
  Laurent r(nvars_);
  ExpVec e(nvars_);
  for (const auto& [ea, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) e[i] = ea[i] * k;
    r.add_term(e, c);
  }
  return r;
}

Laurent Laurent::derivative(int a) const {
  Laurent r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[a] == 0) continue;
    r.add_term(e, c * Rational(e[a]));
  }
  return r;
}

namespace {

// Per-variable power tables covering the exponent range of the polynomial.
struct PowTable {
  std::vector<std::vector<Rational>> pows;  // pows[a][e - lo[a]] = point[a]^e
  std::vector<int> lo;

  PowTable(const Laurent& p, const std::vector<Rational>& point) {
    const int n = p.nvars();
    std::vector<int> hi(n, 0);
    lo.assign(n, 0);
    for (const auto& [e, c] : p.terms())
      for (int a = 0; a < n; ++a) {
        lo[a] = std::min(lo[a], static_cast<int>(e[a]));
        hi[a] = std::max(hi[a], static_cast<int>(e[a]));
      }
    pows.resize(n);
    for (int a = 0; a < n; ++a) {
      pows[a].resize(hi[a] - lo[a] + 1);
      for (int e = lo[a]; e <= hi[a]; ++e) pows[a][e - lo[a]] = pow_int(point[a], e);
    }
  }

  Rational term_value(const ExpVec& e) const {
    Rational v(1);
    for (size_t a = 0; a < e.size(); ++a)
      if (e[a] != 0) v *= pows[a][e[a] - lo[a]];
    return v;
  }
};

void check_point(const Laurent& p, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != p.nvars()) throw std::invalid_argument("point arity mismatch");
  for (const auto& c : point)
    if (is_zero(c)) throw std::domain_error("nonzero evaluation point required");
}

}  // namespace

Rational Laurent::eval(const std::vector<Rational>& point) const {
  check_point(*this, point);
  PowTable tab(*this, point);
  Rational v(0);
  for (const auto& [e, c] : terms_) v += c * tab.term_value(e);
  return v;
}

void Laurent::eval_with_gradient(const std::vector<Rational>& point, Rational& value,
                                 std::vector<Rational>& grad) const {
  check_point(*this, point);
  PowTable tab(*this, point);
  value = 0;
  grad.assign(nvars_, Rational(0));
  for (const auto& [e, c] : terms_) {
    Rational t = c * tab.term_value(e);
    value += t;
    for (int a = 0; a < nvars_; ++a)
      if (e[a] != 0) grad[a] += t * Rational(e[a]);
  }
}

void Laurent::eval_with_hessian(const std::vector<Rational>& point, Rational& value,
                                std::vector<Rational>& grad, Mat& hess) const {
  check_point(*this, point);
  PowTable tab(*this, point);
  value = 0;
  grad.assign(nvars_, Rational(0));
  hess = Mat::Zero(nvars_, nvars_);
  for (const auto& [e, c] : terms_) {
    Rational t = c * tab.term_value(e);
    value += t;
    for (int a = 0; a < nvars_; ++a) {
      if (e[a] == 0) continue;
      grad[a] += t * Rational(e[a]);
      for (int b = a; b < nvars_; ++b) {
        if (e[b] == 0) continue;
        hess(a, b) += t * Rational(static_cast<long>(e[a]) * e[b]);
      }
    }
  }
  for (int a = 0; a < nvars_; ++a)
    for (int b = 0; b < a; ++b) hess(a, b) = hess(b, a);
}

}  // namespace wm
