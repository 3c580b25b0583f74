#ifndef WM_PREPOTENTIAL_HPP
#define WM_PREPOTENTIAL_HPP

// Sparse prepotentials F(t_1..t_l, t_{l+1}, e^{t_{l+1}}): polynomial in the
// first l flat coordinates, in e^{t_{l+1}}, and (at low degree) in the bare
// coordinate t_{l+1} itself. Third derivatives, the flat unit/metric search,
// the raised product tensor and WDVV checking all happen here.

#include <iosfwd>
#include <map>
#include <vector>

#include "wm/matrix.hpp"
#include "wm/rational.hpp"

namespace wm {

struct PrepKey {
  std::vector<int> te;  // exponents of t_1..t_l
  int ek = 0;           // power of e^{t_{l+1}}
  int t7p = 0;          // power of the bare t_{l+1}
  auto operator<=>(const PrepKey&) const = default;
};

class Prepotential {
 public:
  Prepotential() : nflat_(0) {}
  explicit Prepotential(int l) : nflat_(l + 1) {}

  int nflat() const { return nflat_; }  // l + 1
  int l() const { return nflat_ - 1; }
  const std::map<PrepKey, Rational>& terms() const { return terms_; }

  void add_term(const PrepKey& k, const Rational& c);

  // Partial derivative in slot a (0-based; a == l differentiates in t_{l+1},
  // acting on e^{k t_{l+1}} as multiplication by k and lowering bare powers).
  Prepotential derivative(int a) const;
  bool is_constant() const;
  Rational constant_value() const;

  // Evaluation at rational t_1..t_l and s = e^{t_{l+1}}. Throws if a bare
  // t_{l+1} power survives (its value is not rational).
  Rational eval(const std::vector<Rational>& t, const Rational& s) const;

 private:
  int nflat_;
  std::map<PrepKey, Rational> terms_;
};

struct TPoint {
  std::vector<Rational> t;  // size l
  Rational s;               // e^{t_{l+1}}
};

// Exact term-wise third partial d^3 F / dt_A dt_B dt_C at the point.
Rational third_derivative(const Prepotential& F, int A, int B, int C, const TPoint& tp);

// Searches the coordinate direction whose derivative has a constant Hessian;
// returns (unit index, eta). Throws std::domain_error("no flat unit
// direction") when absent.
std::pair<int, Mat> find_unit_and_eta(const Prepotential& F);

// Max |numerator| statistic over all WDVV brackets at the point; exact zero
// iff F satisfies WDVV there. Throws on singular eta.
Rational wdvv_residual(const Prepotential& F, const Mat& eta, const TPoint& tp);

// Symmetric rank-3 cube with two raised slots: c^{AB}_C.
struct Tensor3 {
  int n = 0;
  std::vector<Rational> v;
  explicit Tensor3(int n_ = 0) : n(n_), v(static_cast<size_t>(n_) * n_ * n_, Rational(0)) {}
  Rational& at(int a, int b, int c) { return v[(static_cast<size_t>(a) * n + b) * n + c]; }
  const Rational& at(int a, int b, int c) const {
    return v[(static_cast<size_t>(a) * n + b) * n + c];
  }
};

Tensor3 c_tensor_upper(const Prepotential& F, const Mat& eta, const TPoint& tp);

// File format: header "prepotential <family> <rank>", body lines
// "e1 .. el | k : p/q" or "e1 .. el | k m : p/q" (m = bare t_{l+1} power),
// '#' comments, whitespace-insensitive.
Prepotential parse_prepotential(std::istream& in, std::string& family, int& rank);
void write_prepotential(std::ostream& out, const Prepotential& F, const std::string& family,
                        int rank);

}  // namespace wm

#endif
