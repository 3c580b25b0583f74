#ifndef WM_MATRIX_HPP
#define WM_MATRIX_HPP

// Dense exact linear algebra: Eigen matrices over mpq_class.
// Inversion is plain Gauss-Jordan with first-nonzero pivoting (any nonzero
// pivot is exact), determinant certificates go through modular arithmetic
// first and fall back to fraction-free elimination over the integers.

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "wm/rational.hpp"

namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace wm {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatI = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

Mat mat_identity(Eigen::Index n);

// Exact inverse; throws std::domain_error("singular matrix").
Mat mat_inverse(const Mat& m);

// Exact determinant (Bareiss fraction-free elimination after clearing
// denominators row by row).
Rational mat_det_exact(const Mat& m);

// True iff det(m) != 0. A nonzero determinant modulo any prime certifies
// nonsingularity; when every modular determinant vanishes the question is
// settled by the exact computation. Neither answer is probabilistic.
bool nonzero_det_certificate(const Mat& m);

// Determinant of m modulo p (p an odd prime < 2^62). Returns false in `ok`
// when some denominator vanishes mod p and the reduction is unusable.
std::uint64_t mod_det(const Mat& m, std::uint64_t p, bool& ok);

Mat to_rational(const MatI& m);

}  // namespace wm

#endif
