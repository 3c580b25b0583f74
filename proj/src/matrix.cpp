#include "wm/matrix.hpp"

#include <stdexcept>

namespace wm {

Mat mat_identity(Eigen::Index n) {
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat to_rational(const MatI& m) {
  Mat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

Mat mat_inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::domain_error("singular matrix");
  const Eigen::Index n = m.rows();
  Mat a = m;
  Mat inv = mat_identity(n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    Rational d = a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      Rational f = a(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational mat_det_exact(const Mat& m) {
  if (m.rows() != m.cols()) throw std::domain_error("singular matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row, then run Bareiss over mpz.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer lcm(1);
    for (Eigen::Index j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    scale /= Rational(lcm);
    for (Eigen::Index j = 0; j < n; ++j) {
      Rational v = m(i, j) * Rational(lcm);
      a[i][j] = v.get_num();
    }
  }

  Integer prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return Rational(0);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det = Rational(a[n - 1][n - 1]) * scale;
  if (sign < 0) det = -det;
  return det;
}

namespace {

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

std::uint64_t mpz_mod_u64(const Integer& z, std::uint64_t p) {
  Integer r;
  Integer pz;
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
  return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

}  // namespace

std::uint64_t mod_det(const Mat& m, std::uint64_t p, bool& ok) {
  ok = true;
  const Eigen::Index n = m.rows();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      std::uint64_t den = mpz_mod_u64(m(i, j).get_den(), p);
      if (den == 0) {
        ok = false;
        return 0;
      }
      std::uint64_t num = mpz_mod_u64(m(i, j).get_num(), p);
      a[i][j] = mod_mul(num, mod_inv(den, p), p);
    }
  std::uint64_t det = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = k; r < n; ++r)
      if (a[r][k]) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = p - det;
    }
    det = mod_mul(det, a[k][k], p);
    std::uint64_t inv = mod_inv(a[k][k], p);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (!a[r][k]) continue;
      std::uint64_t f = mod_mul(a[r][k], inv, p);
      for (Eigen::Index j = k; j < n; ++j) {
        std::uint64_t sub = mod_mul(f, a[k][j], p);
        a[r][j] = (a[r][j] >= sub) ? a[r][j] - sub : a[r][j] + p - sub;
      }
    }
  }
  return det % p;
}

bool nonzero_det_certificate(const Mat& m) {
  if (m.rows() != m.cols()) throw std::domain_error("singular matrix");
  if (m.rows() == 0) return true;
  static const std::uint64_t primes[] = {
      4611686018427388039ULL, 4611686018427388073ULL, 4611686018427388081ULL,
      4611686018427388091ULL, 4611686018427388093ULL, 4611686018427388097ULL,
      4611686018427388157ULL, 4611686018427388181ULL,
  };
  for (std::uint64_t p : primes) {
    bool ok = false;
    std::uint64_t d = mod_det(m, p, ok);
    if (ok && d != 0) return true;
  }
  // All modular determinants vanished (or were unusable): decide exactly.
  return !is_zero(mat_det_exact(m));
}

}  // namespace wm
