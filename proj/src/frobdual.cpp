#include "wm/frobdual.hpp"

#include <chrono>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "wm/util.hpp"

namespace wm {

AdmissibleSet admissible_exponents(const MarkedPair& mp) {
  const int l = mp.rs.rank;
  std::vector<Rational> d = mp.d;
  d.push_back(Rational(0));  // d_{l+1} = 0
  AdmissibleSet out;
  out.D = d[0] + d[0] - d[0];
  for (int a = 0; a <= l; ++a)
    for (int b = 0; b <= l; ++b)
      for (int c = 0; c <= l; ++c) {
        Rational v = d[a] + d[b] - d[c];
        if (v > out.D) out.D = v;
      }
  // lexicographic enumeration of {n >= 0 : sum n_i d_i <= D}
  std::vector<int> n(l, 0);
  std::function<void(int, Rational)> rec = [&](int i, Rational acc) {
    if (i == l) {
      out.s_adm.push_back(n);
      return;
    }
    n[i] = 0;
    Rational w = acc;
    while (w <= out.D) {
      rec(i + 1, w);
      n[i] += 1;
      w += mp.d[i];
    }
    n[i] = 0;
  };
  rec(0, Rational(0));
  return out;
}

bool vandermonde_certificate(const InvariantContext& ctx, const AdmissibleSet& adm,
                             const std::vector<EvalPoint>& points) {
  const int l = ctx.mp().rs.rank;
  const size_t n = adm.s_adm.size();
  if (points.size() != n) throw std::invalid_argument("need |S_adm| points");
  std::vector<int> maxexp(l, 0);
  for (const auto& e : adm.s_adm)
    for (int i = 0; i < l; ++i) maxexp[i] = std::max(maxexp[i], e[i]);

  Mat V(n, n);
  for (size_t m = 0; m < n; ++m) {
    std::vector<std::vector<Rational>> pows(l);
    for (int i = 0; i < l; ++i) {
      pows[i].resize(maxexp[i] + 1);
      pows[i][0] = 1;
      Rational y = ctx.Y()[i].eval(points[m].q);
      for (int e = 1; e <= maxexp[i]; ++e) pows[i][e] = pows[i][e - 1] * y;
    }
    for (size_t r = 0; r < n; ++r) {
      Rational v(1);
      for (int i = 0; i < l; ++i)
        if (adm.s_adm[r][i] != 0) v *= pows[i][adm.s_adm[r][i]];
      V(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(m)) = v;
    }
  }
  return nonzero_det_certificate(V);
}

namespace {

const long kPrimePool[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                           43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
constexpr int kPrimeCount = static_cast<int>(sizeof(kPrimePool) / sizeof(long));

Rational draw_coord(Rng& rng) {
  long p = kPrimePool[rng.below(kPrimeCount)];
  long q = kPrimePool[rng.below(kPrimeCount)];
  if (p == q) return Rational(p);
  return rat(p, q);
}

bool point_admissible(const InvariantContext& ctx, const EvalPoint& pt, const FlatMap* fm) {
  if (is_zero(eval_weyl_denominator(ctx.mp().rs, pt.q))) return false;
  if (fm) {
    try {
      FlatChart fc = flat_chart(ctx, *fm, pt);
      (void)mat_inverse(fc.J);
    } catch (const std::domain_error&) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<EvalPoint> sample_points(const InvariantContext& ctx, int count, std::uint64_t seed,
                                     const FlatMap* fm, int retry_budget) {
  const int l = ctx.mp().rs.rank;
  const int N = ctx.mp().root_order;
  Rng rng(seed ^ 0x77656c796d697272ULL);
  AdmissibleSet adm;
  bool need_certificate = false;
  if (count < 0) {  // sentinel: a full certified batch
    adm = admissible_exponents(ctx.mp());
    count = static_cast<int>(adm.s_adm.size());
    need_certificate = true;
  }

  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::vector<EvalPoint> pts;
    pts.reserve(count);
    int guard = 0;
    while (static_cast<int>(pts.size()) < count) {
      if (++guard > 1000 * count) break;
      EvalPoint pt;
      pt.root_order = N;
      pt.q.resize(l);
      for (int a = 0; a < l; ++a) pt.q[a] = draw_coord(rng);
      pt.u = draw_coord(rng);
      if (point_admissible(ctx, pt, fm)) pts.push_back(std::move(pt));
    }
    if (static_cast<int>(pts.size()) < count) continue;
    if (!need_certificate) return pts;
    if (vandermonde_certificate(ctx, adm, pts)) return pts;
  }
  throw std::runtime_error("retry budget exhausted");
}

Mat dual_pairing_gram(const MarkedPair& mp) {
  const int l = mp.rs.rank;
  Mat g = Mat::Zero(l + 1, l + 1);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) g(i, j) = -Rational(mp.rs.cartan(i, j));
  g(l, l) = Rational(1) / (4 * mp.dhat);
  return g;
}

Mat g_upper(const InvariantContext& ctx, const EvalPoint& pt) {
  ExtendedJacobian ext = extended_jacobian(ctx, pt);
  Mat B = mat_inverse(dual_pairing_gram(ctx.mp()));
  return ext.J * B * ext.J.transpose();
}

Tensor3 ell_gw(const InvariantContext& ctx, const EvalPoint& pt) {
  const MarkedPair& mp = ctx.mp();
  const int n = mp.rs.rank + 1;
  ExtendedJacobian ext = extended_jacobian(ctx, pt);
  Mat Jinv;
  try {
    Jinv = mat_inverse(ext.J);
  } catch (const std::domain_error&) {
    throw std::domain_error("degenerate point");
  }
  GwContext gctx = GwContext::one_torus(mp);
  Tensor3 F3 = gw_third_tensor(gctx, torus_point_from_q(mp.rs, pt.q));
  Mat B = mat_inverse(dual_pairing_gram(mp));
  Mat P = ext.J * B;

  Tensor3 out(n);
  // stage contractions: T1(i,j,eps), then beta, then alpha
  std::vector<Rational> T1(static_cast<size_t>(n) * n * n, Rational(0));
  auto at1 = [n, &T1](int i, int j, int e) -> Rational& {
    return T1[(static_cast<size_t>(i) * n + j) * n + e];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int e = 0; e < n; ++e) {
        Rational acc(0);
        for (int k = 0; k < n; ++k) {
          const Rational& f = F3.at(i, j, k);
          if (!is_zero(f)) acc += f * Jinv(k, e);
        }
        at1(i, j, e) = acc;
      }
  std::vector<Rational> T2(static_cast<size_t>(n) * n * n, Rational(0));
  auto at2 = [n, &T2](int i, int b, int e) -> Rational& {
    return T2[(static_cast<size_t>(i) * n + b) * n + e];
  };
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e) {
        Rational acc(0);
        for (int j = 0; j < n; ++j) {
          const Rational& t = at1(i, j, e);
          if (!is_zero(t)) acc += t * P(b, j);
        }
        at2(i, b, e) = acc;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e) {
        Rational acc(0);
        for (int i = 0; i < n; ++i) {
          const Rational& t = at2(i, b, e);
          if (!is_zero(t)) acc += P(a, i) * t;
        }
        out.at(a, b, e) = acc;
      }
  return out;
}

Tensor3 ell_aw(const InvariantContext& ctx, const EvalPoint& pt, const Prepotential& F,
               const Mat& eta_aw, const FlatMap& fm) {
  const int n = ctx.mp().rs.rank + 1;
  ExtendedJacobian ext = extended_jacobian(ctx, pt);
  FlatChart fc = flat_chart(ctx, fm, pt);
  Mat Jtx_inv, Jyx_inv;
  try {
    Jtx_inv = mat_inverse(fc.J);
    Jyx_inv = mat_inverse(ext.J);
  } catch (const std::domain_error&) {
    throw std::domain_error("degenerate point");
  }
  Mat dydt = ext.J * Jtx_inv;   // (alpha, L)
  Mat dtdy = fc.J * Jyx_inv;    // (N, eps)
  TPoint tp{fc.t, fc.s};
  Tensor3 c = c_tensor_upper(F, eta_aw, tp);

  Tensor3 out(n);
  std::vector<Rational> T1(static_cast<size_t>(n) * n * n, Rational(0));
  auto at1 = [n, &T1](int L, int M, int e) -> Rational& {
    return T1[(static_cast<size_t>(L) * n + M) * n + e];
  };
  for (int L = 0; L < n; ++L)
    for (int M = 0; M < n; ++M)
      for (int e = 0; e < n; ++e) {
        Rational acc(0);
        for (int N = 0; N < n; ++N) {
          const Rational& v = c.at(L, M, N);
          if (!is_zero(v)) acc += v * dtdy(N, e);
        }
        at1(L, M, e) = acc;
      }
  std::vector<Rational> T2(static_cast<size_t>(n) * n * n, Rational(0));
  auto at2 = [n, &T2](int L, int b, int e) -> Rational& {
    return T2[(static_cast<size_t>(L) * n + b) * n + e];
  };
  for (int L = 0; L < n; ++L)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e) {
        Rational acc(0);
        for (int M = 0; M < n; ++M) {
          const Rational& t = at1(L, M, e);
          if (!is_zero(t)) acc += t * dydt(b, M);
        }
        at2(L, b, e) = acc;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e) {
        Rational acc(0);
        for (int L = 0; L < n; ++L) {
          const Rational& t = at2(L, b, e);
          if (!is_zero(t)) acc += dydt(a, L) * t;
        }
        out.at(a, b, e) = acc;
      }
  return out;
}

DualityReport verify_duality(const MarkedPair& mp, const Prepotential* F, const FlatMap* fm,
                             std::uint64_t seed, int threads) {
  if (!F || !fm) throw std::invalid_argument("prepotential data required");
  auto t0 = std::chrono::steady_clock::now();

  InvariantContext ctx(mp, fm->uses_characters);
  AdmissibleSet adm = admissible_exponents(mp);

  DualityReport rep;
  rep.family = family_name(mp.rs.family) + std::to_string(mp.rs.rank);
  rep.rank = mp.rs.rank;
  rep.seed = seed;
  rep.D = adm.D;
  rep.s_adm_size = adm.s_adm.size();

  rep.points = sample_points(ctx, -1, seed, fm);
  rep.certificate = true;  // sample_points only returns certified batches

  auto [unit, eta] = find_unit_and_eta(*F);
  (void)unit;

  const int n = mp.rs.rank + 1;
  const size_t npts = rep.points.size();
  std::vector<std::vector<DualityCheck>> per_point(npts);
  std::atomic<bool> all_equal{true};
  parallel_for(npts, threads, [&](std::size_t p) {
    Tensor3 lhs = ell_gw(ctx, rep.points[p]);
    Tensor3 rhs = ell_aw(ctx, rep.points[p], *F, eta, *fm);
    auto& checks = per_point[p];
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (int e = 0; e < n; ++e) {
          DualityCheck c;
          c.alpha = a + 1;
          c.beta = b + 1;
          c.eps = e + 1;
          c.point_index = static_cast<int>(p);
          c.lhs = rat_str(lhs.at(a, b, e));
          c.rhs = rat_str(rhs.at(a, b, e));
          c.equal = lhs.at(a, b, e) == rhs.at(a, b, e);
          if (!c.equal) all_equal = false;
          checks.push_back(std::move(c));
        }
  });
  for (auto& pc : per_point)
    for (auto& c : pc) rep.checks.push_back(std::move(c));
  rep.pass = all_equal && rep.certificate;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

namespace {

// Splits a polynomial expression into signed terms on top-level +/-.
// A sign directly after '^' binds to the exponent instead.
std::vector<std::pair<int, std::string>> split_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> out;
  int sign = 1;
  std::string cur;
  char prev = 0;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t") != std::string::npos) out.emplace_back(sign, cur);
    cur.clear();
  };
  for (char ch : s) {
    if ((ch == '+' || ch == '-') && prev != '^') {
      flush();
      sign = (ch == '-') ? -1 : 1;
    } else {
      cur += ch;
      if (!isspace(static_cast<unsigned char>(ch))) prev = ch;
    }
  }
  flush();
  return out;
}

}  // namespace

FlatMap parse_flatmap(std::istream& in, std::string& family, int& rank) {
  std::string line;
  bool have_header = false;
  FlatMap fm;
  bool mode_set = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string first;
    if (!(probe >> first)) continue;
    if (!have_header) {
      if (first != "flatmap") throw std::invalid_argument("expected 'flatmap' header");
      if (!(probe >> family >> rank)) throw std::invalid_argument("bad flatmap header");
      fm.coords.resize(rank);
      have_header = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("bad flatmap line " + std::to_string(lineno));
    std::string label = line.substr(0, colon);
    std::string expr = line.substr(colon + 1);
    // label is "t<A>"
    auto tpos = label.find('t');
    if (tpos == std::string::npos)
      throw std::invalid_argument("bad flatmap label at line " + std::to_string(lineno));
    int A = std::stoi(label.substr(tpos + 1));
    if (A < 1 || A > rank)
      throw std::invalid_argument("flat coordinate out of range at line " + std::to_string(lineno));

    for (auto& [sign, termstr] : split_terms(expr)) {
      FlatTerm t;
      t.coeff = Rational(sign);
      t.wexp.assign(rank, 0);
      t.upow = 0;
      std::istringstream ts(termstr);
      std::string factor;
      while (ts >> factor) {
        // allow product stars
        if (factor == "*") continue;
        std::string base = factor;
        int exp = 1;
        auto caret = factor.find('^');
        if (caret != std::string::npos) {
          base = factor.substr(0, caret);
          exp = std::stoi(factor.substr(caret + 1));
        }
        if (base == "u") {
          t.upow += exp;
        } else if ((base[0] == 'W' || base[0] == 'Y') && base.size() > 1) {
          bool isW = base[0] == 'W';
          if (mode_set && isW != fm.uses_characters)
            throw std::invalid_argument("mixed W/Y tokens in flatmap");
          fm.uses_characters = isW;
          mode_set = true;
          int idx = std::stoi(base.substr(1));
          if (idx < 1 || idx > rank)
            throw std::invalid_argument("token out of range at line " + std::to_string(lineno));
          if (exp < 0) throw std::invalid_argument("negative exponent in flatmap");
          t.wexp[idx - 1] += exp;
        } else {
          t.coeff *= rat_parse(base);
          if (exp != 1) throw std::invalid_argument("exponent on a constant in flatmap");
        }
      }
      fm.coords[A - 1].push_back(std::move(t));
    }
  }
  if (!have_header) throw std::invalid_argument("empty flatmap file");
  return fm;
}

}  // namespace wm
