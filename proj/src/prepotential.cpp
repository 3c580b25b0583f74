#include "wm/prepotential.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wm {

void Prepotential::add_term(const PrepKey& k, const Rational& c) {
  if (static_cast<int>(k.te.size()) != l()) throw std::invalid_argument("term arity mismatch");
  if (is_zero(c)) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

Prepotential Prepotential::derivative(int a) const {
  Prepotential out(l());
  for (const auto& [k, c] : terms_) {
    if (a < l()) {
      if (k.te[a] == 0) continue;
      PrepKey nk = k;
      nk.te[a] -= 1;
      out.add_term(nk, c * Rational(k.te[a]));
    } else {
      if (k.ek != 0) out.add_term(k, c * Rational(k.ek));
      if (k.t7p != 0) {
        PrepKey nk = k;
        nk.t7p -= 1;
        out.add_term(nk, c * Rational(k.t7p));
      }
    }
  }
  return out;
}

bool Prepotential::is_constant() const {
  for (const auto& [k, c] : terms_) {
    if (k.ek != 0 || k.t7p != 0) return false;
    for (int e : k.te)
      if (e != 0) return false;
  }
  return true;
}

Rational Prepotential::constant_value() const {
  Rational v(0);
  for (const auto& [k, c] : terms_) v += c;
  return v;
}

Rational Prepotential::eval(const std::vector<Rational>& t, const Rational& s) const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    if (k.t7p != 0) throw std::domain_error("bare t_{l+1} power survives evaluation");
    Rational v = c;
    for (int a = 0; a < l(); ++a)
      if (k.te[a] != 0) v *= pow_int(t[a], k.te[a]);
    if (k.ek != 0) v *= pow_int(s, k.ek);
    acc += v;
  }
  return acc;
}

Rational third_derivative(const Prepotential& F, int A, int B, int C, const TPoint& tp) {
  return F.derivative(A).derivative(B).derivative(C).eval(tp.t, tp.s);
}

std::pair<int, Mat> find_unit_and_eta(const Prepotential& F) {
  const int n = F.nflat();
  for (int e = 0; e < n; ++e) {
    Prepotential G = F.derivative(e);
    Mat eta = Mat::Zero(n, n);
    bool constant = true;
    for (int a = 0; a < n && constant; ++a)
      for (int b = a; b < n && constant; ++b) {
        Prepotential H = G.derivative(a).derivative(b);
        if (!H.is_constant()) {
          constant = false;
          break;
        }
        eta(a, b) = eta(b, a) = H.constant_value();
      }
    if (!constant) continue;
    bool nonzero = false;
    for (int a = 0; a < n && !nonzero; ++a)
      for (int b = 0; b < n && !nonzero; ++b)
        if (!is_zero(eta(a, b))) nonzero = true;
    if (nonzero) return {e, eta};
  }
  throw std::domain_error("no flat unit direction");
}

Rational wdvv_residual(const Prepotential& F, const Mat& eta, const TPoint& tp) {
  const int n = F.nflat();
  Mat etainv = mat_inverse(eta);

  // All third partials at the point, computed once.
  std::vector<Rational> d3(static_cast<size_t>(n) * n * n);
  auto idx = [n](int a, int b, int c) { return (static_cast<size_t>(a) * n + b) * n + c; };
  for (int a = 0; a < n; ++a) {
    Prepotential Fa = F.derivative(a);
    for (int b = a; b < n; ++b) {
      Prepotential Fab = Fa.derivative(b);
      for (int c = b; c < n; ++c) {
        Rational v = Fab.derivative(c).eval(tp.t, tp.s);
        d3[idx(a, b, c)] = v;
        d3[idx(a, c, b)] = v;
        d3[idx(b, a, c)] = v;
        d3[idx(b, c, a)] = v;
        d3[idx(c, a, b)] = v;
        d3[idx(c, b, a)] = v;
      }
    }
  }

  Rational worst(0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m)
        for (int nn = 0; nn < n; ++nn) {
          Rational bracket(0);
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
              if (is_zero(etainv(c, d))) continue;
              bracket += d3[idx(a, b, c)] * etainv(c, d) * d3[idx(d, m, nn)];
              bracket -= d3[idx(a, m, c)] * etainv(c, d) * d3[idx(d, b, nn)];
            }
          Rational mag = abs(bracket);
          if (mag > worst) worst = mag;
        }
  return worst;
}

Tensor3 c_tensor_upper(const Prepotential& F, const Mat& eta, const TPoint& tp) {
  const int n = F.nflat();
  Mat etainv = mat_inverse(eta);
  Tensor3 lower(n);
  for (int a = 0; a < n; ++a) {
    Prepotential Fa = F.derivative(a);
    for (int b = a; b < n; ++b) {
      Prepotential Fab = Fa.derivative(b);
      for (int c = b; c < n; ++c) {
        Rational v = Fab.derivative(c).eval(tp.t, tp.s);
        lower.at(a, b, c) = v;
        lower.at(a, c, b) = v;
        lower.at(b, a, c) = v;
        lower.at(b, c, a) = v;
        lower.at(c, a, b) = v;
        lower.at(c, b, a) = v;
      }
    }
  }
  Tensor3 out(n);
  for (int A = 0; A < n; ++A)
    for (int B = A; B < n; ++B)
      for (int C = 0; C < n; ++C) {
        Rational acc(0);
        for (int M = 0; M < n; ++M) {
          if (is_zero(etainv(A, M))) continue;
          for (int N = 0; N < n; ++N) {
            if (is_zero(etainv(B, N))) continue;
            acc += etainv(A, M) * etainv(B, N) * lower.at(M, N, C);
          }
        }
        out.at(A, B, C) = acc;
        out.at(B, A, C) = acc;
      }
  return out;
}

Prepotential parse_prepotential(std::istream& in, std::string& family, int& rank) {
  std::string line;
  bool have_header = false;
  Prepotential F;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!have_header) {
      std::string word;
      if (!(ls >> word)) continue;  // blank
      if (word != "prepotential") throw std::invalid_argument("expected 'prepotential' header");
      if (!(ls >> family >> rank)) throw std::invalid_argument("bad prepotential header");
      F = Prepotential(rank);
      have_header = true;
      continue;
    }
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    PrepKey key;
    size_t i = 0;
    for (; i < toks.size() && toks[i] != "|"; ++i) key.te.push_back(std::stoi(toks[i]));
    if (static_cast<int>(key.te.size()) != rank || i == toks.size())
      throw std::invalid_argument("bad term at line " + std::to_string(lineno));
    ++i;  // skip '|'
    std::vector<int> ks;
    for (; i < toks.size() && toks[i] != ":"; ++i) ks.push_back(std::stoi(toks[i]));
    if (ks.empty() || ks.size() > 2 || i == toks.size())
      throw std::invalid_argument("bad term at line " + std::to_string(lineno));
    key.ek = ks[0];
    key.t7p = ks.size() == 2 ? ks[1] : 0;
    ++i;  // skip ':'
    if (i + 1 != toks.size()) throw std::invalid_argument("bad term at line " + std::to_string(lineno));
    F.add_term(key, rat_parse(toks[i]));
  }
  if (!have_header) throw std::invalid_argument("empty prepotential file");
  return F;
}

void write_prepotential(std::ostream& out, const Prepotential& F, const std::string& family,
                        int rank) {
  out << "prepotential " << family << " " << rank << "\n";
  for (const auto& [k, c] : F.terms()) {
    for (int e : k.te) out << e << " ";
    out << "| " << k.ek;
    if (k.t7p != 0) out << " " << k.t7p;
    out << " : " << rat_str(c) << "\n";
  }
}

}  // namespace wm
