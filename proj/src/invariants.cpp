#include "wm/invariants.hpp"

#include <stdexcept>

#include "wm/e6data.hpp"

namespace wm {

std::vector<Laurent> basic_invariants(const MarkedPair& mp) {
  const RootSystem& rs = mp.rs;
  std::vector<Laurent> Y;
  Y.reserve(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    WeightVec omega(rs.rank, 0);
    omega[i] = 1;
    auto orbit = weyl_orbit(rs, omega);
    Laurent p(rs.rank);
    for (const auto& w : orbit) p.add_term(ExpVec(w.begin(), w.end()), Rational(1));
    Y.push_back(p * Rational(1, static_cast<long>(orbit.size())));
  }
  return Y;
}

namespace {

Laurent orbit_sum(const RootSystem& rs, const WeightVec& w) {
  Laurent p(rs.rank);
  for (const auto& v : weyl_orbit(rs, w)) p.add_term(ExpVec(v.begin(), v.end()), Rational(1));
  return p;
}

Laurent adjoint_character(const RootSystem& rs) {
  Laurent p = Laurent::constant(rs.rank, Rational(rs.rank));
  for (const auto& beta : rs.positive_roots) {
    p.add_term(ExpVec(beta.begin(), beta.end()), Rational(1));
    ExpVec neg(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
    p.add_term(neg, Rational(1));
  }
  return p;
}

std::vector<Laurent> characters_a(const RootSystem& rs) {
  // Every fundamental representation of A_l is minuscule.
  std::vector<Laurent> W;
  for (int i = 0; i < rs.rank; ++i) {
    WeightVec omega(rs.rank, 0);
    omega[i] = 1;
    W.push_back(orbit_sum(rs, omega));
  }
  return W;
}

std::vector<Laurent> characters_d(const RootSystem& rs) {
  const int l = rs.rank;
  MatI G, Theta;
  dtype_matrices(l, G, Theta);
  // Weights of the vector representation are +-eps_j; eps_j in
  // fundamental-weight coordinates is row j of G.
  std::vector<ExpVec> vec_weights;
  for (int j = 0; j < l; ++j) {
    ExpVec e(l);
    for (int a = 0; a < l; ++a) e[a] = static_cast<std::int32_t>(G(j, a));
    vec_weights.push_back(e);
    for (auto& c : e) c = -c;
    vec_weights.push_back(e);
  }

  std::vector<Laurent> W(l, Laurent(l));
  // W_k = Lambda^k (vector) for k <= l-2: sum over k-subsets of the 2l
  // weights (zero weights appear with their multiplicities).
  for (int k = 1; k <= l - 2; ++k) {
    Laurent p(l);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      ExpVec sum(l, 0);
      for (int i : idx)
        for (int a = 0; a < l; ++a) sum[a] += vec_weights[i][a];
      p.add_term(sum, Rational(1));
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == 2 * l - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    W[k - 1] = p;
  }
  // Spinor characters are orbit sums (minuscule).
  for (int i = l - 2; i < l; ++i) {
    WeightVec omega(l, 0);
    omega[i] = 1;
    W[i] = orbit_sum(rs, omega);
  }
  return W;
}

std::vector<Laurent> characters_e6(const RootSystem& rs) {
  std::vector<Laurent> W(6, Laurent(6));
  WeightVec omega1(6, 0);
  omega1[0] = 1;
  Laurent W1 = orbit_sum(rs, omega1);  // 27
  Laurent W1_2 = W1.scale_args(2);
  Laurent W1_3 = W1.scale_args(3);
  Laurent W2 = (W1 * W1 - W1_2) * Rational(1, 2);
  Laurent W3 = (W2 * W1 - W1 * W1_2 + W1_3) * Rational(1, 3);
  W[0] = W1;
  W[1] = W2;
  W[2] = W3;
  W[3] = W2.scale_args(-1);
  W[4] = W1.scale_args(-1);
  W[5] = adjoint_character(rs);
  return W;
}

}  // namespace

std::vector<Laurent> characters(const MarkedPair& mp) {
  switch (mp.rs.family) {
    case Family::A: return characters_a(mp.rs);
    case Family::D: return characters_d(mp.rs);
    case Family::E:
      if (mp.rs.rank == 6) return characters_e6(mp.rs);
      throw std::domain_error("characters unsupported for this family");
  }
  throw std::domain_error("characters unsupported for this family");
}

Laurent weyl_denominator(const RootSystem& rs) {
  Laurent p = Laurent::monomial(rs.rank, ExpVec(rs.rank, 1), Rational(1));
  for (const auto& beta : rs.positive_roots) {
    Laurent factor = Laurent::constant(rs.rank, Rational(1));
    ExpVec neg(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
    factor.add_term(neg, Rational(-1));
    p = p * factor;
  }
  return p;
}

Rational eval_monomial(const std::vector<Rational>& q, const WeightVec& w) {
  Rational v(1);
  for (size_t a = 0; a < w.size(); ++a) {
    if (w[a] == 0) continue;
    if (is_zero(q[a])) throw std::domain_error("nonzero evaluation point required");
    v *= pow_int(q[a], w[a]);
  }
  return v;
}

Rational eval_weyl_denominator(const RootSystem& rs, const std::vector<Rational>& q) {
  Rational v = eval_monomial(q, weyl_vector(rs));
  for (const auto& beta : rs.positive_roots) {
    WeightVec neg(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
    v *= Rational(1) - eval_monomial(q, neg);
    if (is_zero(v)) return v;
  }
  return v;
}

InvariantContext::InvariantContext(MarkedPair mp, bool with_characters)
    : mp_(std::move(mp)), Y_(basic_invariants(mp_)) {
  if (with_characters) W_ = characters(mp_);
}

const std::vector<Laurent>& InvariantContext::W() const {
  if (!W_) W_ = characters(mp_);
  return *W_;
}

ExtendedJacobian extended_jacobian(const InvariantContext& ctx, const EvalPoint& pt) {
  const MarkedPair& mp = ctx.mp();
  const int l = mp.rs.rank;
  if (static_cast<int>(pt.q.size()) != l) throw std::invalid_argument("point arity mismatch");
  if (is_zero(pt.u)) throw std::domain_error("nonzero evaluation point required");

  ExtendedJacobian out;
  out.y.resize(l + 1);
  out.J = Mat::Zero(l + 1, l + 1);
  for (int a = 0; a < l; ++a) {
    Rational dN = mp.d[a] * Rational(pt.root_order);
    if (dN.get_den() != 1) throw std::logic_error("root order does not clear degree");
    Rational upow = pow_int(pt.u, dN.get_num().get_si());
    Rational val;
    std::vector<Rational> grad;
    ctx.Y()[a].eval_with_gradient(pt.q, val, grad);
    out.y[a] = upow * val;
    for (int i = 0; i < l; ++i) out.J(a, i) = upow * grad[i];
    out.J(a, l) = mp.d[a] * out.y[a];
  }
  out.y[l] = pow_int(pt.u, pt.root_order);  // e^{x_{l+1}}, bookkeeping only
  out.J(l, l) = 1;
  return out;
}

FlatChart flat_chart(const InvariantContext& ctx, const FlatMap& fm, const EvalPoint& pt) {
  const MarkedPair& mp = ctx.mp();
  const int l = mp.rs.rank;
  const int N = pt.root_order;
  Rational s_exp = Rational(N) / (2 * mp.dhat);
  if (s_exp.get_den() != 1) throw std::domain_error("non-divisible root_order");
  const long ex7 = s_exp.get_num().get_si();

  const std::vector<Laurent>& basis = fm.uses_characters ? ctx.W() : ctx.Y();
  std::vector<Rational> val(l);
  std::vector<std::vector<Rational>> grad(l);
  for (int i = 0; i < l; ++i) basis[i].eval_with_gradient(pt.q, val[i], grad[i]);

  FlatChart out;
  out.t.assign(l, Rational(0));
  out.J = Mat::Zero(l + 1, l + 1);
  for (int A = 0; A < l; ++A) {
    for (const FlatTerm& term : fm.coords[A]) {
      Rational cu = term.coeff * pow_int(pt.u, term.upow);
      std::vector<Rational> powv(l, Rational(1));
      Rational mono(1);
      for (int f = 0; f < l; ++f) {
        if (term.wexp[f] != 0) powv[f] = pow_int(val[f], term.wexp[f]);
        mono *= powv[f];
      }
      Rational tv = cu * mono;
      out.t[A] += tv;
      for (int f = 0; f < l; ++f) {
        if (term.wexp[f] == 0) continue;
        // d(term)/dW_f = e_f W_f^{e_f-1} * (the other powers)
        Rational dmono = Rational(term.wexp[f]) * pow_int(val[f], term.wexp[f] - 1);
        for (int g = 0; g < l; ++g)
          if (g != f) dmono *= powv[g];
        for (int i = 0; i < l; ++i) out.J(A, i) += cu * dmono * grad[f][i];
      }
      // d/dx_{l+1} of u^{upow} is (upow/N) u^{upow}
      out.J(A, l) += tv * rat(term.upow, N);
    }
  }
  out.s = pow_int(pt.u, ex7);
  out.J(l, l) = Rational(1) / (2 * mp.dhat);
  return out;
}

FlatChart e6_flat_map(const InvariantContext& ctx, const EvalPoint& pt) {
  const MarkedPair& mp = ctx.mp();
  if (mp.rs.family != Family::E || mp.rs.rank != 6)
    throw std::invalid_argument("e6_flat_map requires E6");
  if (pt.root_order % 12 != 0) throw std::domain_error("non-divisible root_order");
  return flat_chart(ctx, e6_flatmap_data(pt.root_order), pt);
}

}  // namespace wm
