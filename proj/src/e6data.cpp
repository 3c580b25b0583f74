#include "wm/e6data.hpp"

namespace wm {

namespace {

void term(Prepotential& F, std::initializer_list<int> te, int ek, long num, long den,
          int t7p = 0) {
  PrepKey k;
  k.te.assign(te);
  k.ek = ek;
  k.t7p = t7p;
  F.add_term(k, rat(num, den));
}

}  // namespace

Prepotential e6_prepotential() {
  Prepotential F(6);
  term(F, {0, 0, 0, 0, 0, 0}, 12, 1, 24);

  term(F, {1, 0, 0, 0, 1, 0}, 8, 1, 4);

  term(F, {3, 0, 0, 0, 0, 0}, 6, 1, 12);
  term(F, {0, 0, 0, 0, 3, 0}, 6, 1, 12);
  term(F, {0, 0, 0, 0, 0, 2}, 6, 1, 4);

  term(F, {1, 0, 0, 0, 1, 1}, 5, 1, 2);

  term(F, {2, 0, 0, 0, 2, 0}, 4, 5, 36);
  term(F, {2, 0, 0, 1, 0, 0}, 4, 1, 72);
  term(F, {0, 1, 0, 0, 2, 0}, 4, -1, 72);
  term(F, {0, 1, 0, 1, 0, 0}, 4, -1, 72);

  term(F, {3, 0, 0, 0, 0, 1}, 3, 1, 12);
  term(F, {1, 1, 0, 0, 0, 1}, 3, -1, 12);
  term(F, {0, 0, 0, 0, 3, 1}, 3, 1, 12);
  term(F, {0, 0, 0, 0, 0, 3}, 3, 1, 6);
  term(F, {0, 0, 0, 1, 1, 1}, 3, 1, 12);

  term(F, {4, 0, 0, 0, 1, 0}, 2, 1, 144);
  term(F, {2, 1, 0, 0, 1, 0}, 2, -1, 72);
  term(F, {1, 0, 0, 0, 4, 0}, 2, 1, 144);
  term(F, {1, 0, 0, 1, 2, 0}, 2, 1, 72);
  term(F, {1, 0, 0, 0, 1, 2}, 2, 1, 4);
  term(F, {1, 0, 0, 2, 0, 0}, 2, 1, 144);
  term(F, {0, 2, 0, 0, 1, 0}, 2, 1, 144);

  term(F, {2, 0, 0, 0, 2, 1}, 1, 1, 72);
  term(F, {2, 0, 0, 1, 0, 1}, 1, 1, 72);
  term(F, {0, 1, 0, 0, 2, 1}, 1, -1, 72);
  term(F, {0, 1, 0, 1, 0, 1}, 1, -1, 72);

  term(F, {6, 0, 0, 0, 0, 0}, 0, -1, 38880);
  term(F, {0, 0, 0, 0, 6, 0}, 0, -1, 38880);
  term(F, {4, 1, 0, 0, 0, 0}, 0, -1, 7776);
  term(F, {0, 0, 0, 1, 4, 0}, 0, 1, 7776);
  term(F, {0, 3, 0, 0, 0, 0}, 0, -1, 7776);
  term(F, {0, 0, 0, 3, 0, 0}, 0, 1, 7776);
  term(F, {2, 2, 0, 0, 0, 0}, 0, -1, 2592);
  term(F, {0, 0, 0, 2, 2, 0}, 0, -1, 2592);
  term(F, {1, 1, 1, 0, 0, 0}, 0, -1, 36);
  term(F, {0, 0, 1, 1, 1, 0}, 0, 1, 36);
  term(F, {0, 0, 0, 0, 0, 4}, 0, -1, 192);
  term(F, {0, 0, 1, 0, 0, 2}, 0, 1, 8);
  term(F, {0, 0, 2, 0, 0, 0}, 0, 1, 4, /*t7p=*/1);
  return F;
}

FlatMap e6_flatmap_data(int root_order) {
  if (root_order % 12 != 0) throw std::domain_error("non-divisible root_order");
  const int N = root_order;
  FlatMap fm;
  fm.uses_characters = true;
  fm.coords.resize(6);
  auto add = [&](int A, long num, long den, std::initializer_list<int> wexp, int upow) {
    FlatTerm t;
    t.coeff = rat(num, den);
    t.wexp.assign(wexp);
    t.upow = upow;
    fm.coords[A].push_back(t);
  };
  // t1 = W0^{1/3} W1, with W0 = e^{x7/2} = u^{N/2}
  add(0, 1, 1, {1, 0, 0, 0, 0, 0}, N / 6);
  // t2 = W0^{2/3} (W1^2 - 6 W2 - 12 W5)
  add(1, 1, 1, {2, 0, 0, 0, 0, 0}, N / 3);
  add(1, -6, 1, {0, 1, 0, 0, 0, 0}, N / 3);
  add(1, -12, 1, {0, 0, 0, 0, 1, 0}, N / 3);
  // t3 = W0 (2 W1 W5 + W3 + 3 W6 + 3)
  add(2, 2, 1, {1, 0, 0, 0, 1, 0}, N / 2);
  add(2, 1, 1, {0, 0, 1, 0, 0, 0}, N / 2);
  add(2, 3, 1, {0, 0, 0, 0, 0, 1}, N / 2);
  add(2, 3, 1, {0, 0, 0, 0, 0, 0}, N / 2);
  // t4 = W0^{2/3} (-W5^2 + 12 W1 + 6 W4)
  add(3, -1, 1, {0, 0, 0, 0, 2, 0}, N / 3);
  add(3, 12, 1, {1, 0, 0, 0, 0, 0}, N / 3);
  add(3, 6, 1, {0, 0, 0, 1, 0, 0}, N / 3);
  // t5 = W0^{1/3} W5
  add(4, 1, 1, {0, 0, 0, 0, 1, 0}, N / 6);
  // t6 = W0^{1/2} (W6 + 2)
  add(5, 1, 1, {0, 0, 0, 0, 0, 1}, N / 4);
  add(5, 2, 1, {0, 0, 0, 0, 0, 0}, N / 4);
  return fm;
}

}  // namespace wm
