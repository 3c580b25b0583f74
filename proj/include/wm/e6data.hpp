#ifndef WM_E6DATA_HPP
#define WM_E6DATA_HPP

#include "wm/invariants.hpp"
#include "wm/prepotential.hpp"

namespace wm {

// Closed-form Frobenius prepotential of the E6 extended-Weyl orbit space in
// the flat chart of e6_flatmap_data.
Prepotential e6_prepotential();

// Flat coordinates t_1..t_6 as polynomials in the fundamental characters and
// powers of u = e^{x_7/N}; t_7 = x_7/12 is implicit.
FlatMap e6_flatmap_data(int root_order);

}  // namespace wm

#endif
