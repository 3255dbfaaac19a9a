// Builds a GM fivefold, passes to its Lagrangian data and back, and queries a few strata.

#include <iostream>

#include "gmlag/gmlag.hpp"

int main() {
  using namespace gmlag;

  const GMData x = fixtures::fivefold();
  const ValidationReport rep = validate(x);
  std::cout << "type: " << to_string(rep.type) << ", kernel dim " << rep.kernel_dim << '\n';

  const LagrangianData ld = gm_to_lagrangian(x);
  const DimReport dims = dim_report(ld);
  std::cout << "dim(A ∩ Λ³V5) = " << dims.dim_a_cap_l3v5 << ", predicted dim X = " << dims.predicted_dim_x << '\n';

  // Round trip recovers the data up to the normalization performed by canonical_form.
  const bool same = canonical_form(lagrangian_to_gm(ld)) == canonical_form(x);
  std::cout << "round trip exact: " << (same ? "yes" : "no") << '\n';

  const Subspace a = standard_frame_a(ld);
  const RatVector e1 = unit_vector(kV6, 0);
  std::cout << "y-stratum of e1: " << y_stratum(a, e1) << '\n';

  const FiberReport fib = fibration1_fiber(ld, e1);
  std::cout << "fibre over e1: quadric in P^" << fib.ambient_proj_dim << " of corank " << fib.corank
            << (fib.agreement ? " (closed form agrees)" : " (closed form DISAGREES)") << '\n';
  return same && fib.agreement ? 0 : 1;
}
