#ifndef SUPERSYLOW_RELCOH_HPP
#define SUPERSYLOW_RELCOH_HPP

#include "supersylow/fdmodule.hpp"

#include <array>
#include <utility>
#include <vector>

namespace supersylow {

// Relative Chevalley–Eilenberg complex of (g, g_even) with coefficients in a
// module.  g/g_even is purely odd, so the k-th exterior power of the quotient
// is the k-th symmetric power of the odd part, and every bracket term of the
// differential drops (odd brackets land in g_even); what remains is
// (dc)(x_0,...,x_k) = Σ_i x_i · c(..x̂_i..).
//
// Degree-k cochains are linear maps from S^k(g_odd) to the module, stored
// flattened row-major as (module dim) × (dim S^k) matrices.  Each degree's
// basis spans the joint kernel of the even-part action on the Hom space and
// is parity pure, even cochains first.
struct RelComplex {
  FdModule module;
  int odd_dim = 0;     // dim of the odd part of the algebra
  int max_degree = 2;  // highest degree built (1 or 2)

  std::array<std::vector<Vec>, 3> basis;  // flattened cochains per degree
  std::array<int, 3> even_count{};        // leading even cochains per degree
  std::array<Mat, 2> d;                   // d[k]: C^k -> C^{k+1}, basis coords

  // (even, odd) cochain counts in degree k
  std::pair<int, int> dims(int k) const;
};

// builds the complex in degrees 0..max_degree (max_degree is 1 or 2).
// pre: the module is semisimple over the even part; checked by requiring the
// center of the even subalgebra to act by semisimple matrices (the derived
// part acts semisimply automatically in characteristic zero)
RelComplex build_complex(const SuperAlgebra& a, const FdModule& m, int max_degree = 2);

// graded dimensions (even, odd) of H^0 = ker d_0 and H^1 = ker d_1 / im d_0
std::pair<int, int> h0(const RelComplex& c);
std::pair<int, int> h1(const RelComplex& c);

// graded dimension of Ext^1(m, n), computed as H^1 with coefficients in
// dual(m) ⊗ n
std::pair<int, int> ext1(const SuperAlgebra& a, const FdModule& m, const FdModule& n);

// whether restriction to the subalgebra k is injective on Ext^1(m, n): pulls
// cocycles back along the inclusion of the odd part of k and tests that the
// induced map on H^1 has zero kernel.
// pre: k is a subalgebra of a; the restricted coefficients stay semisimple
// over the even part of k
bool restriction_injective_ext1(const SuperAlgebra& a, const GradedSubspace& k,
                                const FdModule& m, const FdModule& n);

}  // namespace supersylow

#endif
