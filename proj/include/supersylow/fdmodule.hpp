#ifndef SUPERSYLOW_FDMODULE_HPP
#define SUPERSYLOW_FDMODULE_HPP

#include "supersylow/families.hpp"
#include "supersylow/structure.hpp"
#include "supersylow/superalgebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supersylow {

// finite-dimensional graded module: one action matrix per algebra basis
// element, rows/columns ordered even block first
struct FdModule {
  int dim_even = 0;
  int dim_odd = 0;
  std::vector<Mat> action;

  int dim() const { return dim_even + dim_odd; }
  bool odd_index(int i) const { return i >= dim_even; }
};

// ρ(v) for an algebra element given in basis coordinates
Mat module_action(const FdModule& m, const Vec& v);

// exhaustive check of the super-homomorphism identity on basis pairs and of
// the parity block structure; empty result means the module is valid
std::vector<std::string> check_module(const SuperAlgebra& a, const FdModule& m);

int sdim(const FdModule& m);

// ----- constructions --------------------------------------------------------

FdModule trivial_module(const SuperAlgebra& a);
FdModule adjoint_module(const SuperAlgebra& a);

// defining matrix module; present only for faithful matrix realizations
std::optional<FdModule> standard_module(const FamilyAlgebra& f);

FdModule direct_sum_module(const FdModule& m1, const FdModule& m2);
FdModule tensor_module(const SuperAlgebra& a, const FdModule& m1, const FdModule& m2);
FdModule dual_module(const SuperAlgebra& a, const FdModule& m);

// pull back along a subalgebra inclusion
FdModule restrict_module(const FdModule& m, const ExtractedAlgebra& sub);

// ----- Duflo–Serganova functor ---------------------------------------------

struct DsResult {
  FdModule input;
  Vec x;
  std::pair<int, int> kernel_dim;
  std::pair<int, int> image_cap_kernel_dim;
  std::pair<int, int> output_dims;
  std::vector<Vec> representatives;  // cosets in module coordinates
};

// ker ρ(x) / im ρ(x) ∩ ker ρ(x) taken inside ker ρ([x,x]); requires x odd,
// ρ(x)² = ρ([x,x])/2, and ρ([x,x]) semisimple
DsResult ds(const SuperAlgebra& a, const FdModule& m, const Vec& x);

// ----- weights --------------------------------------------------------------

// graded dims of the simultaneous eigenspaces of the root-datum torus
std::map<Vec, std::pair<int, int>> weight_spaces(const SuperAlgebra& a, const FdModule& m,
                                                 const RootDatum& rd);

// ----- serialization --------------------------------------------------------

std::string module_to_json(const FdModule& m, int indent = 2);
FdModule module_from_json(const std::string& text);

}  // namespace supersylow

#endif
