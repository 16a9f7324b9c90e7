#ifndef SUPERSYLOW_WEYL_HPP
#define SUPERSYLOW_WEYL_HPP

#include "supersylow/families.hpp"
#include "supersylow/linalg.hpp"

#include <vector>

namespace supersylow {

// Finite Weyl-group data for a table family: the ambient Weyl group of the
// even part acting on diagonal character coordinates, the subspace spanned
// by the candidate subalgebra's torus directions, and the groups induced on
// that subspace.
//
// w_g collects the distinct matrices induced on the torus by ambient
// elements stabilizing it setwise (deduplication quotients out the pointwise
// fixators); w_n keeps those induced by elements that additionally map the
// family's coordinate blocks (isotropic pairs resp. q(2)-blocks) onto each
// other.
struct WeylData {
  int coords = 0;                        // ambient diagonal coordinates
  std::vector<Mat> ambient;              // signed/unsigned permutation matrices
  std::vector<Vec> torus_dirs;           // independent torus directions
  std::vector<std::vector<int>> blocks;  // coordinate blocks of the candidate
  std::vector<Mat> w_g;                  // induced group on the torus
  std::vector<Mat> w_n;                  // block-preserving subgroup
};

// errors on families outside the simple table (gl, q, sq, counterexample,
// takiff variants)
WeylData weyl_data(const FamilySpec& spec);

// |W_G| / |W_N|
int third_sylow_count(const WeylData& wd);

}  // namespace supersylow

#endif
