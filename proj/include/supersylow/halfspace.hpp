#ifndef SUPERSYLOW_HALFSPACE_HPP
#define SUPERSYLOW_HALFSPACE_HPP

#include "supersylow/rational.hpp"

#include <optional>

namespace supersylow {

// Is there a linear functional phi with phi(w) > 0 for every given weight w?
// (Open half-space containing all weights.)  Decided exactly by
// Fourier-Motzkin elimination on phi . w >= 1, which is equivalent for a
// finite weight set by scaling.  On success the witness functional is
// returned and has been re-verified against every weight.
struct HalfspaceResult {
  bool feasible = false;
  std::optional<Vec> witness;
};

HalfspaceResult halfspace_feasible(const std::vector<Vec>& weights, int dim);

}  // namespace supersylow

#endif
