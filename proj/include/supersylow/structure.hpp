#ifndef SUPERSYLOW_STRUCTURE_HPP
#define SUPERSYLOW_STRUCTURE_HPP

#include "supersylow/superalgebra.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace supersylow {

// ----- homological and neat elements ----------------------------------------

// x odd; true iff [x,x] acts semisimply: tested on the realization matrix when
// the realization is faithful, otherwise on the adjoint matrix taken in the
// centerless quotient.
bool is_homological(const SuperAlgebra& a, const Vec& x);

struct ConeStats {
  int trials = 0;
  int homological = 0;
  bool dense() const { return trials > 0 && homological == trials; }
};

// random odd vectors with small rational coordinates
ConeStats homological_cone_sample(const SuperAlgebra& a, int trials, std::uint64_t seed);

// One-sided: attempts the Jacobson-Morozov style construction of an osp(1|2)
// subalgebra whose odd part contains the weight-1 component of x.  none is not
// a proof of non-neatness.
std::optional<GradedSubspace> neat_witness(const SuperAlgebra& a, const Vec& x);

bool is_oddly_generated(const SuperAlgebra& a);

// ----- Cartan data and roots -------------------------------------------------

// centralizer of [x,x]; a Cartan subalgebra when x is generic homological
GradedSubspace cartan_from_element(const SuperAlgebra& a, const Vec& x);

struct RootDatum {
  GradedSubspace cartan;
  std::vector<Vec> torus_coords;  // commuting even Cartan basis acting diagonally
  std::vector<Vec> roots;         // weight vectors, coordinates dual to torus_coords
  std::vector<GradedSubspace> root_spaces;  // parallel to roots
  GradedSubspace zero_space;                // full weight-zero space
  bool zero_space_is_cartan = false;
  bool delta_matches_even = false;      // every root already occurs on the even part
  std::vector<bool> irreducible;        // root space irreducible over the Cartan action
  std::vector<std::string> pair_types;  // type of the subalgebra generated by g_{±α}
};

// throws when some ad(torus element) is not split semisimple over Q or the
// even Cartan part is not commuting
RootDatum root_decomposition(const SuperAlgebra& a, const GradedSubspace& h);

// torus-restricted destabilization test: true iff a halfspace separates the
// support weights of x from 0; sufficient for nil-cone membership
bool nilcone_weight_member(const SuperAlgebra& a, const RootDatum& rd, const Vec& x);

// ----- ideals, Takiff recognition, the 0-superalgebra test ------------------

// graded minimal ideals discovered by eigenspace refinement along a greedy
// commuting family of split-semisimple even elements; every returned ideal is
// certified minimal (throws if certification is impossible after retries)
std::vector<GradedSubspace> minimal_ideals(const SuperAlgebra& a, std::uint64_t seed = 0);

// g0 semisimple (even Killing form nondegenerate), g1 abelian, and g1 ≅ g0 as
// g0-modules via an explicitly found equivariant isomorphism
bool is_takiff(const SuperAlgebra& a, std::uint64_t seed = 0);

// derived subalgebra is Takiff, center zero, no odd abelian ideal, oddly
// generated, and the odd complement acts nontrivially on every Takiff factor
bool is_takiff0(const SuperAlgebra& a, std::uint64_t seed = 0);

struct ZeroCertificate {
  bool verdict = false;
  // not_oddly_generated | simple_ideal_present | structure_mismatch
  std::optional<std::string> failure_reason;
  GradedSubspace center;
  SuperAlgebra reduced;  // quotient by the center
  Mat reduction;         // projection onto the quotient coordinates
  std::optional<GradedSubspace> takiff_part;       // inside reduced
  std::optional<GradedSubspace> odd_abelian_part;  // inside reduced
  std::optional<GradedSubspace> derivation_part;   // inside reduced
};

// classification-based test: oddly generated, and the centerless quotient is
// (takiff ⋊ odd derivations) × odd abelian
ZeroCertificate is_zero_superalgebra(const SuperAlgebra& a, std::uint64_t seed = 0);

// ----- invariants and fingerprints ------------------------------------------

// supertrace form str(ad x ad y) on basis pairs
Mat super_killing(const SuperAlgebra& a);

// Killing form of the even subalgebra is nondegenerate
bool even_part_semisimple(const SuperAlgebra& a);

// even part is reductive (center ⊕ semisimple derived) and its center acts
// diagonalizably on the whole algebra
bool is_quasireductive(const SuperAlgebra& a);

// odd vectors commuting with the whole even part
GradedSubspace odd_centralizer_of_even(const SuperAlgebra& a);

// cheap isomorphism invariants used for structure comparison of table entries
struct Fingerprint {
  int dim_even = 0, dim_odd = 0;
  int derived_even = 0, derived_odd = 0;
  int derived2_even = 0, derived2_odd = 0;
  int center_even = 0, center_odd = 0;
  int odd_square_dim = 0;       // dim [g1, g1]
  int odd_centralizer_dim = 0;  // dim (c(g0))1
  int killing_rank = 0;
  bool oddly_generated = false;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const SuperAlgebra& a);

// matches one of the simple templates (psl, psq, spe, osp-type dims) or is
// its own derived subalgebra with nondegenerate supertrace form
bool looks_simple(const SuperAlgebra& a);

}  // namespace supersylow

#endif
