#ifndef SUPERSYLOW_SYLOW_HPP
#define SUPERSYLOW_SYLOW_HPP

#include "supersylow/families.hpp"
#include "supersylow/report.hpp"
#include "supersylow/weyl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace supersylow {

// Character a bracket-closed graded subspace k must kill for the top form on
// g/k to trivialize: a -> str(ad a on g/k), one value per even basis vector
// of k.  Vanishes automatically on [k0,k0] and [k1,k1].
struct BerCharacter {
  GradedSubspace subalgebra;
  Vec functional;
  bool trivial() const { return vec_is_zero(functional); }
};

BerCharacter ber_character(const SuperAlgebra& g, const GradedSubspace& k);

// Value at an even element of k given in parent coordinates; throws if the
// element lies outside k or has an odd component.
Rat ber_value(const BerCharacter& bc, const Vec& element);

// Necessary conditions for k to split off as a quotient-with-volume.
// hom_orbit_ok is only evaluated when random sampling certifies the ambient
// homological cone dense: it then checks dim([g0,x] + k1) = dim g1 at a
// sampled homological x in k1.  false on either certifies "not splitting";
// true certifies only the necessary conditions.
struct SplittingCheck {
  bool ber_trivial = false;
  std::optional<bool> hom_orbit_ok;
};

SplittingCheck splitting_necessary(const SuperAlgebra& g, const GradedSubspace& k,
                                   std::uint64_t seed = 0);

// Expected candidate / normalizer names from the built-in verification
// tables; nullopt when the family has no table row.
std::optional<std::string> table_sylow_name(const FamilySpec& spec);
std::optional<std::string> table_normalizer_name(const FamilySpec& spec);

// Row verifications.  Each builds the family, its candidate subalgebra, and
// compares certified structure against the table entry.
VerificationReport verify_sylow_row(const FamilySpec& spec, std::uint64_t seed = 0);
VerificationReport verify_normalizer_row(const FamilySpec& spec, std::uint64_t seed = 0);
VerificationReport verify_weyl_row(const FamilySpec& spec);

// Maximal ad-diagonalizable abelian even subalgebra of o, greedy extension;
// vectors in parent coordinates.
std::vector<Vec> maximal_torus_of(const SuperAlgebra& g, const GradedSubspace& o,
                                  std::uint64_t seed = 0);

// Sampled x in o1 with [x,x] semisimple and centralizer(g,[x,x]) as small as
// centralizer(g,t) for a maximal torus t of o0 (same graded dimensions; the
// square of a generic element is only conjugate to a torus point).  Throws
// when no such element is found within 500 samples.
Vec find_generic(const SuperAlgebra& g, const GradedSubspace& o, std::uint64_t seed = 0);

struct SylowVerdict {
  enum class Kind { sylow, not_sylow, unknown };
  Kind kind = Kind::unknown;
  std::string reason;  // dim_mismatch | not_zero | ber_nontrivial for not_sylow
  std::string detail;
};

// Table-backed verdict for an arbitrary bracket-closed k inside a table
// family: necessary checks in order (dimensions, Berezin character, zero
// certificate), then "sylow" only when k is the table candidate itself;
// "unknown" when every check passes but k is not the recorded candidate,
// since positive splitting certification is out of scope.
SylowVerdict is_sylow_by_table(const FamilyAlgebra& f, const GradedSubspace& k,
                               std::uint64_t seed = 0);

}  // namespace supersylow

#endif
