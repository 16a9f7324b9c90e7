#ifndef SUPERSYLOW_FAMILIES_HPP
#define SUPERSYLOW_FAMILIES_HPP

#include "supersylow/superalgebra.hpp"

#include <optional>
#include <string>

namespace supersylow {

// Parsed family descriptor, e.g. gl(2|3), psq(4), takiff0(sl2*2;d=[1,-1]).
struct FamilySpec {
  enum class Kind { gl, sl, psl, osp, pe, spe, q, sq, psq, counterexample, takiff, takiff0 };
  Kind kind = Kind::gl;
  int m = 0;                       // first argument of two-parameter families
  int n = 0;                       // second argument, or the single parameter
  std::vector<std::string> atoms;  // takiff/takiff0 simple factors, multiplicity expanded
  std::vector<Rat> deriv;          // takiff0 derivation coefficients, one per factor
  std::string text;                // canonical printed form
};

std::optional<FamilySpec> parse_family_spec(const std::string& s);
std::string family_to_string(const FamilySpec& spec);

// A constructed family member.  Families defined by matrices keep their model:
// a basis of matrices in gl(p|q) for the algebra itself, or for the
// pre-quotient algebra when the family is a central quotient (psl, psq).
struct FamilyAlgebra {
  SuperAlgebra alg;
  FamilySpec spec;
  int p = 0, q = 0;  // model lives in gl(p|q)
  int pre_dim = 0;   // model basis size (pre-quotient dimension)
  std::vector<std::vector<std::pair<int, Rat>>> model_cols;  // sparse flattened basis
  std::vector<int> pivot_rows;  // independent rows of the flattened basis
  Mat solver;                   // inverse of the pivot-row submatrix
  std::optional<Mat> quotient_projection;  // model coords -> alg coords

  bool has_matrix_model() const { return pre_dim > 0; }
  // alg coordinates of a model matrix; nullopt if it lies outside the model.
  std::optional<Vec> coords_of(const Mat& x) const;
};

FamilyAlgebra build_family(const FamilySpec& spec);

// Structure constants from an explicit independent, bracket-closed matrix
// basis; the result records the realization and the coordinate solver.
FamilyAlgebra algebra_from_matrices(int p, int q, const std::vector<Mat>& even,
                                    const std::vector<Mat>& odd,
                                    const std::vector<std::string>& names);

// Number of sl(1|1)-type factors (gl, osp) or paired blocks (pe, q) in the
// standard maximal odd-homological subalgebra.
int family_defect(const FamilySpec& spec);

// The candidate subalgebra the verification tables test, inside f.alg, and
// the maximal even diagonal torus used alongside it.
std::optional<GradedSubspace> sylow_candidate(const FamilyAlgebra& f);
GradedSubspace candidate_torus(const FamilyAlgebra& f);

// Comparison algebras named by product expressions: factors are family specs
// or so(k)/sp(2k)/gl(k) shorthands, combined with '*' and '^'; modifiers
// s(...) (kernel of the summed canonical trace), p(...) (quotient by the
// shared identity-type central element), ps(...) = p(s(...)).
std::optional<SuperAlgebra> named_algebra(const std::string& s);

}  // namespace supersylow

#endif
