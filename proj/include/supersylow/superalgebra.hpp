#ifndef SUPERSYLOW_SUPERALGEBRA_HPP
#define SUPERSYLOW_SUPERALGEBRA_HPP

#include "supersylow/linalg.hpp"

#include <optional>
#include <string>
#include <utility>

namespace supersylow {

// Optional matrix realization inside gl(p|q).  When present, the matrix
// super-bracket of the representatives reproduces the structure constants
// modulo the span of central_ideal (non-empty exactly for algebras obtained
// by central quotient, which have no faithful realization of this size).
struct Realization {
  int p = 0, q = 0;
  std::vector<Mat> mats;           // one (p+q) x (p+q) matrix per basis element
  std::vector<Mat> central_ideal;  // quotiented central directions
};

// Finite-dimensional Lie superalgebra over Q given by structure constants.
// Basis ordering: even elements first (indices < dim_even), then odd.
struct SuperAlgebra {
  int dim_even = 0, dim_odd = 0;
  std::vector<std::string> names;
  // table[i][j] = [b_i, b_j], sparse (index, coeff) pairs sorted by index.
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> table;
  std::optional<Realization> realization;

  int dim() const { return dim_even + dim_odd; }
  bool odd_index(int i) const { return i >= dim_even; }
  int parity(int i) const { return odd_index(i) ? 1 : 0; }

  void init_table();  // allocate dim x dim empty table
  void set_bracket(int i, int j, const Vec& v);

  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Mat ad(const Vec& x) const;
  Mat ad_basis(int i) const;

  // Parity components of a vector (as full-length vectors).
  Vec even_component(const Vec& x) const;
  Vec odd_component(const Vec& x) const;
  bool is_homogeneous(const Vec& x) const;

  // Realization matrix of an arbitrary element.
  Mat realize(const Vec& x) const;
};

// Structure sanity: bracket respects parity, super-antisymmetry
// [x,y] = -(-1)^{|x||y|}[y,x] holds on basis pairs.
bool check_super_antisymmetry(const SuperAlgebra& a);

// Exhaustive graded Jacobi check over basis triples i <= j <= k:
// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0.
bool check_jacobi_serial(const SuperAlgebra& a);
bool check_jacobi_par(const SuperAlgebra& a);
inline bool check_jacobi(const SuperAlgebra& a) { return check_jacobi_par(a); }

// If a realization is present: bracket of representative matrices equals the
// realization of the structure-constant bracket modulo central_ideal.
bool check_realization(const SuperAlgebra& a);

// Graded subspace of a superalgebra, canonical: RREF basis rows are
// parity-pure with even rows first (uniqueness of RREF makes this automatic
// for genuinely graded spans).
struct GradedSubspace {
  Subspace space;
  int even_dim = 0;
  int odd_dim() const { return space.dim() - even_dim; }
  int dim() const { return space.dim(); }
  bool contains(const Vec& v) const { return space.contains(v); }
  bool contains(const GradedSubspace& o) const { return space.contains(o.space); }
  bool operator==(const GradedSubspace& o) const { return space == o.space; }
  std::vector<Vec> even_basis() const;
  std::vector<Vec> odd_basis() const;
  std::vector<Vec> basis() const { return space.basis_vectors(); }
};

// nullopt if the span is not graded.
std::optional<GradedSubspace> graded_span(const SuperAlgebra& a, const std::vector<Vec>& gens);
GradedSubspace graded_span_checked(const SuperAlgebra& a, const std::vector<Vec>& gens);
GradedSubspace full_subspace(const SuperAlgebra& a);
GradedSubspace zero_subspace(const SuperAlgebra& a);
GradedSubspace graded_sum(const SuperAlgebra& a, const GradedSubspace& x, const GradedSubspace& y);
GradedSubspace graded_intersect(const SuperAlgebra& a, const GradedSubspace& x, const GradedSubspace& y);

// span of [x, y] over basis pairs of the two spaces.
GradedSubspace bracket_span(const SuperAlgebra& a, const GradedSubspace& x, const GradedSubspace& y);

bool is_subalgebra(const SuperAlgebra& a, const GradedSubspace& s);
bool is_ideal(const SuperAlgebra& a, const GradedSubspace& s);

// Smallest bracket-closed subspace containing the generators.
GradedSubspace generated_subalgebra(const SuperAlgebra& a, const std::vector<Vec>& gens);

GradedSubspace derived_subalgebra(const SuperAlgebra& a);

// {x : [x, s] = 0 for all s in S}.
GradedSubspace centralizer(const SuperAlgebra& a, const GradedSubspace& s);
GradedSubspace centralizer_of_element(const SuperAlgebra& a, const Vec& x);
GradedSubspace center(const SuperAlgebra& a);

// {x : [x, s] is contained in s}.
GradedSubspace normalizer(const SuperAlgebra& a, const GradedSubspace& s);

// Even part of the center, as a graded subspace.
GradedSubspace even_center(const SuperAlgebra& a);

// Extraction: the subalgebra as a standalone algebra.  inclusion maps child
// coordinates to parent vectors (parent_dim x child_dim); child basis is the
// canonical graded basis of s.  Realization restricts when the parent has one.
struct ExtractedAlgebra {
  SuperAlgebra alg;
  Mat inclusion;
  std::optional<Vec> parent_coords(const SuperAlgebra& parent, const GradedSubspace& s,
                                   const Vec& parent_vec) const;
};
ExtractedAlgebra subalgebra_as_algebra(const SuperAlgebra& a, const GradedSubspace& s,
                                       const std::string& name_prefix = "e");

// Quotient by an ideal.  projection: child coords of a parent vector
// (child_dim x parent_dim); section: parent representative of a child basis
// vector.  Central ideals keep the parent realization and extend
// central_ideal; non-central ideals drop the realization.
struct QuotientAlgebra {
  SuperAlgebra alg;
  Mat projection;
  Mat section;
};
QuotientAlgebra quotient(const SuperAlgebra& a, const GradedSubspace& ideal);

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);

// Push a graded subspace of `a` through a linear map into an algebra of
// dimension target_dim (rows of `map` = target coords).
GradedSubspace map_subspace(const SuperAlgebra& target, const Mat& map, const GradedSubspace& s);

}  // namespace supersylow

#endif
