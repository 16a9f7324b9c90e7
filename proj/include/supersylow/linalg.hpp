#ifndef SUPERSYLOW_LINALG_HPP
#define SUPERSYLOW_LINALG_HPP

#include "supersylow/matrix.hpp"

#include <optional>

namespace supersylow {

struct RrefResult {
  Mat r;                    // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column per kept row, strictly increasing
  int rank = 0;
};

// Gauss-Jordan with exact pivoting; canonical (unit pivots, pivot columns
// cleared, rows ordered by pivot).
RrefResult rref(const Mat& m);

// Canonical basis of the right kernel {v : m v = 0}.  One vector per free
// column j: coordinate j is 1, other free coordinates 0.
std::vector<Vec> kernel_basis(const Mat& m);

// One solution of m x = b, if any.
std::optional<Vec> solve(const Mat& m, const Vec& b);

int mat_rank(const Mat& m);

// Subspace of Q^ambient held as a canonical RREF row basis, so equality of
// subspaces is plain equality of the representation.
struct Subspace {
  int ambient = 0;
  Mat basis;                // rank x ambient, canonical RREF
  std::vector<int> pivots;

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<Vec>& gens);

  int dim() const { return basis.rows; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  // v minus its projection onto the span along pivot coordinates
  // (residue of elimination; zero iff contained).
  Vec reduce(const Vec& v) const;
  // Coordinates of v in the canonical basis, if contained.
  std::optional<Vec> coordinates(const Vec& v) const;

  std::vector<Vec> basis_vectors() const;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

// Indices of ambient coordinates not used as pivots: the lexicographically
// first coordinate complement of the subspace.
std::vector<int> complement_coordinates(const Subspace& s);

}  // namespace supersylow

#endif
