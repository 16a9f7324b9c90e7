#ifndef SUPERSYLOW_MATRIX_HPP
#define SUPERSYLOW_MATRIX_HPP

#include "supersylow/rational.hpp"

#include <initializer_list>

namespace supersylow {

// Dense matrix over Q, row-major.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}
  Mat(std::initializer_list<std::initializer_list<long>> rs);

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);
  bool is_zero() const;
  bool is_square() const { return rows == cols; }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  Vec row(int i) const;
  Vec col(int j) const;
};

Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(const Rat& c, const Mat& x);
Mat mat_transpose(const Mat& x);
Vec mat_apply(const Mat& x, const Vec& v);
Rat mat_trace(const Mat& x);

// str of a (p|q)-graded square matrix: tr(top-left) - tr(bottom-right).
Rat mat_supertrace(const Mat& x, int p);

// Flatten to a coordinate vector (row-major) and back; used to treat
// matrix spaces as plain Q^n for subspace work.
Vec mat_flatten(const Mat& x);
Mat mat_unflatten(const Vec& v, int rows, int cols);

}  // namespace supersylow

#endif
