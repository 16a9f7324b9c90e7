#include "supersylow/parallel.hpp"

#include <cassert>
#include <omp.h>

namespace supersylow {

Mat mat_mul_serial(const Mat& x, const Mat& y) {
  assert(x.cols == y.rows);
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

Mat mat_mul_par(const Mat& x, const Mat& y) {
  assert(x.cols == y.rows);
  Mat r(x.rows, y.cols);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

Mat mat_commutator(const Mat& x, const Mat& y, bool anticommute) {
  Mat xy = mat_mul_serial(x, y);
  Mat yx = mat_mul_serial(y, x);
  return anticommute ? mat_add(xy, yx) : mat_sub(xy, yx);
}

int parallel_threads() { return omp_get_max_threads(); }

void set_parallel_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace supersylow
