#ifndef SUPERSYLOW_PARALLEL_HPP
#define SUPERSYLOW_PARALLEL_HPP

#include "supersylow/matrix.hpp"

namespace supersylow {

// Serial reference kernels and their OpenMP counterparts.  The parallel
// variants write disjoint output rows only, so results are bit-identical
// to the reference; tests compare the two directly.

Mat mat_mul_serial(const Mat& x, const Mat& y);
Mat mat_mul_par(const Mat& x, const Mat& y);

// Default entry point used by the library.
inline Mat mat_mul(const Mat& x, const Mat& y) { return mat_mul_par(x, y); }

// Matrix (super)commutator XY - sign * YX.
Mat mat_commutator(const Mat& x, const Mat& y, bool anticommute);

int parallel_threads();
void set_parallel_threads(int n);

}  // namespace supersylow

#endif
