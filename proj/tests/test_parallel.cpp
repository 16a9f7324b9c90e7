#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supersylow/parallel.hpp"
#include "supersylow/rng.hpp"

using namespace supersylow;

TEST_CASE("parallel matmul matches serial reference exactly") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int n = static_cast<int>(rng.uniform_int(1, 12));
    int k = static_cast<int>(rng.uniform_int(1, 12));
    int m = static_cast<int>(rng.uniform_int(1, 12));
    Mat a(n, k), b(k, m);
    for (auto& x : a.a) x = rng.small_rat();
    for (auto& x : b.a) x = rng.small_rat();
    CHECK(mat_mul_serial(a, b) == mat_mul_par(a, b));
  }
}

TEST_CASE("matmul correctness against hand case") {
  Mat a{{1, 2}, {3, 4}};
  Mat b{{0, 1}, {1, 0}};
  CHECK(mat_mul_serial(a, b) == Mat{{2, 1}, {4, 3}});
  CHECK(mat_mul_par(a, b) == Mat{{2, 1}, {4, 3}});
}

TEST_CASE("commutators") {
  Mat x{{0, 1}, {0, 0}};
  Mat y{{0, 0}, {1, 0}};
  CHECK(mat_commutator(x, y, false) == Mat{{1, 0}, {0, -1}});
  CHECK(mat_commutator(x, y, true) == Mat::identity(2));  // anticommutator {E12, E21}
}

TEST_CASE("thread control is well behaved") {
  int before = parallel_threads();
  CHECK(before >= 1);
  set_parallel_threads(1);
  CHECK(parallel_threads() >= 1);
  set_parallel_threads(before);
}
