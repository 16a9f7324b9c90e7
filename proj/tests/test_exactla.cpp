#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supersylow/linalg.hpp"
#include "supersylow/parallel.hpp"
#include "supersylow/polynomial.hpp"
#include "supersylow/rng.hpp"

using namespace supersylow;

TEST_CASE("rational parsing round trip") {
  CHECK(rat_to_string(*rat_from_string("2/6")) == "1/3");
  CHECK(rat_to_string(*rat_from_string("-4/2")) == "-2");
  CHECK(rat_to_string(rat(7)) == "7");
  CHECK(!rat_from_string("1/0").has_value());
  CHECK(!rat_from_string("a").has_value());
  CHECK(!rat_from_string("").has_value());
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
}

TEST_CASE("rref canonical form on hand cases") {
  // Row-reduced by hand: [[1,2],[2,4]] has row space spanned by (1,2).
  RrefResult r = rref(Mat{{1, 2}, {2, 4}});
  CHECK(r.rank == 1);
  CHECK(r.r == Mat{{1, 2}});

  // [[0,1],[1,0]] reduces to the identity.
  RrefResult s = rref(Mat{{0, 1}, {1, 0}});
  CHECK(s.rank == 2);
  CHECK(s.r == Mat::identity(2));

  // Hand reduction: subtract rows, scale. [[2,4,6],[1,2,4]] -> [[1,2,0],[0,0,1]].
  RrefResult t = rref(Mat{{2, 4, 6}, {1, 2, 4}});
  CHECK(t.r == Mat{{1, 2, 0}, {0, 0, 1}});
  CHECK(t.pivots == std::vector<int>{0, 2});
}

TEST_CASE("rref preserves the row space (random)") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = static_cast<int>(rng.uniform_int(1, 5));
    int cols = static_cast<int>(rng.uniform_int(1, 5));
    Mat m(rows, cols);
    for (auto& x : m.a) x = rng.small_rat();
    Subspace s = Subspace::span(cols, [&] {
      std::vector<Vec> g;
      for (int i = 0; i < rows; ++i) g.push_back(m.row(i));
      return g;
    }());
    RrefResult r = rref(m);
    CHECK(r.rank == s.dim());
    for (int i = 0; i < r.rank; ++i) CHECK(s.contains(r.r.row(i)));
    for (int i = 0; i < rows; ++i) {
      Subspace rs = Subspace::span(cols, [&] {
        std::vector<Vec> g;
        for (int k = 0; k < r.rank; ++k) g.push_back(r.r.row(k));
        return g;
      }());
      CHECK(rs.contains(m.row(i)));
    }
  }
}

TEST_CASE("kernel basis: substitution oracle") {
  // {x1 + x2 = 0, x3 = 0} has kernel spanned by (-1, 1, 0).
  Mat m{{1, 1, 0}, {0, 0, 1}};
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{rat(-1), rat(1), rat(0)});

  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = static_cast<int>(rng.uniform_int(1, 4));
    int cols = static_cast<int>(rng.uniform_int(1, 5));
    Mat a(rows, cols);
    for (auto& x : a.a) x = rng.small_rat();
    auto ker = kernel_basis(a);
    CHECK(static_cast<int>(ker.size()) == cols - mat_rank(a));
    for (const auto& v : ker) CHECK(vec_is_zero(mat_apply(a, v)));  // direct substitution
  }
}

TEST_CASE("solve") {
  Mat a{{1, 2}, {3, 4}};
  auto x = solve(a, Vec{rat(5), rat(11)});
  REQUIRE(x.has_value());
  CHECK(vec_is_zero(vec_sub(mat_apply(a, *x), Vec{rat(5), rat(11)})));
  CHECK(!solve(Mat{{1, 1}, {1, 1}}, Vec{rat(0), rat(1)}).has_value());
}

TEST_CASE("subspace algebra") {
  Subspace a = Subspace::span(3, {Vec{rat(1), rat(0), rat(0)}, Vec{rat(0), rat(1), rat(0)}});
  Subspace b = Subspace::span(3, {Vec{rat(0), rat(1), rat(0)}, Vec{rat(0), rat(0), rat(1)}});
  CHECK(subspace_sum(a, b) == Subspace::full(3));
  Subspace c = subspace_intersect(a, b);
  CHECK(c.dim() == 1);
  CHECK(c.contains(Vec{rat(0), rat(5), rat(0)}));
  CHECK(complement_coordinates(a) == std::vector<int>{2});

  // Same span, different generators -> identical canonical representation.
  Subspace d = Subspace::span(3, {Vec{rat(1), rat(1), rat(0)}, Vec{rat(2), rat(0), rat(0)}});
  CHECK(d == a);
  auto coords = a.coordinates(Vec{rat(3), rat(-2), rat(0)});
  REQUIRE(coords.has_value());
  CHECK(*coords == Vec{rat(3), rat(-2)});
}

TEST_CASE("minimal polynomial: direct evaluation oracle") {
  // diag(1,2): (t-1)(t-2) = t^2 - 3t + 2, by multiplying out by hand.
  Poly p = minimal_polynomial(Mat{{1, 0}, {0, 2}});
  CHECK(p == Poly{rat(2), rat(-3), rat(1)});
  // Single nilpotent block: t^2.
  CHECK(minimal_polynomial(Mat{{0, 1}, {0, 0}}) == Poly{rat(0), rat(0), rat(1)});
  // Identity: t - 1.
  CHECK(minimal_polynomial(Mat::identity(3)) == Poly{rat(-1), rat(1)});

  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    int n = static_cast<int>(rng.uniform_int(1, 5));
    Mat m(n, n);
    for (auto& x : m.a) x = rng.small_rat(2);
    Poly mp = minimal_polynomial(m);
    CHECK(poly_eval_mat(mp, m).is_zero());  // annihilates
    CHECK(mp.back() == 1);                  // monic
    CHECK(poly_deg(mp) <= n);
  }
}

TEST_CASE("minimal polynomial minimality on companion-style cases") {
  // Companion matrix of t^3 - 2: minpoly must be the full cubic.
  Mat c{{0, 0, 2}, {1, 0, 0}, {0, 1, 0}};
  Poly p = minimal_polynomial(c);
  CHECK(p == Poly{rat(-2), rat(0), rat(0), rat(1)});
  // Two equal Jordan blocks: minpoly stays (t-1)^2 while charpoly is degree 4.
  Mat j(4, 4);
  j.at(0, 0) = 1; j.at(0, 1) = 1; j.at(1, 1) = 1;
  j.at(2, 2) = 1; j.at(2, 3) = 1; j.at(3, 3) = 1;
  CHECK(minimal_polynomial(j) == Poly{rat(1), rat(-2), rat(1)});
}

TEST_CASE("polynomial helpers") {
  Poly a{rat(-1), rat(0), rat(1)};  // t^2 - 1
  Poly b{rat(1), rat(1)};           // t + 1
  auto [q, r] = poly_divmod(a, b);
  CHECK(q == Poly{rat(-1), rat(1)});
  CHECK(r.empty());
  CHECK(poly_gcd(a, b) == poly_monic(b));
  CHECK(squarefree_part(Poly{rat(0), rat(0), rat(1)}) == Poly{rat(0), rat(1)});  // t^2 -> t
  auto x = poly_xgcd(Poly{rat(1), rat(1)}, Poly{rat(-1), rat(1)});
  // u(t+1) + v(t-1) = 1
  Poly lhs = poly_add(poly_mul(x.u, Poly{rat(1), rat(1)}), poly_mul(x.v, Poly{rat(-1), rat(1)}));
  CHECK(lhs == Poly{rat(1)});
  CHECK(poly_to_string(Poly{rat(2), rat(-3), rat(1)}) == "t^2 - 3*t + 2");
}

TEST_CASE("semisimplicity detection") {
  CHECK(is_semisimple_matrix(Mat{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  CHECK(!is_semisimple_matrix(Mat{{0, 1}, {0, 0}}));
  CHECK(is_semisimple_matrix(Mat{{0, 1}, {-1, 0}}));  // t^2 + 1, irreducible over Q
  CHECK(!is_semisimple_matrix(Mat{{1, 1}, {0, 1}}));
}

TEST_CASE("jordan decomposition hand case") {
  auto jd = jordan_decomposition(Mat{{1, 1}, {0, 1}});
  CHECK(jd.s == Mat::identity(2));
  CHECK(jd.n == Mat{{0, 1}, {0, 0}});
}

TEST_CASE("jordan decomposition property suite: 200 random 4x4") {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Mat m(4, 4);
    for (auto& x : m.a) x = rng.small_rat(2);
    auto [s, n] = jordan_decomposition(m);
    CHECK(mat_add(s, n) == m);
    CHECK(mat_mul_serial(s, n) == mat_mul_serial(n, s));
    // 4x4 nilpotent means fourth power vanishes.
    Mat n2 = mat_mul_serial(n, n);
    CHECK(mat_mul_serial(n2, n2).is_zero());
    CHECK(is_semisimple_matrix(s));
  }
}

TEST_CASE("rational roots") {
  // (t-1)(t+2)(t-1/2), expanded by hand: t^3 + 1/2 t^2 - 5/2 t + 1.
  Poly p{rat(1), rat(-5, 2), rat(1, 2), rat(1)};
  auto roots = rational_roots_if_split(p);
  REQUIRE(roots.has_value());
  std::vector<Rat> sorted = *roots;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<Rat>{rat(-2), rat(1, 2), rat(1)});
  CHECK(!rational_roots_if_split(Poly{rat(1), rat(0), rat(1)}).has_value());  // t^2 + 1
  CHECK(!rational_roots_if_split(Poly{rat(-2), rat(0), rat(1)}).has_value());  // t^2 - 2
  auto with_zero = rational_roots_if_split(Poly{rat(0), rat(0), rat(1)});  // t^2
  REQUIRE(with_zero.has_value());
  CHECK(with_zero->size() == 2);
}
