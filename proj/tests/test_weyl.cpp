#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "supersylow/families.hpp"
#include "supersylow/parallel.hpp"
#include "supersylow/weyl.hpp"

using namespace supersylow;

namespace {

WeylData wd_of(const std::string& text) {
  auto spec = parse_family_spec(text);
  REQUIRE(spec.has_value());
  return weyl_data(*spec);
}

std::string mat_key(const Mat& m) {
  std::string s;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      s += rat_to_string(m.at(i, j));
      s += ',';
    }
  return s;
}

std::set<std::string> key_set(const std::vector<Mat>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(mat_key(m));
  return out;
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("induced torus groups match the table rows with trivial count") {
  struct Row {
    const char* text;
    int wg;
  };
  // |W_G| = |W_N| and the count is 1 for every non-queer row.
  const Row rows[] = {
      {"sl(1|2)", 1},  {"sl(2|3)", 2},  {"sl(2|4)", 2}, {"psl(2|2)", 2},
      {"psl(3|3)", 6}, {"osp(3|2)", 2}, {"osp(5|2)", 2}, {"osp(2|4)", 1},
      {"osp(4|4)", 4}, {"pe(2)", 2},    {"pe(3)", 2},   {"spe(4)", 8},
      {"spe(5)", 8},
  };
  for (const auto& r : rows) {
    CAPTURE(r.text);
    WeylData wd = wd_of(r.text);
    CHECK(static_cast<int>(wd.w_g.size()) == r.wg);
    CHECK(wd.w_n.size() == wd.w_g.size());
    CHECK(key_set(wd.w_n) == key_set(wd.w_g));
    CHECK(third_sylow_count(wd) == 1);
  }
}

TEST_CASE("queer rows give the third-theorem counts") {
  struct Row {
    int n;
    int count;
  };
  // |W_G| = n!, |W_N| = 2^floor(n/2) * floor(n/2)!.
  const Row rows[] = {{2, 1}, {3, 3}, {4, 3}, {5, 15}, {6, 15}, {7, 105}};
  for (const auto& r : rows) {
    CAPTURE(r.n);
    WeylData wd = wd_of("psq(" + std::to_string(r.n) + ")");
    int half = r.n / 2;
    CHECK(static_cast<long>(wd.w_g.size()) == factorial(r.n));
    CHECK(static_cast<long>(wd.w_n.size()) == (1L << half) * factorial(half));
    CHECK(third_sylow_count(wd) == r.count);
    // Closed form: n! / (2^floor(n/2) * floor(n/2)!).
    CHECK(third_sylow_count(wd) ==
          factorial(r.n) / ((1L << half) * factorial(half)));
  }
}

TEST_CASE("induced groups are genuine groups") {
  for (const char* text : {"sl(2|3)", "psl(3|3)", "osp(4|4)", "spe(4)", "psq(4)"}) {
    CAPTURE(text);
    WeylData wd = wd_of(text);
    int d = static_cast<int>(wd.torus_dirs.size());
    REQUIRE(d > 0);

    auto keys = key_set(wd.w_g);
    CHECK(keys.size() == wd.w_g.size());  // no duplicates
    CHECK(keys.count(mat_key(Mat::identity(d))) == 1);

    // Closed under multiplication.
    for (const auto& a : wd.w_g)
      for (const auto& b : wd.w_g) CHECK(keys.count(mat_key(mat_mul_serial(a, b))) == 1);

    // The block-preserving subgroup sits inside, and is itself closed.
    auto nkeys = key_set(wd.w_n);
    for (const auto& k : nkeys) CHECK(keys.count(k) == 1);
    for (const auto& a : wd.w_n)
      for (const auto& b : wd.w_n)
        CHECK(nkeys.count(mat_key(mat_mul_serial(a, b))) == 1);
  }
}

TEST_CASE("torus directions and coordinate blocks are consistent") {
  WeylData wd = wd_of("sl(2|4)");
  CHECK(wd.coords == 6);
  CHECK(wd.torus_dirs.size() == 2);
  CHECK(wd.blocks.size() == 2);

  WeylData wo = wd_of("osp(4|4)");
  CHECK(wo.coords == 4);  // two so(4)-coordinates and two sp(4)-coordinates
  CHECK(wo.torus_dirs.size() == 2);

  WeylData wq = wd_of("psq(5)");
  CHECK(wq.coords == 5);
  CHECK(wq.torus_dirs.size() == 5);  // full torus
  REQUIRE(wq.blocks.size() == 3);
  CHECK(wq.blocks[2].size() == 1);  // odd leftover coordinate

  WeylData wp = wd_of("spe(4)");
  CHECK(wp.coords == 4);
  CHECK(wp.torus_dirs.size() == 2);
  // Directions live inside the diagonal coordinate space.
  for (const auto& v : wp.torus_dirs) CHECK(static_cast<int>(v.size()) == wp.coords);
}

TEST_CASE("families without a table row are rejected") {
  for (const char* text : {"gl(1|1)", "gl(2|3)", "q(2)", "sq(3)", "counterexample(2)",
                           "takiff(sl2)", "sl(2|2)"}) {
    CAPTURE(text);
    auto spec = parse_family_spec(text);
    REQUIRE(spec.has_value());
    // sl(n|n) has no table row of its own; the table routes it through psl.
    CHECK_THROWS_AS(weyl_data(*spec), std::invalid_argument);
  }
}

TEST_CASE("count requires the block subgroup to divide") {
  WeylData wd;
  wd.w_g.push_back(Mat::identity(2));
  wd.w_n.push_back(Mat::identity(2));
  Mat swap(2, 2);
  swap.at(0, 1) = rat(1);
  swap.at(1, 0) = rat(1);
  wd.w_n.push_back(swap);
  CHECK_THROWS_AS(third_sylow_count(wd), std::logic_error);
}
