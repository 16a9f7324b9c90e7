#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supersylow/families.hpp"

using namespace supersylow;

namespace {

FamilyAlgebra build(const std::string& text) {
  auto spec = parse_family_spec(text);
  REQUIRE(spec.has_value());
  return build_family(*spec);
}

void check_dims(const std::string& text, int de, int dodd) {
  FamilyAlgebra f = build(text);
  CAPTURE(text);
  CHECK(f.alg.dim_even == de);
  CHECK(f.alg.dim_odd == dodd);
}

void check_structure(const std::string& text) {
  FamilyAlgebra f = build(text);
  CAPTURE(text);
  CHECK(check_super_antisymmetry(f.alg));
  CHECK(check_jacobi(f.alg));
  CHECK(check_realization(f.alg));
}

}  // namespace

TEST_CASE("family spec parsing") {
  auto s = parse_family_spec("gl(2|3)");
  REQUIRE(s.has_value());
  CHECK(s->kind == FamilySpec::Kind::gl);
  CHECK(s->m == 2);
  CHECK(s->n == 3);
  CHECK(s->text == "gl(2|3)");

  auto t = parse_family_spec("takiff0(sl2*2;d=[1,-1])");
  REQUIRE(t.has_value());
  CHECK(t->atoms == std::vector<std::string>{"sl2", "sl2"});
  CHECK(t->deriv == std::vector<Rat>{rat(1), rat(-1)});
  CHECK(t->text == "takiff0(sl2*2;d=[1,-1])");

  auto u = parse_family_spec("takiff0(sl2+sl3;d=[1,-1])");
  REQUIRE(u.has_value());
  CHECK(u->atoms == std::vector<std::string>{"sl2", "sl3"});

  CHECK(parse_family_spec("counterexample(2)").has_value());
  CHECK(parse_family_spec("osp( 3 | 2 )").has_value());

  CHECK(!parse_family_spec("psl(2|3)").has_value());   // psl needs m = n
  CHECK(!parse_family_spec("osp(2|3)").has_value());   // odd symplectic size
  CHECK(!parse_family_spec("takiff0(sl2*2;d=[1])").has_value());
  CHECK(!parse_family_spec("takiff0(so2;d=[1])").has_value());  // so2 is not semisimple
  CHECK(!parse_family_spec("foo(3)").has_value());
  CHECK(!parse_family_spec("gl(2,3)").has_value());
  CHECK(!parse_family_spec("q(0)").has_value());
}

TEST_CASE("family dimension formulas") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      if (m + n < 2) continue;
      check_dims("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", m * m + n * n,
                 2 * m * n);
      check_dims("sl(" + std::to_string(m) + "|" + std::to_string(n) + ")", m * m + n * n - 1,
                 2 * m * n);
    }
  for (int n = 2; n <= 3; ++n)
    check_dims("psl(" + std::to_string(n) + "|" + std::to_string(n) + ")", 2 * n * n - 2,
               2 * n * n);
  for (int m = 1; m <= 5; ++m)
    for (int k = 2; k <= 4; k += 2)
      check_dims("osp(" + std::to_string(m) + "|" + std::to_string(k) + ")",
                 m * (m - 1) / 2 + (k / 2) * (k + 1), m * k);
  for (int n = 1; n <= 4; ++n) {
    check_dims("q(" + std::to_string(n) + ")", n * n, n * n);
    check_dims("sq(" + std::to_string(n) + ")", n * n, n * n - 1);
    check_dims("psq(" + std::to_string(n) + ")", n * n - 1, n * n - 1);
    check_dims("pe(" + std::to_string(n) + ")", n * n, n * n);
    check_dims("spe(" + std::to_string(n) + ")", n * n - 1, n * n);
    check_dims("counterexample(" + std::to_string(n) + ")", n * n, n * n + 1);
  }
  check_dims("takiff(sl2)", 3, 3);
  check_dims("takiff(sl2+sl3)", 11, 11);
  check_dims("takiff0(sl2*2;d=[1,-1])", 6, 7);
  check_dims("takiff0(sl2+sl3;d=[1,-1])", 11, 12);
  check_dims("osp(3|0)", 3, 0);   // so(3)
  check_dims("osp(0|4)", 10, 0);  // sp(4)
  check_dims("sl(3|0)", 8, 0);
}

TEST_CASE("family structure checks") {
  for (const char* text :
       {"gl(2|1)", "sl(2|2)", "psl(2|2)", "osp(3|2)", "osp(2|4)", "osp(4|2)", "pe(2)", "spe(3)",
        "q(2)", "sq(3)", "psq(3)", "counterexample(2)", "takiff(sl2)"})
    check_structure(text);
  // abstract families carry no realization; Jacobi still must hold
  for (const char* text : {"takiff0(sl2*2;d=[1,-1])", "takiff0(sl2+sl3;d=[1,-1])",
                           "takiff0(sl2*2;d=[1,0])"}) {
    FamilyAlgebra f = build(text);
    CAPTURE(text);
    CHECK(check_super_antisymmetry(f.alg));
    CHECK(check_jacobi(f.alg));
    CHECK(!f.alg.realization.has_value());
  }
}

TEST_CASE("jacobi parallel agrees with serial") {
  FamilyAlgebra f = build("sl(2|2)");
  CHECK(check_jacobi_serial(f.alg) == check_jacobi_par(f.alg));
}

TEST_CASE("matrix coordinates") {
  FamilyAlgebra f = build("sl(2|2)");
  // supertraceless matrices resolve, others do not
  Mat x(4, 4);
  x.at(0, 0) = 1;
  x.at(2, 2) = 1;  // str = 1 - 1 = 0
  auto c = f.coords_of(x);
  REQUIRE(c.has_value());
  CHECK(f.alg.realize(*c) == x);
  Mat y(4, 4);
  y.at(0, 0) = 1;  // str = 1
  CHECK(!f.coords_of(y).has_value());

  FamilyAlgebra g = build("psl(2|2)");
  // the identity maps to zero in the quotient
  auto zc = g.coords_of(Mat::identity(4));
  REQUIRE(zc.has_value());
  CHECK(vec_is_zero(*zc));
}

TEST_CASE("family defect") {
  CHECK(family_defect(*parse_family_spec("gl(2|3)")) == 2);
  CHECK(family_defect(*parse_family_spec("sl(1|2)")) == 1);
  CHECK(family_defect(*parse_family_spec("osp(5|2)")) == 1);
  CHECK(family_defect(*parse_family_spec("osp(4|4)")) == 2);
  CHECK(family_defect(*parse_family_spec("osp(2|4)")) == 1);
  CHECK(family_defect(*parse_family_spec("pe(5)")) == 2);
  CHECK(family_defect(*parse_family_spec("psq(5)")) == 2);
  CHECK(family_defect(*parse_family_spec("counterexample(2)")) == 0);
}

TEST_CASE("sylow candidate dimensions and closure") {
  auto probe = [](const std::string& text, int de, int dodd) {
    FamilyAlgebra f = build(text);
    auto o = sylow_candidate(f);
    CAPTURE(text);
    REQUIRE(o.has_value());
    CHECK(o->even_dim == de);
    CHECK(o->odd_dim() == dodd);
    CHECK(is_subalgebra(f.alg, *o));
  };
  probe("sl(1|2)", 1, 2);
  probe("sl(2|3)", 2, 4);
  probe("sl(2|4)", 2, 4);
  probe("psl(2|2)", 1, 4);
  probe("psl(3|3)", 2, 6);
  probe("osp(3|2)", 1, 2);
  probe("osp(5|2)", 1, 2);
  probe("osp(2|4)", 1, 2);
  probe("osp(4|4)", 2, 4);
  probe("pe(2)", 3, 4);
  probe("pe(3)", 3, 5);
  probe("spe(4)", 6, 8);
  probe("spe(5)", 6, 9);
  probe("psq(2)", 3, 3);
  probe("psq(3)", 4, 4);
  probe("psq(4)", 7, 7);
  probe("psq(5)", 8, 8);
  CHECK(!sylow_candidate(build("counterexample(2)")).has_value());
}

TEST_CASE("candidate torus dimensions") {
  auto torus_dim = [](const std::string& text) {
    FamilyAlgebra f = build(text);
    GradedSubspace t = candidate_torus(f);
    CHECK(t.odd_dim() == 0);
    CHECK(is_subalgebra(f.alg, t));
    return t.dim();
  };
  CHECK(torus_dim("gl(2|3)") == 5);
  CHECK(torus_dim("sl(2|3)") == 4);
  CHECK(torus_dim("psl(2|2)") == 2);
  CHECK(torus_dim("osp(3|2)") == 2);
  CHECK(torus_dim("osp(4|4)") == 4);
  CHECK(torus_dim("pe(2)") == 2);
  CHECK(torus_dim("spe(3)") == 2);
  CHECK(torus_dim("q(3)") == 3);
  CHECK(torus_dim("psq(3)") == 2);
  CHECK(torus_dim("counterexample(2)") == 2);
}

TEST_CASE("named comparison algebras") {
  auto dims = [](const std::string& name) {
    auto a = named_algebra(name);
    CAPTURE(name);
    REQUIRE(a.has_value());
    CHECK(check_super_antisymmetry(*a));
    CHECK(check_jacobi(*a));
    return std::pair<int, int>{a->dim_even, a->dim_odd};
  };
  using P = std::pair<int, int>;
  CHECK(dims("sl(1|1)") == P{1, 2});
  CHECK(dims("sl(1|1)^2") == P{2, 4});
  CHECK(dims("p(sl(1|1)^2)") == P{1, 4});
  CHECK(dims("p(sl(1|1)^3)") == P{2, 6});
  CHECK(dims("s(gl(1|1)*gl(1))") == P{2, 2});
  CHECK(dims("s(gl(1|1)^2*gl(1))") == P{4, 4});
  CHECK(dims("s(gl(1|1)^2*gl(2))") == P{7, 4});
  CHECK(dims("ps(gl(1|1)^2)") == P{2, 4});
  CHECK(dims("ps(gl(1|1)^3)") == P{4, 6});
  CHECK(dims("gl(1|1)*so(1)") == P{2, 2});
  CHECK(dims("gl(1|1)*so(3)") == P{5, 2});
  CHECK(dims("gl(1|1)*sp(2)") == P{5, 2});
  CHECK(dims("gl(1|1)^2") == P{4, 4});
  CHECK(dims("pe(2)") == P{4, 4});
  CHECK(dims("pe(2)*pe(1)") == P{5, 5});
  CHECK(dims("spe(2)*spe(1)") == P{3, 5});
  CHECK(dims("spe(2)^2") == P{6, 8});
  CHECK(dims("s(pe(2)^2)") == P{7, 8});
  CHECK(dims("s(pe(2)^2*pe(1))") == P{8, 9});
  CHECK(dims("ps(q(2)*q(1))") == P{4, 4});
  CHECK(dims("ps(q(2)^2)") == P{7, 7});
  CHECK(dims("ps(q(2)^2*q(1))") == P{8, 8});
  CHECK(dims("psq(2)") == P{3, 3});

  CHECK(!named_algebra("s(so(3))").has_value());  // no canonical trace to cut
  CHECK(!named_algebra("p(pe(2))").has_value());  // no identity-type central element
  CHECK(!named_algebra("foo(3)").has_value());
  CHECK(!named_algebra("gl(1|1)*").has_value());
}
