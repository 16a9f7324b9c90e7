#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supersylow/families.hpp"
#include "supersylow/fdmodule.hpp"
#include "supersylow/rng.hpp"
#include "supersylow/structure.hpp"

using namespace supersylow;

namespace {

FamilyAlgebra buildf(const std::string& text) {
  auto spec = parse_family_spec(text);
  REQUIRE(spec.has_value());
  return build_family(*spec);
}

SuperAlgebra build(const std::string& text) { return buildf(text).alg; }

Vec odd_unit(const SuperAlgebra& a, int k) {
  Vec x(a.dim(), Rat(0));
  x[a.dim_even + k] = 1;
  return x;
}

// sparse rejection sampler for odd x with [x,x] = 0; falls back to x = 0
Vec self_commuting_odd(const SuperAlgebra& a, Rng& rng, int tries = 80) {
  for (int t = 0; t < tries; ++t) {
    Vec x(a.dim(), Rat(0));
    int terms = 1 + static_cast<int>(rng.uniform_int(0, 2));
    for (int s = 0; s < terms; ++s) {
      int k = static_cast<int>(rng.uniform_int(0, a.dim_odd - 1));
      Rat c = rng.small_rat();
      x[a.dim_even + k] += c == 0 ? Rat(1) : c;
    }
    if (vec_is_zero(x)) continue;
    if (vec_is_zero(a.bracket(x, x))) return x;
  }
  return Vec(a.dim(), Rat(0));
}

// the central-character (1|1)-dimensional module of sl(1|1)
FdModule sl11_char_module(const SuperAlgebra& a, const Rat& lambda) {
  REQUIRE(a.dim_even == 1);
  REQUIRE(a.dim_odd == 2);
  FdModule m;
  m.dim_even = 1;
  m.dim_odd = 1;
  Mat rc(2, 2), rx(2, 2), ry(2, 2);
  rc.at(0, 0) = lambda;
  rc.at(1, 1) = lambda;
  rx.at(1, 0) = 1;       // even line -> odd line
  ry.at(0, 1) = lambda;  // odd line -> even line
  m.action = {rc, rx, ry};
  return m;
}

RootDatum full_root_datum(const SuperAlgebra& a) {
  Vec zero(a.dim(), Rat(0));
  return root_decomposition(a, cartan_from_element(a, zero));
}

std::optional<RootDatum> split_root_datum(const SuperAlgebra& a, uint64_t seed, int tries = 200) {
  Rng rng(seed);
  for (int t = 0; t < tries; ++t) {
    Vec odd = rng.small_vec_nonzero(a.dim_odd);
    Vec x(a.dim(), Rat(0));
    for (int i = 0; i < a.dim_odd; ++i) x[a.dim_even + i] = odd[i];
    if (vec_is_zero(a.bracket(x, x))) continue;
    if (!is_homological(a, x)) continue;
    try {
      return root_decomposition(a, cartan_from_element(a, x));
    } catch (const std::runtime_error&) {
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("module validation") {
  FamilyAlgebra gl11 = buildf("gl(1|1)");
  auto std11 = standard_module(gl11);
  REQUIRE(std11.has_value());
  CHECK(check_module(gl11.alg, *std11).empty());
  CHECK(sdim(*std11) == 0);

  SuperAlgebra sl11 = build("sl(1|1)");
  CHECK(check_module(sl11, trivial_module(sl11)).empty());
  CHECK(sdim(trivial_module(sl11)) == 1);

  for (const char* name : {"gl(1|1)", "sq(2)", "osp(1|2)", "spe(2)", "q(2)"}) {
    SuperAlgebra a = build(name);
    CAPTURE(name);
    CHECK(check_module(a, adjoint_module(a)).empty());
  }

  // corrupt a bracket relation
  FdModule bad = *std11;
  bad.action[gl11.alg.dim_even].at(1, 0) += 1;
  CHECK(!check_module(gl11.alg, bad).empty());

  // corrupt the parity block structure
  FdModule bad2 = *std11;
  bad2.action[0].at(1, 0) = 7;  // even element mapping even line to odd line
  auto v = check_module(gl11.alg, bad2);
  REQUIRE(!v.empty());
  CHECK(v[0].find("parity") != std::string::npos);

  // quotient families have no faithful matrix realization
  CHECK(!standard_module(buildf("psq(3)")).has_value());
  CHECK(!standard_module(buildf("psl(2|2)")).has_value());
}

TEST_CASE("module constructions stay valid") {
  for (const char* name : {"gl(1|1)", "sq(2)", "osp(1|2)"}) {
    CAPTURE(name);
    FamilyAlgebra f = buildf(name);
    const SuperAlgebra& a = f.alg;
    auto std_m = standard_module(f);
    REQUIRE(std_m.has_value());
    CHECK(check_module(a, *std_m).empty());
    CHECK(check_module(a, dual_module(a, *std_m)).empty());
    CHECK(check_module(a, dual_module(a, adjoint_module(a))).empty());
    FdModule t = tensor_module(a, *std_m, *std_m);
    CHECK(check_module(a, t).empty());
    CHECK(sdim(t) == sdim(*std_m) * sdim(*std_m));
    FdModule s = direct_sum_module(*std_m, adjoint_module(a));
    CHECK(check_module(a, s).empty());
    CHECK(sdim(s) == sdim(*std_m) + sdim(adjoint_module(a)));
    CHECK(check_module(a, tensor_module(a, *std_m, dual_module(a, *std_m))).empty());
  }
}

TEST_CASE("module restriction to a subalgebra") {
  FamilyAlgebra gl22 = buildf("gl(2|2)");
  auto o = sylow_candidate(gl22);
  REQUIRE(o.has_value());
  ExtractedAlgebra sub = subalgebra_as_algebra(gl22.alg, *o);
  auto std_m = standard_module(gl22);
  REQUIRE(std_m.has_value());
  FdModule r = restrict_module(*std_m, sub);
  CHECK(r.dim_even == 2);
  CHECK(r.dim_odd == 2);
  CHECK(check_module(sub.alg, r).empty());
}

TEST_CASE("ds at zero is the identity on dimensions") {
  for (const char* name : {"gl(1|1)", "sq(2)", "spe(2)"}) {
    CAPTURE(name);
    FamilyAlgebra f = buildf(name);
    std::vector<FdModule> mods{adjoint_module(f.alg), trivial_module(f.alg)};
    if (auto s = standard_module(f)) mods.push_back(*s);
    Vec zero(f.alg.dim(), Rat(0));
    for (const FdModule& m : mods) {
      DsResult d = ds(f.alg, m, zero);
      CHECK(d.output_dims.first == m.dim_even);
      CHECK(d.output_dims.second == m.dim_odd);
      CHECK(d.kernel_dim.first == m.dim_even);
      CHECK(d.kernel_dim.second == m.dim_odd);
      CHECK(d.image_cap_kernel_dim.first == 0);
      CHECK(d.image_cap_kernel_dim.second == 0);
      CHECK(static_cast<int>(d.representatives.size()) == m.dim());
    }
  }
}

TEST_CASE("ds on standard modules") {
  // rank-one square-zero element kills one line of each parity
  FamilyAlgebra gl11 = buildf("gl(1|1)");
  auto m11 = standard_module(gl11);
  REQUIRE(m11.has_value());
  Mat e12(2, 2);
  e12.at(0, 1) = 1;
  auto x11 = gl11.coords_of(e12);
  REQUIRE(x11.has_value());
  DsResult d1 = ds(gl11.alg, *m11, *x11);
  CHECK(d1.kernel_dim == std::pair<int, int>{1, 0});
  CHECK(d1.image_cap_kernel_dim == std::pair<int, int>{1, 0});
  CHECK(d1.output_dims == std::pair<int, int>{0, 0});

  FamilyAlgebra gl22 = buildf("gl(2|2)");
  auto m22 = standard_module(gl22);
  REQUIRE(m22.has_value());
  Mat e13(4, 4);
  e13.at(0, 2) = 1;
  auto x22 = gl22.coords_of(e13);
  REQUIRE(x22.has_value());
  DsResult d2 = ds(gl22.alg, *m22, *x22);
  CHECK(d2.output_dims == std::pair<int, int>{1, 1});

  FamilyAlgebra gl32 = buildf("gl(3|2)");
  auto m32 = standard_module(gl32);
  REQUIRE(m32.has_value());
  Mat e14(5, 5);
  e14.at(0, 3) = 1;
  auto x32 = gl32.coords_of(e14);
  REQUIRE(x32.has_value());
  DsResult d3 = ds(gl32.alg, *m32, *x32);
  CHECK(d3.output_dims == std::pair<int, int>{2, 1});
  for (const Vec& r : d3.representatives) CHECK(!vec_is_zero(r));
}

TEST_CASE("ds with nonzero semisimple square") {
  FamilyAlgebra gl11 = buildf("gl(1|1)");
  Mat sym(2, 2);
  sym.at(0, 1) = 1;
  sym.at(1, 0) = 1;
  auto x = gl11.coords_of(sym);
  REQUIRE(x.has_value());
  REQUIRE(!vec_is_zero(gl11.alg.bracket(*x, *x)));

  // standard module: [x,x] acts by an invertible scalar, so nothing survives
  auto m = standard_module(gl11);
  REQUIRE(m.has_value());
  DsResult d1 = ds(gl11.alg, *m, *x);
  CHECK(d1.kernel_dim == std::pair<int, int>{0, 0});
  CHECK(d1.output_dims == std::pair<int, int>{0, 0});

  // adjoint module: kernel and image of ad(x) coincide on the centralizer
  DsResult d2 = ds(gl11.alg, adjoint_module(gl11.alg), *x);
  CHECK(d2.kernel_dim == std::pair<int, int>{1, 1});
  CHECK(d2.image_cap_kernel_dim == std::pair<int, int>{1, 1});
  CHECK(d2.output_dims == std::pair<int, int>{0, 0});
}

TEST_CASE("ds error paths") {
  // non-semisimple square: any nonzero odd element of osp(1|2)
  FamilyAlgebra osp = buildf("osp(1|2)");
  auto m = standard_module(osp);
  REQUIRE(m.has_value());
  CHECK_THROWS_AS(ds(osp.alg, *m, odd_unit(osp.alg, 0)), std::invalid_argument);

  // even input rejected
  FamilyAlgebra gl11 = buildf("gl(1|1)");
  Vec even(gl11.alg.dim(), Rat(0));
  even[0] = 1;
  CHECK_THROWS_AS(ds(gl11.alg, *standard_module(gl11), even), std::invalid_argument);

  // corrupted action: ρ(x)² no longer matches ρ([x,x])/2
  FdModule bad = *standard_module(gl11);
  bad.action[gl11.alg.dim_even] = mat_scale(rat(2), bad.action[gl11.alg.dim_even]);
  Mat sym(2, 2);
  sym.at(0, 1) = 1;
  sym.at(1, 0) = 1;
  auto x = gl11.coords_of(sym);
  REQUIRE(x.has_value());
  CHECK_THROWS_AS(ds(gl11.alg, bad, *x), std::invalid_argument);
}

TEST_CASE("weight spaces") {
  FamilyAlgebra sl2 = buildf("sl(2|0)");
  RootDatum rd2 = root_decomposition(sl2.alg, candidate_torus(sl2));
  auto wtriv = weight_spaces(sl2.alg, trivial_module(sl2.alg), rd2);
  REQUIRE(wtriv.size() == 1);
  CHECK(wtriv.begin()->first == Vec{Rat(0)});
  CHECK(wtriv.begin()->second == std::pair<int, int>{1, 0});

  // standard module of sq(2): two weights, each of graded dimension (1,1)
  FamilyAlgebra sq2 = buildf("sq(2)");
  std::vector<Vec> cartan_gens;
  for (int d = 0; d < 2; ++d) {
    Mat diag(4, 4);
    diag.at(d, d) = 1;
    diag.at(2 + d, 2 + d) = 1;
    auto c = sq2.coords_of(diag);
    REQUIRE(c.has_value());
    cartan_gens.push_back(*c);
  }
  Mat ho(4, 4);
  ho.at(0, 2) = 1;
  ho.at(1, 3) = -1;
  ho.at(2, 0) = 1;
  ho.at(3, 1) = -1;
  auto hodd = sq2.coords_of(ho);
  REQUIRE(hodd.has_value());
  cartan_gens.push_back(*hodd);
  GradedSubspace h = graded_span_checked(sq2.alg, cartan_gens);
  REQUIRE(h.even_dim == 2);
  REQUIRE(h.odd_dim() == 1);
  RootDatum rdq = root_decomposition(sq2.alg, h);
  CHECK(rdq.roots.size() == 2);
  auto mstd = standard_module(sq2);
  REQUIRE(mstd.has_value());
  auto wq = weight_spaces(sq2.alg, *mstd, rdq);
  REQUIRE(wq.size() == 2);
  for (const auto& [wt, dims] : wq) CHECK(dims == std::pair<int, int>{1, 1});

  // adjoint module of sl(1|1) is concentrated at weight zero with sdim -1
  SuperAlgebra sl11 = build("sl(1|1)");
  RootDatum rd11 = full_root_datum(sl11);
  auto wadj = weight_spaces(sl11, adjoint_module(sl11), rd11);
  REQUIRE(wadj.size() == 1);
  CHECK(wadj.begin()->second == std::pair<int, int>{1, 2});
}

TEST_CASE("weight spaces of simple-type modules have superdimension zero") {
  // central-character module of sl(1|1)
  SuperAlgebra sl11 = build("sl(1|1)");
  FdModule chi = sl11_char_module(sl11, rat(3));
  REQUIRE(check_module(sl11, chi).empty());
  RootDatum rd11 = full_root_datum(sl11);
  for (const auto& [wt, dims] : weight_spaces(sl11, chi, rd11)) {
    CHECK(wt == Vec{Rat(3)});
    CHECK(dims.first == dims.second);
  }

  // standard module of spe(2) over a generic Cartan
  FamilyAlgebra spe2 = buildf("spe(2)");
  auto rds = split_root_datum(spe2.alg, 67);
  REQUIRE(rds.has_value());
  auto ms = standard_module(spe2);
  REQUIRE(ms.has_value());
  int te = 0, to = 0;
  for (const auto& [wt, dims] : weight_spaces(spe2.alg, *ms, *rds)) {
    CHECK(dims.first == dims.second);
    te += dims.first;
    to += dims.second;
  }
  CHECK(te == 2);
  CHECK(to == 2);
}

TEST_CASE("weight spaces reject non-diagonalizable torus actions") {
  // a valid sl(1|1)-module where the centre acts nilpotently (not semisimple
  // over the even part, hence outside the paper-style module category)
  SuperAlgebra sl11 = build("sl(1|1)");
  FdModule m;
  m.dim_even = 2;
  m.dim_odd = 2;
  // ρ(x) has block A = [[0,1],[0,0]] (even→odd), ρ(y) has block B = id
  // (odd→even); then ρ(c) = [[BA,0],[0,AB]] is nilpotent nonzero
  Mat rc(4, 4), rx(4, 4), ry(4, 4);
  rc.at(0, 1) = 1;
  rc.at(2, 3) = 1;
  rx.at(2, 1) = 1;
  ry.at(0, 2) = 1;
  ry.at(1, 3) = 1;
  m.action = {rc, rx, ry};
  REQUIRE(check_module(sl11, m).empty());
  RootDatum rd11 = full_root_datum(sl11);
  CHECK_THROWS_AS(weight_spaces(sl11, m, rd11), std::invalid_argument);
}

TEST_CASE("superdimension is preserved by ds") {
  std::vector<std::string> names{"gl(2|2)", "sl(2|3)", "osp(3|2)", "q(2)", "sq(2)",
                                 "pe(2)",   "spe(3)",  "psq(3)",   "psl(2|2)"};
  Rng rng(71);
  int triples = 0;
  for (int round = 0; triples < 100; ++round) {
    FamilyAlgebra f = buildf(names[round % names.size()]);
    std::vector<FdModule> mods{adjoint_module(f.alg)};
    if (auto s = standard_module(f)) {
      mods.push_back(*s);
      mods.push_back(tensor_module(f.alg, *s, *s));
    }
    Vec x = self_commuting_odd(f.alg, rng);
    for (const FdModule& m : mods) {
      DsResult d = ds(f.alg, m, x);
      CHECK(d.output_dims.first - d.output_dims.second == sdim(m));
      ++triples;
    }
  }
  CHECK(triples >= 100);
}

TEST_CASE("ds respects direct sums") {
  std::vector<std::string> names{"gl(2|2)", "sq(2)", "q(2)"};
  Rng rng(73);
  for (int round = 0; round < 30; ++round) {
    FamilyAlgebra f = buildf(names[round % names.size()]);
    auto s = standard_module(f);
    REQUIRE(s.has_value());
    std::vector<FdModule> pool{adjoint_module(f.alg), *s, dual_module(f.alg, *s),
                               trivial_module(f.alg)};
    const FdModule& m1 = pool[rng.uniform_int(0, pool.size() - 1)];
    const FdModule& m2 = pool[rng.uniform_int(0, pool.size() - 1)];
    Vec x = self_commuting_odd(f.alg, rng);
    DsResult da = ds(f.alg, m1, x);
    DsResult db = ds(f.alg, m2, x);
    DsResult dsum = ds(f.alg, direct_sum_module(m1, m2), x);
    CHECK(dsum.output_dims.first == da.output_dims.first + db.output_dims.first);
    CHECK(dsum.output_dims.second == da.output_dims.second + db.output_dims.second);
  }
}

TEST_CASE("module json round trip") {
  FamilyAlgebra gl21 = buildf("gl(2|1)");
  auto m = standard_module(gl21);
  REQUIRE(m.has_value());
  std::string text = module_to_json(*m);
  FdModule back = module_from_json(text);
  CHECK(back.dim_even == m->dim_even);
  CHECK(back.dim_odd == m->dim_odd);
  REQUIRE(back.action.size() == m->action.size());
  for (size_t i = 0; i < back.action.size(); ++i) CHECK(back.action[i] == m->action[i]);
  CHECK(check_module(gl21.alg, back).empty());
  CHECK_THROWS(module_from_json("{\"dim_even\":1"));
}
