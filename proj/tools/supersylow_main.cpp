// supersylow: batch verification driver and report emitter.
//
//   supersylow verify <table> [flags]   run a verification suite
//   supersylow analyze <file> [flags]   structural dossier for an algebra JSON
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage/schema error.

#include "supersylow/algebra_io.hpp"
#include "supersylow/fdmodule.hpp"
#include "supersylow/parallel.hpp"
#include "supersylow/relcoh.hpp"
#include "supersylow/report.hpp"
#include "supersylow/sylow.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

using namespace supersylow;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  std::string table;   // verify subcommand
  std::string file;    // analyze input
  int max_rank = 5;
  std::string family;  // empty = all families
  std::optional<int> nparam;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out_dir = "reports";
  std::string format = "md";
  bool roots = false;
};

// canonical small-rank instances of each verified family; block is the
// per-family block count the tables are parameterized by (-1 where the
// family has two independent parameters)
struct RowEntry {
  const char* text;
  const char* family;
  int max_param;
  int block;
};

constexpr RowEntry kRowPool[] = {
    {"sl(1|2)", "sl", 2, -1},   {"sl(2|3)", "sl", 3, -1},
    {"sl(2|4)", "sl", 4, -1},   {"psl(2|2)", "psl", 2, 2},
    {"psl(3|3)", "psl", 3, 3},  {"osp(3|2)", "osp", 3, -1},
    {"osp(5|2)", "osp", 5, -1}, {"osp(2|4)", "osp", 4, -1},
    {"osp(4|4)", "osp", 4, -1}, {"pe(2)", "pe", 2, 1},
    {"pe(3)", "pe", 3, 1},      {"spe(4)", "spe", 4, 2},
    {"spe(5)", "spe", 5, 2},    {"psq(2)", "psq", 2, 1},
    {"psq(3)", "psq", 3, 1},    {"psq(4)", "psq", 4, 2},
    {"psq(5)", "psq", 5, 2},
};

const char* kExceptionalNote =
    "\n---\n"
    "exceptional families d(2,1;a), ag(1|2) and ab(1|3) are outside the "
    "modeled family set and are not verified.\n";

void print_help() {
  std::printf(
      "supersylow %s\n"
      "\n"
      "usage:\n"
      "  supersylow verify <table> [flags]\n"
      "  supersylow analyze <file.json> [--roots] [--seed N]\n"
      "\n"
      "tables:\n"
      "  sylow                distinguished subalgebra rows\n"
      "  normalizers          normalizer rows and torus containment\n"
      "  weyl                 induced Weyl groups and coset counts\n"
      "  zero-classification  0-superalgebra certificates for the named corpus\n"
      "  counterexample       maximal-but-not-distinguished subalgebra of gl(n|n)\n"
      "  ds                   superdimension invariance and rank-1 evaluations\n"
      "  ext                  Ext^1 vanishing and restriction injectivity\n"
      "\n"
      "flags:\n"
      "  --max-rank N   keep rows with every structural parameter <= N (default 5)\n"
      "  --family F     restrict to one family: sl psl osp pe spe psq\n"
      "  --n K          block parameter: rows with K blocks (psl/pe/spe/psq),\n"
      "                 or the size for `verify counterexample`\n"
      "  --seed N       RNG seed (default 0; env SUPERSYLOW_SEED, flag wins)\n"
      "  --jobs N       verify rows concurrently with N threads (default 1)\n"
      "  --out DIR      report directory (default ./reports)\n"
      "  --format F     stdout format: md (default) or json\n"
      "  --roots        analyze only: root decomposition from a generic element\n"
      "\n"
      "verify writes one JSON report per row plus <table>_summary.md into --out.\n"
      "exit codes: 0 all-pass, 1 verification failure, 2 usage/schema error.\n",
      kVersion);
}

int usage_error(const std::string& msg) {
  std::fprintf(stderr, "usage error: %s\n", msg.c_str());
  std::fprintf(stderr, "run `supersylow --help` for usage\n");
  return 2;
}

std::optional<long> parse_long(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (end == nullptr || *end != '\0') return std::nullopt;
  return v;
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (std::isalnum(static_cast<unsigned char>(ch)))
      out += ch;
    else if (!out.empty() && out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

std::string dims(int e, int o) {
  return "(" + std::to_string(e) + "|" + std::to_string(o) + ")";
}

std::string dims(const std::pair<int, int>& p) { return dims(p.first, p.second); }

std::string dims(const GradedSubspace& s) { return dims(s.even_dim, s.odd_dim()); }

CheckResult check(const std::string& name, bool pass, const std::string& expected,
                  const std::string& observed, const std::string& source) {
  CheckResult c;
  c.name = name;
  c.pass = pass;
  c.expected = expected;
  c.observed = observed;
  c.source = source;
  return c;
}

bool write_file(const fs::path& p, const std::string& content, std::string* err) {
  std::ofstream f(p, std::ios::binary);
  if (!f) {
    *err = "cannot open " + p.string();
    return false;
  }
  f << content;
  f.flush();
  if (!f) {
    *err = "cannot write " + p.string();
    return false;
  }
  return true;
}

// write per-row JSON files and the markdown summary, print per --format,
// return the final exit code
int emit_reports(const std::string& table, const std::string& title,
                 const std::vector<VerificationReport>& reps, const Options& o,
                 bool with_exceptional_note = false) {
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "io error: cannot create %s: %s\n", o.out_dir.c_str(),
                 ec.message().c_str());
    return 2;
  }
  std::string err;
  for (const auto& r : reps) {
    fs::path p = fs::path(o.out_dir) / (sanitize(r.row) + ".json");
    if (!write_file(p, report_to_json(r), &err)) {
      std::fprintf(stderr, "io error: %s\n", err.c_str());
      return 2;
    }
  }
  std::string md = reports_to_markdown(reps, title);
  if (with_exceptional_note) md += kExceptionalNote;
  fs::path sp = fs::path(o.out_dir) / (sanitize(table) + "_summary.md");
  if (!write_file(sp, md, &err)) {
    std::fprintf(stderr, "io error: %s\n", err.c_str());
    return 2;
  }
  if (o.format == "json")
    std::fputs(reports_to_json(reps).c_str(), stdout);
  else
    std::fputs(md.c_str(), stdout);
  for (const auto& r : reps)
    if (!r.pass()) return 1;
  return 0;
}

VerificationReport error_report(const std::string& row, std::uint64_t seed,
                                const std::string& what) {
  VerificationReport r;
  r.row = row;
  r.seed = seed;
  r.checks.push_back(check("error", false, "no exception", what, "computed"));
  return r;
}

// ----- row selection --------------------------------------------------------

bool two_parameter_family(const std::string& f) {
  return f == "sl" || f == "osp" || f == "gl";
}

std::optional<std::vector<FamilySpec>> pool_rows(const Options& o, std::string* err) {
  static const std::vector<std::string> known = {"sl", "psl", "osp", "pe", "spe", "psq"};
  if (!o.family.empty() &&
      std::find(known.begin(), known.end(), o.family) == known.end()) {
    *err = "unknown family `" + o.family + "`; expected one of sl psl osp pe spe psq";
    return std::nullopt;
  }
  if (o.nparam) {
    if (o.family.empty()) {
      *err = "--n needs --family for this table";
      return std::nullopt;
    }
    if (two_parameter_family(o.family)) {
      *err = "--n applies to one-parameter families (psl, pe, spe, psq); use "
             "--max-rank for " + o.family;
      return std::nullopt;
    }
  }
  std::vector<FamilySpec> rows;
  for (const RowEntry& r : kRowPool) {
    if (!o.family.empty() && o.family != r.family) continue;
    if (r.max_param > o.max_rank) continue;
    if (o.nparam && r.block != *o.nparam) continue;
    auto spec = parse_family_spec(r.text);
    if (spec) rows.push_back(*spec);
  }
  if (rows.empty()) {
    *err = "no rows selected by the given filters";
    return std::nullopt;
  }
  return rows;
}

// ----- verify: sylow / normalizers / weyl -----------------------------------

int cmd_verify_table(const Options& o) {
  std::string err;
  auto rows = pool_rows(o, &err);
  if (!rows) return usage_error(err);
  std::vector<VerificationReport> reps(rows->size());
  set_parallel_threads(o.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(o.jobs)
  for (int i = 0; i < static_cast<int>(rows->size()); ++i) {
    const FamilySpec& spec = (*rows)[i];
    try {
      if (o.table == "sylow")
        reps[i] = verify_sylow_row(spec, o.seed);
      else if (o.table == "normalizers")
        reps[i] = verify_normalizer_row(spec, o.seed);
      else
        reps[i] = verify_weyl_row(spec);
    } catch (const std::exception& e) {
      reps[i] = error_report(o.table + " " + spec.text, o.seed, e.what());
    }
  }
  std::string title = o.table == "sylow"        ? "distinguished subalgebra rows"
                      : o.table == "normalizers" ? "normalizer rows"
                                                 : "induced Weyl group rows";
  return emit_reports(o.table, title, reps, o, true);
}

// ----- verify: zero-classification ------------------------------------------

VerificationReport zero_report(const std::string& label, const SuperAlgebra& a,
                               bool expected, std::uint64_t seed) {
  VerificationReport r;
  r.row = "zero " + label;
  r.seed = seed;
  ZeroCertificate cert = is_zero_superalgebra(a, seed);
  std::string want = expected ? "0-superalgebra" : "not a 0-superalgebra";
  std::string got = cert.verdict
                        ? "0-superalgebra"
                        : "failed: " + cert.failure_reason.value_or("unknown");
  r.checks.push_back(check("verdict", cert.verdict == expected, want, got, "table"));
  if (cert.verdict) {
    bool parts = cert.takiff_part.has_value() && cert.odd_abelian_part.has_value() &&
                 cert.derivation_part.has_value();
    std::string shape =
        parts ? "takiff " + dims(*cert.takiff_part) + " + derivations " +
                    dims(*cert.derivation_part) + " + odd abelian " +
                    dims(*cert.odd_abelian_part) + ", center " + dims(cert.center)
              : "parts missing";
    r.checks.push_back(check("certificate", parts,
                             "reduced = takiff + derivations + odd abelian", shape,
                             "computed"));
  }
  return r;
}

int cmd_verify_zero(const Options& o) {
  struct Item {
    std::string label;
    bool expected;
  };
  std::vector<Item> items = {
      {"sl(1|1)", true},       {"sl(1|1)^2", true}, {"sl(1|1)^3", true},
      {"psq(2)", true},        {"spe(2)^2", true},  {"counterexample(2)", true},
      {"takiff0(sl2)", true},  {"takiff0(sl2+sl3;d=[1,-1])", true},
      {"gl(1|1)", false},      {"osp(1|2)", false}, {"psq(3)", false},
      {"takiff0(sl2+sl3;d=[1,0])", false},
  };
  std::vector<VerificationReport> reps;
  for (const Item& it : items) {
    try {
      auto a = named_algebra(it.label);
      if (!a) {
        reps.push_back(error_report("zero " + it.label, o.seed, "cannot build"));
        continue;
      }
      reps.push_back(zero_report(it.label, *a, it.expected, o.seed));
    } catch (const std::exception& e) {
      reps.push_back(error_report("zero " + it.label, o.seed, e.what()));
    }
  }
  // every tabled candidate subalgebra is expected to be a 0-superalgebra
  for (const RowEntry& row : kRowPool) {
    try {
      FamilyAlgebra f = build_family(*parse_family_spec(row.text));
      auto cand = sylow_candidate(f);
      if (!cand) {
        reps.push_back(
            error_report(std::string("zero candidate ") + row.text, o.seed,
                         "no candidate"));
        continue;
      }
      ExtractedAlgebra ex = subalgebra_as_algebra(f.alg, *cand, "k");
      reps.push_back(
          zero_report(std::string("candidate ") + row.text, ex.alg, true, o.seed));
    } catch (const std::exception& e) {
      reps.push_back(
          error_report(std::string("zero candidate ") + row.text, o.seed, e.what()));
    }
  }
  return emit_reports("zero-classification", "0-superalgebra classification", reps, o);
}

// ----- verify: counterexample -----------------------------------------------

int cmd_verify_counterexample(const Options& o) {
  int n = o.nparam.value_or(2);
  auto cx_spec = parse_family_spec("counterexample(" + std::to_string(n) + ")");
  if (!cx_spec) return usage_error("invalid counterexample size n=" + std::to_string(n));
  VerificationReport r;
  r.row = "counterexample(" + std::to_string(n) + ")";
  r.seed = o.seed;
  try {
    FamilyAlgebra cx = build_family(*cx_spec);
    auto gl_spec =
        parse_family_spec("gl(" + std::to_string(n) + "|" + std::to_string(n) + ")");
    FamilyAlgebra gl = build_family(*gl_spec);
    std::vector<Vec> gens;
    for (const Mat& m : cx.alg.realization->mats) {
      auto c = gl.coords_of(m);
      if (!c) throw std::logic_error("counterexample model does not embed");
      gens.push_back(*c);
    }
    GradedSubspace k = graded_span_checked(gl.alg, gens);
    r.checks.push_back(check("dimensions",
                             k.even_dim == n * n && k.odd_dim() == n * n + 1,
                             dims(n * n, n * n + 1), dims(k), "derived"));
    ExtractedAlgebra ex = subalgebra_as_algebra(gl.alg, k, "c");
    ZeroCertificate cert = is_zero_superalgebra(ex.alg, o.seed);
    r.checks.push_back(check(
        "zero_certificate", cert.verdict, "0-superalgebra",
        cert.verdict ? "0-superalgebra"
                     : "failed: " + cert.failure_reason.value_or("unknown"),
        "computed"));
    SylowVerdict v = is_sylow_by_table(gl, k, o.seed);
    bool not_sylow =
        v.kind == SylowVerdict::Kind::not_sylow && v.reason == "dim_mismatch";
    r.checks.push_back(check("sylow_verdict", not_sylow, "not_sylow (dim_mismatch)",
                             not_sylow ? "not_sylow (dim_mismatch): " + v.detail
                                       : "unexpected verdict: " + v.reason,
                             "derived"));
  } catch (const std::exception& e) {
    r = error_report(r.row, o.seed, e.what());
  }
  return emit_reports("counterexample",
                      "maximal 0-subalgebra that is not distinguished", {r}, o);
}

// ----- verify: ds -----------------------------------------------------------

// random odd element supported on one off-diagonal block; its square is zero
Vec square_zero_odd(const FamilyAlgebra& f, Rng& rng) {
  int p = f.p, q = f.q;
  for (int tries = 0; tries < 40; ++tries) {
    bool upper = rng.uniform_int(0, 1) == 0;
    Mat m(p + q, p + q);
    bool nonzero = false;
    for (int i = 0; i < (upper ? p : q); ++i)
      for (int j = 0; j < (upper ? q : p); ++j) {
        Rat v = rng.small_rat();
        if (v != 0) nonzero = true;
        if (upper)
          m.at(i, p + j) = v;
        else
          m.at(p + i, j) = v;
      }
    if (!nonzero) continue;
    auto c = f.coords_of(m);
    if (c) return *c;
  }
  throw std::runtime_error("no square-zero odd sample found");
}

int cmd_verify_ds(const Options& o) {
  std::vector<VerificationReport> reps;
  try {
    VerificationReport inv;
    inv.row = "ds invariance";
    inv.seed = o.seed;
    std::vector<FamilyAlgebra> fams;
    for (const char* t : {"gl(1|1)", "gl(1|2)", "gl(2|2)"})
      fams.push_back(build_family(*parse_family_spec(t)));
    Rng rng(o.seed + 17);
    int exact = 0, bad_square = 0;
    const int total = 100;
    for (int t = 0; t < total; ++t) {
      FamilyAlgebra& f = fams[t % fams.size()];
      FdModule stdm = *standard_module(f);
      FdModule m;
      switch ((t / fams.size()) % 3) {
        case 0: m = stdm; break;
        case 1: m = adjoint_module(f.alg); break;
        default: m = tensor_module(f.alg, stdm, stdm); break;
      }
      Vec x = square_zero_odd(f, rng);
      if (!vec_is_zero(f.alg.bracket(x, x))) {
        ++bad_square;
        continue;
      }
      DsResult d = ds(f.alg, m, x);
      if (sdim(m) == d.output_dims.first - d.output_dims.second) ++exact;
    }
    inv.checks.push_back(check("square_zero_samples", bad_square == 0,
                               "100/100 with [x,x] = 0",
                               std::to_string(total - bad_square) + "/100",
                               "computed"));
    inv.checks.push_back(check("sdim_invariance", exact == total, "100/100 exact",
                               std::to_string(exact) + "/100 exact", "derived"));
    reps.push_back(inv);
  } catch (const std::exception& e) {
    reps.push_back(error_report("ds invariance", o.seed, e.what()));
  }

  const std::pair<int, int> shapes[] = {{1, 1}, {2, 2}, {2, 3}};
  for (auto [m, n] : shapes) {
    std::string row =
        "ds rank-1 gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    try {
      FamilyAlgebra f = build_family(
          *parse_family_spec("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")"));
      Mat e(m + n, m + n);
      e.at(0, m) = 1;
      Vec x = *f.coords_of(e);
      DsResult d = ds(f.alg, *standard_module(f), x);
      VerificationReport r;
      r.row = row;
      r.seed = o.seed;
      r.checks.push_back(check("output_dims",
                               d.output_dims == std::make_pair(m - 1, n - 1),
                               dims(m - 1, n - 1), dims(d.output_dims), "derived"));
      reps.push_back(r);
    } catch (const std::exception& e) {
      reps.push_back(error_report(row, o.seed, e.what()));
    }
  }
  return emit_reports("ds", "superdimension under the odd reduction functor", reps, o);
}

// ----- verify: ext ----------------------------------------------------------

// invariant (1|2) submodule of the gl(1|1) adjoint: identity plus the odd part
FdModule gl11_ideal_module() {
  FdModule m;
  m.dim_even = 1;
  m.dim_odd = 2;
  Mat r11(3, 3), r22(3, 3), r12(3, 3), r21(3, 3);
  r11.at(1, 1) = 1;
  r11.at(2, 2) = -1;
  r22.at(1, 1) = -1;
  r22.at(2, 2) = 1;
  r12.at(0, 2) = 1;
  r21.at(0, 1) = 1;
  m.action = {r11, r22, r12, r21};
  return m;
}

Vec unit_vec_at(int n, int i) {
  Vec v(n, Rat(0));
  v[i] = 1;
  return v;
}

int cmd_verify_ext(const Options& o) {
  std::vector<VerificationReport> reps;
  try {
    VerificationReport r;
    r.row = "ext osp(1|2)";
    r.seed = o.seed;
    FamilyAlgebra f = build_family(*parse_family_spec("osp(1|2)"));
    const SuperAlgebra& g = f.alg;
    Rng rng(o.seed + 29);
    int hom = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
      Vec x(g.dim(), Rat(0));
      Vec c = rng.small_vec_nonzero(g.dim_odd);
      for (int i = 0; i < g.dim_odd; ++i) x[g.dim_even + i] = c[i];
      if (is_homological(g, x)) ++hom;
    }
    r.checks.push_back(check("homological_fraction", hom == 0, "0/1000",
                             std::to_string(hom) + "/1000", "derived"));
    FdModule triv = trivial_module(g);
    FdModule stdm = *standard_module(f);
    auto e1 = ext1(g, triv, stdm);
    r.checks.push_back(check("ext1_trivial_standard", e1 == std::make_pair(0, 0),
                             "(0|0)", dims(e1), "derived"));
    auto e2 = ext1(g, stdm, stdm);
    r.checks.push_back(check("ext1_standard_standard", e2 == std::make_pair(0, 0),
                             "(0|0)", dims(e2), "derived"));
    reps.push_back(r);
  } catch (const std::exception& e) {
    reps.push_back(error_report("ext osp(1|2)", o.seed, e.what()));
  }

  try {
    VerificationReport r;
    r.row = "ext sl(1|1)";
    r.seed = o.seed;
    auto a = named_algebra("sl(1|1)");
    if (!a) throw std::logic_error("cannot build sl(1|1)");
    auto e = ext1(*a, trivial_module(*a), adjoint_module(*a));
    r.checks.push_back(check("ext1_trivial_adjoint",
                             e != std::make_pair(0, 0), "nonzero", dims(e),
                             "derived"));
    reps.push_back(r);
  } catch (const std::exception& e) {
    reps.push_back(error_report("ext sl(1|1)", o.seed, e.what()));
  }

  try {
    VerificationReport r;
    r.row = "ext restriction";
    r.seed = o.seed;

    FamilyAlgebra f11 = build_family(*parse_family_spec("gl(1|1)"));
    const SuperAlgebra& g11 = f11.alg;
    Vec c(4, Rat(0));
    c[0] = 1;
    c[1] = 1;
    GradedSubspace sl =
        graded_span_checked(g11, {c, unit_vec_at(4, 2), unit_vec_at(4, 3)});
    GradedSubspace torus =
        graded_span_checked(g11, {unit_vec_at(4, 0), unit_vec_at(4, 1)});
    FdModule triv = trivial_module(g11);
    FdModule stdm = *standard_module(f11);
    FdModule adj = adjoint_module(g11);
    FdModule ideal = gl11_ideal_module();
    const std::vector<std::pair<const FdModule*, const FdModule*>> probes = {
        {&triv, &adj}, {&triv, &ideal}, {&stdm, &stdm}, {&triv, &stdm}};
    int inj = 0;
    for (const auto& [m, n] : probes)
      inj += restriction_injective_ext1(g11, sl, *m, *n) ? 1 : 0;
    r.checks.push_back(check("gl(1|1) to odd subalgebra",
                             inj == static_cast<int>(probes.size()),
                             "4/4 pairs injective", std::to_string(inj) + "/4",
                             "derived"));
    bool torus_inj = restriction_injective_ext1(g11, torus, triv, ideal);
    r.checks.push_back(check("gl(1|1) to even torus", !torus_inj, "kernel detected",
                             torus_inj ? "injective" : "kernel detected",
                             "computed"));

    FamilyAlgebra f12 = build_family(*parse_family_spec("gl(1|2)"));
    auto k12 = sylow_candidate(f12);
    if (!k12) throw std::logic_error("no candidate for gl(1|2)");
    FdModule triv12 = trivial_module(f12.alg);
    FdModule std12 = *standard_module(f12);
    FdModule adj12 = adjoint_module(f12.alg);
    const std::vector<std::pair<const FdModule*, const FdModule*>> probes12 = {
        {&triv12, &std12}, {&std12, &std12}, {&triv12, &adj12}};
    int inj12 = 0;
    for (const auto& [m, n] : probes12)
      inj12 += restriction_injective_ext1(f12.alg, *k12, *m, *n) ? 1 : 0;
    r.checks.push_back(check("gl(1|2) to distinguished subalgebra",
                             inj12 == static_cast<int>(probes12.size()),
                             "3/3 pairs injective", std::to_string(inj12) + "/3",
                             "derived"));
    reps.push_back(r);
  } catch (const std::exception& e) {
    reps.push_back(error_report("ext restriction", o.seed, e.what()));
  }
  return emit_reports("ext", "Ext^1 probes and restriction injectivity", reps, o);
}

// ----- analyze --------------------------------------------------------------

int cmd_analyze(const Options& o) {
  SuperAlgebra a;
  try {
    a = load_algebra(o.file);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "schema error: %s\n", e.what());
    return 2;
  }
  std::string name = fs::path(o.file).filename().string();
  std::printf("# algebra dossier: %s\n\n", name.c_str());
  std::printf("- dimensions: %s\n", dims(a.dim_even, a.dim_odd).c_str());
  GradedSubspace z = center(a);
  std::printf("- center: %s\n", dims(z).c_str());
  GradedSubspace d = derived_subalgebra(a);
  std::printf("- derived subalgebra: %s\n", dims(d).c_str());
  std::printf("- oddly generated: %s\n", is_oddly_generated(a) ? "yes" : "no");
  std::printf("- quasireductive: %s\n", is_quasireductive(a) ? "yes" : "no");
  ConeStats cs = homological_cone_sample(a, 60, o.seed);
  std::printf("- homological odd samples: %d/%d\n", cs.homological, cs.trials);
  ZeroCertificate cert = is_zero_superalgebra(a, o.seed);
  std::printf("- zero certificate:\n\n%s", zero_certificate_to_json(cert).c_str());
  if (o.roots) {
    std::printf("\n- root decomposition from a generic element:\n");
    try {
      Vec x = find_generic(a, full_subspace(a), o.seed);
      GradedSubspace h = cartan_from_element(a, x);
      try {
        RootDatum rd = root_decomposition(a, h);
        std::printf("  - cartan: %s\n", dims(rd.cartan).c_str());
        std::printf("  - roots: %d\n", static_cast<int>(rd.roots.size()));
        for (size_t i = 0; i < rd.roots.size(); ++i) {
          std::string w;
          for (const Rat& r : rd.roots[i]) {
            if (!w.empty()) w += ",";
            w += rat_to_string(r);
          }
          std::printf("  - root (%s): dims %s%s\n", w.c_str(),
                      dims(rd.root_spaces[i]).c_str(),
                      rd.irreducible[i] ? ", irreducible" : "");
        }
        std::printf("  - zero space equals cartan: %s\n",
                    rd.zero_space_is_cartan ? "yes" : "no");
        std::printf("  - roots match the even-part roots: %s\n",
                    rd.delta_matches_even ? "yes" : "no");
      } catch (const std::exception& e) {
        std::printf("  - not split over the rationals for this element (%s)\n",
                    e.what());
      }
    } catch (const std::exception& e) {
      std::printf("  - no generic element found (%s)\n", e.what());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    print_help();
    return 2;
  }
  if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    print_help();
    return 0;
  }
  if (args[0] == "--version") {
    std::printf("supersylow %s\n", kVersion);
    return 0;
  }

  Options o;
  if (const char* env = std::getenv("SUPERSYLOW_SEED")) {
    auto v = parse_long(env);
    if (!v || *v < 0) return usage_error("invalid SUPERSYLOW_SEED value");
    o.seed = static_cast<std::uint64_t>(*v);
  }

  const std::string cmd = args[0];
  size_t i = 1;
  if (cmd == "verify") {
    if (args.size() < 2) return usage_error("verify needs a table name");
    o.table = args[1];
    i = 2;
  } else if (cmd == "analyze") {
    if (args.size() < 2) return usage_error("analyze needs an algebra JSON file");
    o.file = args[1];
    i = 2;
  } else {
    return usage_error("unknown command `" + cmd + "`");
  }

  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--roots") {
      o.roots = true;
      continue;
    }
    if (i + 1 >= args.size()) return usage_error("flag " + a + " needs a value");
    const std::string& v = args[++i];
    if (a == "--max-rank") {
      auto n = parse_long(v);
      if (!n || *n < 1) return usage_error("--max-rank needs a positive integer");
      o.max_rank = static_cast<int>(*n);
    } else if (a == "--family") {
      o.family = v;
    } else if (a == "--n") {
      auto n = parse_long(v);
      if (!n || *n < 1) return usage_error("--n needs a positive integer");
      o.nparam = static_cast<int>(*n);
    } else if (a == "--seed") {
      auto n = parse_long(v);
      if (!n || *n < 0) return usage_error("--seed needs a nonnegative integer");
      o.seed = static_cast<std::uint64_t>(*n);
    } else if (a == "--jobs") {
      auto n = parse_long(v);
      if (!n || *n < 1) return usage_error("--jobs needs a positive integer");
      o.jobs = static_cast<int>(*n);
    } else if (a == "--out") {
      o.out_dir = v;
    } else if (a == "--format") {
      if (v != "json" && v != "md") return usage_error("--format must be json or md");
      o.format = v;
    } else {
      return usage_error("unknown flag `" + a + "`");
    }
  }

  if (cmd == "analyze") return cmd_analyze(o);
  if (o.table == "sylow" || o.table == "normalizers" || o.table == "weyl")
    return cmd_verify_table(o);
  if (o.table == "zero-classification") return cmd_verify_zero(o);
  if (o.table == "counterexample") return cmd_verify_counterexample(o);
  if (o.table == "ds") return cmd_verify_ds(o);
  if (o.table == "ext") return cmd_verify_ext(o);
  return usage_error("unknown table `" + o.table +
                     "`; expected sylow, normalizers, weyl, zero-classification, "
                     "counterexample, ds or ext");
}
