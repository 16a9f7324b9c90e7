#include "supersylow/families.hpp"

#include "supersylow/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace supersylow {

namespace {

Mat unit(int n, int r, int c) {
  Mat m(n, n);
  m.at(r, c) = 1;
  return m;
}

// ----- spec parsing ---------------------------------------------------------

const std::map<std::string, FamilySpec::Kind>& kind_names() {
  static const std::map<std::string, FamilySpec::Kind> k = {
      {"gl", FamilySpec::Kind::gl},
      {"sl", FamilySpec::Kind::sl},
      {"psl", FamilySpec::Kind::psl},
      {"osp", FamilySpec::Kind::osp},
      {"pe", FamilySpec::Kind::pe},
      {"spe", FamilySpec::Kind::spe},
      {"q", FamilySpec::Kind::q},
      {"sq", FamilySpec::Kind::sq},
      {"psq", FamilySpec::Kind::psq},
      {"counterexample", FamilySpec::Kind::counterexample},
      {"takiff", FamilySpec::Kind::takiff},
      {"takiff0", FamilySpec::Kind::takiff0},
  };
  return k;
}

std::string kind_to_string(FamilySpec::Kind k) {
  for (const auto& [name, kk] : kind_names())
    if (kk == k) return name;
  return "?";
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stoi(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

bool valid_atom(const std::string& a) {
  int k = 0;
  if (a.rfind("sl", 0) == 0 && parse_int(a.substr(2), k)) return k >= 2;
  if (a.rfind("so", 0) == 0 && parse_int(a.substr(2), k)) return k >= 3;
  if (a.rfind("sp", 0) == 0 && parse_int(a.substr(2), k)) return k >= 2 && k % 2 == 0;
  return false;
}

// "sl2*2+sl3" -> {sl2, sl2, sl3}
std::optional<std::vector<std::string>> parse_atoms(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '+')) {
    std::string name = part;
    int count = 1;
    auto star = part.find('*');
    if (star != std::string::npos) {
      name = part.substr(0, star);
      if (!parse_int(part.substr(star + 1), count) || count < 1) return std::nullopt;
    }
    if (!valid_atom(name)) return std::nullopt;
    for (int i = 0; i < count; ++i) out.push_back(name);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace

std::optional<FamilySpec> parse_family_spec(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return std::nullopt;
  std::string name = s.substr(0, open);
  std::string args = s.substr(open + 1, s.size() - open - 2);
  auto it = kind_names().find(name);
  if (it == kind_names().end()) return std::nullopt;
  FamilySpec spec;
  spec.kind = it->second;
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::gl:
    case K::sl:
    case K::psl:
    case K::osp: {
      auto bar = args.find('|');
      if (bar == std::string::npos) return std::nullopt;
      if (!parse_int(args.substr(0, bar), spec.m) || !parse_int(args.substr(bar + 1), spec.n))
        return std::nullopt;
      if (spec.m < 0 || spec.n < 0 || spec.m + spec.n < 1) return std::nullopt;
      if (spec.kind == K::psl && spec.m != spec.n) return std::nullopt;
      if (spec.kind == K::osp && spec.n % 2 != 0) return std::nullopt;
      break;
    }
    case K::pe:
    case K::spe:
    case K::q:
    case K::sq:
    case K::psq:
    case K::counterexample: {
      if (!parse_int(args, spec.n) || spec.n < 1) return std::nullopt;
      break;
    }
    case K::takiff: {
      auto atoms = parse_atoms(args);
      if (!atoms) return std::nullopt;
      spec.atoms = *atoms;
      break;
    }
    case K::takiff0: {
      auto semi = args.find(';');
      if (semi == std::string::npos) return std::nullopt;
      auto atoms = parse_atoms(args.substr(0, semi));
      if (!atoms) return std::nullopt;
      spec.atoms = *atoms;
      std::string dpart = args.substr(semi + 1);
      if (dpart.rfind("d=[", 0) != 0 || dpart.back() != ']') return std::nullopt;
      std::string list = dpart.substr(3, dpart.size() - 4);
      std::stringstream ss(list);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto r = rat_from_string(tok);
        if (!r) return std::nullopt;
        spec.deriv.push_back(*r);
      }
      if (spec.deriv.size() != spec.atoms.size()) return std::nullopt;
      break;
    }
  }
  spec.text = family_to_string(spec);
  return spec;
}

std::string family_to_string(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  std::string s = kind_to_string(spec.kind) + "(";
  switch (spec.kind) {
    case K::gl:
    case K::sl:
    case K::psl:
    case K::osp:
      s += std::to_string(spec.m) + "|" + std::to_string(spec.n);
      break;
    case K::pe:
    case K::spe:
    case K::q:
    case K::sq:
    case K::psq:
    case K::counterexample:
      s += std::to_string(spec.n);
      break;
    case K::takiff:
    case K::takiff0: {
      // re-group equal consecutive atoms with '*'
      for (size_t i = 0; i < spec.atoms.size();) {
        size_t j = i;
        while (j < spec.atoms.size() && spec.atoms[j] == spec.atoms[i]) ++j;
        if (i) s += "+";
        s += spec.atoms[i];
        if (j - i > 1) s += "*" + std::to_string(j - i);
        i = j;
      }
      if (spec.kind == K::takiff0) {
        s += ";d=[";
        for (size_t i = 0; i < spec.deriv.size(); ++i) {
          if (i) s += ",";
          s += rat_to_string(spec.deriv[i]);
        }
        s += "]";
      }
      break;
    }
  }
  return s + ")";
}

// ----- construction from a matrix basis -------------------------------------

namespace {

// coordinates of a flattened matrix in the model basis, before any quotient
std::optional<Vec> model_coords(const FamilyAlgebra& f, const Vec& flat) {
  const int d = f.pre_dim;
  Vec vr(d, Rat(0));
  for (int r = 0; r < d; ++r) vr[r] = flat[f.pivot_rows[r]];
  Vec c = mat_apply(f.solver, vr);
  Vec acc(flat.size(), Rat(0));
  for (int j = 0; j < d; ++j) {
    if (c[j] == 0) continue;
    for (const auto& [r, val] : f.model_cols[j]) acc[r] += c[j] * val;
  }
  if (acc != flat) return std::nullopt;
  return c;
}

}  // namespace

std::optional<Vec> FamilyAlgebra::coords_of(const Mat& x) const {
  if (!has_matrix_model()) return std::nullopt;
  auto c = model_coords(*this, mat_flatten(x));
  if (!c) return std::nullopt;
  if (quotient_projection) return mat_apply(*quotient_projection, *c);
  return c;
}

FamilyAlgebra algebra_from_matrices(int p, int q, const std::vector<Mat>& even,
                                    const std::vector<Mat>& odd,
                                    const std::vector<std::string>& names) {
  FamilyAlgebra f;
  f.p = p;
  f.q = q;
  const int N = p + q, NN = N * N;
  const int d = static_cast<int>(even.size() + odd.size());
  f.pre_dim = d;
  std::vector<Mat> mats = even;
  mats.insert(mats.end(), odd.begin(), odd.end());
  f.model_cols.resize(d);
  Mat bt(d, NN);
  for (int j = 0; j < d; ++j) {
    Vec flat = mat_flatten(mats[j]);
    for (int r = 0; r < NN; ++r)
      if (flat[r] != 0) {
        f.model_cols[j].emplace_back(r, flat[r]);
        bt.at(j, r) = flat[r];
      }
  }
  RrefResult rr = rref(bt);
  if (rr.rank != d) throw std::runtime_error("algebra_from_matrices: dependent basis");
  f.pivot_rows = rr.pivots;
  Mat aug(d, 2 * d);
  for (int r = 0; r < d; ++r) {
    for (int j = 0; j < d; ++j) aug.at(r, j) = mats[j].at(f.pivot_rows[r] / N, f.pivot_rows[r] % N);
    aug.at(r, d + r) = 1;
  }
  RrefResult inv = rref(aug);
  f.solver = Mat(d, d);
  for (int r = 0; r < d; ++r)
    for (int j = 0; j < d; ++j) f.solver.at(r, j) = inv.r.at(r, d + j);

  f.alg.dim_even = static_cast<int>(even.size());
  f.alg.dim_odd = static_cast<int>(odd.size());
  f.alg.names = names;
  if (f.alg.names.empty())
    for (int i = 0; i < d; ++i)
      f.alg.names.push_back((i < f.alg.dim_even ? "e" : "o") + std::to_string(i));
  f.alg.init_table();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const bool anti = f.alg.odd_index(i) && f.alg.odd_index(j);
      Mat br = mat_commutator(mats[i], mats[j], anti);
      auto c = model_coords(f, mat_flatten(br));
      if (!c) throw std::runtime_error("algebra_from_matrices: basis is not bracket-closed");
      f.alg.set_bracket(i, j, *c);
    }
  Realization real;
  real.p = p;
  real.q = q;
  real.mats = std::move(mats);
  f.alg.realization = std::move(real);
  return f;
}

// ----- individual families --------------------------------------------------

namespace {

FamilyAlgebra build_gl(int m, int n) {
  const int N = m + n;
  std::vector<Mat> even, odd;
  std::vector<std::string> names;
  auto name = [](int i, int j) {
    return "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) even.push_back(unit(N, i, j)), names.push_back(name(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      even.push_back(unit(N, m + i, m + j)), names.push_back(name(m + i, m + j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) odd.push_back(unit(N, i, m + j)), names.push_back(name(i, m + j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) odd.push_back(unit(N, m + i, j)), names.push_back(name(m + i, j));
  return algebra_from_matrices(m, n, even, odd, names);
}

FamilyAlgebra build_sl(int m, int n) {
  const int N = m + n;
  std::vector<Mat> even, odd;
  std::vector<std::string> names;
  auto name = [](int i, int j) {
    return "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) even.push_back(unit(N, i, j)), names.push_back(name(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) even.push_back(unit(N, m + i, m + j)), names.push_back(name(m + i, m + j));
  for (int i = 0; i + 1 < m; ++i) {
    even.push_back(mat_sub(unit(N, i, i), unit(N, i + 1, i + 1)));
    names.push_back("ha" + std::to_string(i + 1));
  }
  if (m > 0 && n > 0) {
    even.push_back(mat_add(unit(N, m - 1, m - 1), unit(N, m, m)));
    names.push_back("hb");
  }
  for (int j = 0; j + 1 < n; ++j) {
    even.push_back(mat_sub(unit(N, m + j, m + j), unit(N, m + j + 1, m + j + 1)));
    names.push_back("hd" + std::to_string(j + 1));
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) odd.push_back(unit(N, i, m + j)), names.push_back(name(i, m + j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) odd.push_back(unit(N, m + i, j)), names.push_back(name(m + i, j));
  return algebra_from_matrices(m, n, even, odd, names);
}

// kernel of the invariance equation of a bilinear form with Gram matrix G:
// b(X e_i, e_j) + (-1)^{|X||e_i|} b(e_i, X e_j) = 0 for all i, j.
std::vector<Mat> solve_form(int p, int q, const Mat& G, int x_parity) {
  const int N = p + q;
  auto par = [&](int a) { return a < p ? 0 : 1; };
  std::vector<std::pair<int, int>> vars;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if ((par(a) + par(b)) % 2 == x_parity) vars.emplace_back(a, b);
  Mat sys(N * N, static_cast<int>(vars.size()));
  for (int t = 0; t < static_cast<int>(vars.size()); ++t) {
    auto [a, b] = vars[t];
    for (int j = 0; j < N; ++j)
      if (G.at(a, j) != 0) sys.at(b * N + j, t) += G.at(a, j);
    for (int i = 0; i < N; ++i)
      if (G.at(i, a) != 0) {
        Rat sign = (x_parity == 1 && par(i) == 1) ? rat(-1) : rat(1);
        sys.at(i * N + b, t) += sign * G.at(i, a);
      }
  }
  std::vector<Mat> out;
  for (const Vec& k : kernel_basis(sys)) {
    Mat mat(N, N);
    for (int t = 0; t < static_cast<int>(vars.size()); ++t) mat.at(vars[t].first, vars[t].second) = k[t];
    out.push_back(std::move(mat));
  }
  return out;
}

// replace a matrix list by a basis of the sub-span where `functional` vanishes
std::vector<Mat> filter_by_functional(const std::vector<Mat>& mats,
                                      const std::function<Rat(const Mat&)>& functional) {
  Mat row(1, static_cast<int>(mats.size()));
  for (int j = 0; j < static_cast<int>(mats.size()); ++j) row.at(0, j) = functional(mats[j]);
  std::vector<Mat> out;
  for (const Vec& k : kernel_basis(row)) {
    Mat acc(mats.empty() ? 0 : mats[0].rows, mats.empty() ? 0 : mats[0].cols);
    for (int j = 0; j < static_cast<int>(mats.size()); ++j)
      if (k[j] != 0) acc = mat_add(acc, mat_scale(k[j], mats[j]));
    out.push_back(std::move(acc));
  }
  return out;
}

Mat osp_gram(int m, int k) {
  Mat G(m + k, m + k);
  for (int i = 0; i < m; ++i) G.at(i, m - 1 - i) = 1;
  for (int i = 0; i < k; ++i) G.at(m + i, m + k - 1 - i) = i < k / 2 ? 1 : -1;
  return G;
}

FamilyAlgebra build_osp(int m, int k) {
  Mat G = osp_gram(m, k);
  return algebra_from_matrices(m, k, solve_form(m, k, G, 0), solve_form(m, k, G, 1), {});
}

Mat pe_gram(int n) {
  Mat G(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) G.at(i, n + i) = 1, G.at(n + i, i) = 1;
  return G;
}

FamilyAlgebra build_pe(int n, bool traceless) {
  Mat G = pe_gram(n);
  std::vector<Mat> even = solve_form(n, n, G, 0);
  std::vector<Mat> odd = solve_form(n, n, G, 1);
  if (traceless) {
    even = filter_by_functional(even, [n](const Mat& x) {
      Rat t(0);
      for (int i = 0; i < n; ++i) t += x.at(i, i);
      return t;
    });
  }
  return algebra_from_matrices(n, n, even, odd, {});
}

Mat q_even_mat(int n, int i, int j) {
  Mat x(2 * n, 2 * n);
  x.at(i, j) = 1;
  x.at(n + i, n + j) = 1;
  return x;
}

Mat q_odd_mat(int n, int i, int j) {
  Mat x(2 * n, 2 * n);
  x.at(i, n + j) = 1;
  x.at(n + i, j) = 1;
  return x;
}

FamilyAlgebra build_q(int n, bool odd_traceless) {
  std::vector<Mat> even, odd;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      even.push_back(q_even_mat(n, i, j));
      names.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  if (!odd_traceless) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        odd.push_back(q_odd_mat(n, i, j));
        names.push_back("b" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          odd.push_back(q_odd_mat(n, i, j));
          names.push_back("b" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
    for (int i = 0; i + 1 < n; ++i) {
      odd.push_back(mat_sub(q_odd_mat(n, i, i), q_odd_mat(n, i + 1, i + 1)));
      names.push_back("bh" + std::to_string(i + 1));
    }
  }
  return algebra_from_matrices(n, n, even, odd, names);
}

FamilyAlgebra build_counterexample(int n) {
  std::vector<Mat> even, odd;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat x(2 * n, 2 * n);
      x.at(i, j) = 1;
      x.at(n + i, n + j) = 1;
      even.push_back(std::move(x));
      names.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat x(2 * n, 2 * n);
      x.at(i, n + j) = 1;
      odd.push_back(std::move(x));
      names.push_back("b" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  Mat z(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) z.at(n + i, i) = 1;
  odd.push_back(std::move(z));
  names.push_back("z");
  return algebra_from_matrices(n, n, even, odd, names);
}

FamilyAlgebra central_quotient(FamilyAlgebra f, const Mat& central_matrix) {
  auto c = f.coords_of(central_matrix);
  if (!c) throw std::runtime_error("central element outside the algebra");
  QuotientAlgebra qa = quotient(f.alg, graded_span_checked(f.alg, {*c}));
  f.alg = std::move(qa.alg);
  f.quotient_projection = std::move(qa.projection);
  return f;
}

SuperAlgebra build_atom(const std::string& a) {
  int k = std::stoi(a.substr(2));
  FamilySpec s;
  if (a.rfind("sl", 0) == 0) {
    s.kind = FamilySpec::Kind::sl;
    s.m = k;
    s.n = 0;
  } else {
    s.kind = FamilySpec::Kind::osp;
    s.m = a.rfind("so", 0) == 0 ? k : 0;
    s.n = a.rfind("so", 0) == 0 ? 0 : k;
  }
  s.text = family_to_string(s);
  return build_family(s).alg;
}

SuperAlgebra atom_product(const std::vector<std::string>& atoms, std::vector<int>* factor_of) {
  SuperAlgebra s;
  for (size_t i = 0; i < atoms.size(); ++i) {
    SuperAlgebra a = build_atom(atoms[i]);
    if (factor_of)
      for (int j = 0; j < a.dim(); ++j) factor_of->push_back(static_cast<int>(i));
    s = i == 0 ? std::move(a) : direct_sum(s, a);
  }
  return s;
}

// s tensor C[xi] for a purely even s: even copy of s plus an odd abelian copy
// on which s acts by its adjoint bracket.
FamilyAlgebra build_takiff(const std::vector<std::string>& atoms) {
  SuperAlgebra s = atom_product(atoms, nullptr);
  assert(s.dim_odd == 0);
  const int D = s.dim();
  FamilyAlgebra f;
  f.alg.dim_even = D;
  f.alg.dim_odd = D;
  for (int i = 0; i < D; ++i) f.alg.names.push_back(s.names[i]);
  for (int i = 0; i < D; ++i) f.alg.names.push_back(s.names[i] + "~");
  f.alg.init_table();
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      Vec c = s.bracket_basis(i, j);
      Vec ee(2 * D, Rat(0)), eo(2 * D, Rat(0));
      for (int t = 0; t < D; ++t) ee[t] = c[t], eo[D + t] = c[t];
      f.alg.set_bracket(i, j, ee);
      f.alg.set_bracket(i, D + j, eo);
    }
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j)
      f.alg.set_bracket(D + i, j, vec_scale(rat(-1), f.alg.bracket_basis(j, D + i)));
  if (s.realization) {
    const int L = s.realization->p + s.realization->q;
    Realization r;
    r.p = L;
    r.q = L;
    for (int i = 0; i < D; ++i) {
      Mat m(2 * L, 2 * L);
      const Mat& sm = s.realization->mats[i];
      for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b) m.at(a, b) = m.at(L + a, L + b) = sm.at(a, b);
      r.mats.push_back(std::move(m));
    }
    for (int i = 0; i < D; ++i) {
      Mat m(2 * L, 2 * L);
      const Mat& sm = s.realization->mats[i];
      for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b) m.at(a, L + b) = sm.at(a, b);
      r.mats.push_back(std::move(m));
    }
    f.alg.realization = std::move(r);
  }
  return f;
}

// (sum of s_i tensor C[xi_i]) extended by one odd derivation sending
// x xi_i -> d_i x and killing s; the derivation squares to zero.
FamilyAlgebra build_takiff0(const std::vector<std::string>& atoms, const std::vector<Rat>& deriv) {
  std::vector<int> factor_of;
  SuperAlgebra s = atom_product(atoms, &factor_of);
  assert(s.dim_odd == 0);
  const int D = s.dim();
  FamilyAlgebra f;
  f.alg.dim_even = D;
  f.alg.dim_odd = D + 1;
  for (int i = 0; i < D; ++i) f.alg.names.push_back(s.names[i]);
  for (int i = 0; i < D; ++i) f.alg.names.push_back(s.names[i] + "~");
  f.alg.names.push_back("der");
  const int dim = 2 * D + 1;
  f.alg.init_table();
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      Vec c = s.bracket_basis(i, j);
      Vec ee(dim, Rat(0)), eo(dim, Rat(0));
      for (int t = 0; t < D; ++t) ee[t] = c[t], eo[D + t] = c[t];
      f.alg.set_bracket(i, j, ee);
      f.alg.set_bracket(i, D + j, eo);
    }
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j)
      f.alg.set_bracket(D + i, j, vec_scale(rat(-1), f.alg.bracket_basis(j, D + i)));
  for (int j = 0; j < D; ++j) {
    Vec v(dim, Rat(0));
    v[j] = deriv[factor_of[j]];
    f.alg.set_bracket(2 * D, D + j, v);
    f.alg.set_bracket(D + j, 2 * D, v);  // odd-odd bracket is symmetric
  }
  return f;
}

}  // namespace

FamilyAlgebra build_family(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  FamilyAlgebra f;
  switch (spec.kind) {
    case K::gl: f = build_gl(spec.m, spec.n); break;
    case K::sl: f = build_sl(spec.m, spec.n); break;
    case K::psl: {
      f = central_quotient(build_sl(spec.m, spec.n), Mat::identity(spec.m + spec.n));
      break;
    }
    case K::osp: f = build_osp(spec.m, spec.n); break;
    case K::pe: f = build_pe(spec.n, false); break;
    case K::spe: f = build_pe(spec.n, true); break;
    case K::q: f = build_q(spec.n, false); break;
    case K::sq: f = build_q(spec.n, true); break;
    case K::psq: {
      Mat aI(2 * spec.n, 2 * spec.n);
      for (int i = 0; i < 2 * spec.n; ++i) aI.at(i, i) = 1;
      f = central_quotient(build_q(spec.n, true), aI);
      break;
    }
    case K::counterexample: f = build_counterexample(spec.n); break;
    case K::takiff: f = build_takiff(spec.atoms); break;
    case K::takiff0: f = build_takiff0(spec.atoms, spec.deriv); break;
  }
  f.spec = spec;
  return f;
}

int family_defect(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::gl:
    case K::sl:
    case K::psl: return std::min(spec.m, spec.n);
    case K::osp: return std::min(spec.m / 2, spec.n / 2);
    case K::pe:
    case K::spe:
    case K::q:
    case K::sq:
    case K::psq: return spec.n / 2;
    default: return 0;
  }
}

namespace {

Vec require_coords(const FamilyAlgebra& f, const Mat& x) {
  auto c = f.coords_of(x);
  if (!c) throw std::runtime_error("matrix outside the family model");
  return *c;
}

// root vectors for the roots +-(eps_i - delta_i) of osp with respect to the
// standard diagonal torus; each root space is one-dimensional.
std::vector<Vec> osp_root_generators(const FamilyAlgebra& f) {
  const int m = f.spec.m, k = f.spec.n, N = m + k;
  const int l = m / 2, ns = k / 2, d = std::min(l, ns);
  std::vector<Vec> ta, tb;
  for (int i = 0; i < l; ++i)
    ta.push_back(require_coords(f, mat_sub(unit(N, i, i), unit(N, m - 1 - i, m - 1 - i))));
  for (int j = 0; j < ns; ++j)
    tb.push_back(require_coords(
        f, mat_sub(unit(N, m + j, m + j), unit(N, m + k - 1 - j, m + k - 1 - j))));
  const int dim = f.alg.dim();
  std::vector<Vec> gens;
  for (int i = 0; i < d; ++i)
    for (int sign : {1, -1}) {
      std::vector<Vec> rows;
      auto add_eig_rows = [&](const Vec& t, const Rat& lambda) {
        Mat ad = f.alg.ad(t);
        for (int r = 0; r < dim; ++r) {
          Vec row = ad.row(r);
          row[r] -= lambda;
          rows.push_back(std::move(row));
        }
      };
      for (int r = 0; r < l; ++r) add_eig_rows(ta[r], rat(r == i ? sign : 0));
      for (int r = 0; r < ns; ++r) add_eig_rows(tb[r], rat(r == i ? -sign : 0));
      for (int c = 0; c < f.alg.dim_even; ++c) {
        Vec row(dim, Rat(0));
        row[c] = 1;
        rows.push_back(std::move(row));
      }
      Mat sys(static_cast<int>(rows.size()), dim);
      for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < dim; ++c) sys.at(r, c) = rows[r][c];
      std::vector<Vec> ker = kernel_basis(sys);
      if (ker.size() != 1)
        throw std::runtime_error("osp root space is not one-dimensional");
      gens.push_back(ker[0]);
    }
  return gens;
}

// block-diagonal pe(n) elements: traceless-on-block A part, symmetric B,
// antisymmetric C, over pair blocks plus an odd singleton row when n is odd
std::vector<Mat> pe_block_mats(int n) {
  const int N = 2 * n;
  std::vector<Mat> out;
  auto even_of = [&](const Mat& A) {
    Mat x(N, N);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        x.at(i, j) = A.at(i, j);
        x.at(n + j, n + i) = -A.at(i, j);
      }
    return x;
  };
  auto upper_of = [&](const Mat& B) {
    Mat x(N, N);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x.at(i, n + j) = B.at(i, j);
    return x;
  };
  auto lower_of = [&](const Mat& C) {
    Mat x(N, N);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x.at(n + i, j) = C.at(i, j);
    return x;
  };
  for (int t = 0; t + 1 < n; t += 2) {
    const int a = t, b = t + 1;
    out.push_back(even_of(unit(n, a, b)));
    out.push_back(even_of(unit(n, b, a)));
    out.push_back(even_of(mat_sub(unit(n, a, a), unit(n, b, b))));
    out.push_back(upper_of(unit(n, a, a)));
    out.push_back(upper_of(unit(n, b, b)));
    out.push_back(upper_of(mat_add(unit(n, a, b), unit(n, b, a))));
    out.push_back(lower_of(mat_sub(unit(n, a, b), unit(n, b, a))));
  }
  if (n % 2 == 1) out.push_back(upper_of(unit(n, n - 1, n - 1)));
  return out;
}

// block q(2)^k (x q(1)) elements intersected with the odd-trace-zero condition
std::vector<Mat> q_block_mats(int n) {
  std::vector<Mat> out;
  for (int t = 0; t + 1 < n; t += 2)
    for (int i : {t, t + 1})
      for (int j : {t, t + 1}) {
        out.push_back(q_even_mat(n, i, j));
        if (i != j) out.push_back(q_odd_mat(n, i, j));
      }
  if (n % 2 == 1) out.push_back(q_even_mat(n, n - 1, n - 1));
  for (int i = 0; i + 1 < n; ++i)
    out.push_back(mat_sub(q_odd_mat(n, i, i), q_odd_mat(n, i + 1, i + 1)));
  return out;
}

}  // namespace

std::optional<GradedSubspace> sylow_candidate(const FamilyAlgebra& f) {
  using K = FamilySpec::Kind;
  const FamilySpec& spec = f.spec;
  switch (spec.kind) {
    case K::gl:
    case K::sl:
    case K::psl: {
      const int m = spec.m, N = spec.m + spec.n, d = std::min(spec.m, spec.n);
      std::vector<Vec> gens;
      for (int i = 0; i < d; ++i) {
        gens.push_back(require_coords(f, unit(N, i, m + i)));
        gens.push_back(require_coords(f, unit(N, m + i, i)));
      }
      return generated_subalgebra(f.alg, gens);
    }
    case K::osp: return generated_subalgebra(f.alg, osp_root_generators(f));
    case K::pe:
    case K::spe: {
      std::vector<Vec> gens;
      for (const Mat& x : pe_block_mats(spec.n)) gens.push_back(require_coords(f, x));
      return graded_span_checked(f.alg, gens);
    }
    case K::q:
    case K::sq:
    case K::psq: {
      std::vector<Vec> gens;
      for (const Mat& x : q_block_mats(spec.n)) {
        auto c = f.coords_of(x);
        if (c) gens.push_back(*c);  // diagonal odd parts fall outside plain q's trace-zero set
      }
      if (spec.kind == K::q)
        for (int t = 0; t + 1 < spec.n; t += 2)
          for (int i : {t, t + 1}) gens.push_back(require_coords(f, q_odd_mat(spec.n, i, i)));
      if (spec.kind == K::q && spec.n % 2 == 1)
        gens.push_back(require_coords(f, q_odd_mat(spec.n, spec.n - 1, spec.n - 1)));
      return graded_span_checked(f.alg, gens);
    }
    default: return std::nullopt;
  }
}

GradedSubspace candidate_torus(const FamilyAlgebra& f) {
  using K = FamilySpec::Kind;
  const FamilySpec& spec = f.spec;
  std::vector<Vec> gens;
  switch (spec.kind) {
    case K::gl: {
      const int N = spec.m + spec.n;
      for (int i = 0; i < N; ++i) gens.push_back(require_coords(f, unit(N, i, i)));
      break;
    }
    case K::sl:
    case K::psl: {
      const int m = spec.m, N = spec.m + spec.n;
      for (int i = 0; i + 1 < m; ++i)
        gens.push_back(require_coords(f, mat_sub(unit(N, i, i), unit(N, i + 1, i + 1))));
      if (m > 0 && spec.n > 0)
        gens.push_back(require_coords(f, mat_add(unit(N, m - 1, m - 1), unit(N, m, m))));
      for (int j = 0; j + 1 < spec.n; ++j)
        gens.push_back(
            require_coords(f, mat_sub(unit(N, m + j, m + j), unit(N, m + j + 1, m + j + 1))));
      break;
    }
    case K::osp: {
      const int m = spec.m, k = spec.n, N = m + k;
      for (int i = 0; i < m / 2; ++i)
        gens.push_back(require_coords(f, mat_sub(unit(N, i, i), unit(N, m - 1 - i, m - 1 - i))));
      for (int j = 0; j < k / 2; ++j)
        gens.push_back(require_coords(
            f, mat_sub(unit(N, m + j, m + j), unit(N, m + k - 1 - j, m + k - 1 - j))));
      break;
    }
    case K::pe: {
      const int n = spec.n, N = 2 * n;
      for (int i = 0; i < n; ++i)
        gens.push_back(require_coords(f, mat_sub(unit(N, i, i), unit(N, n + i, n + i))));
      break;
    }
    case K::spe: {
      const int n = spec.n, N = 2 * n;
      for (int i = 0; i + 1 < n; ++i) {
        Mat x = mat_sub(unit(N, i, i), unit(N, i + 1, i + 1));
        x = mat_sub(x, mat_sub(unit(N, n + i, n + i), unit(N, n + i + 1, n + i + 1)));
        gens.push_back(require_coords(f, x));
      }
      break;
    }
    case K::q:
    case K::sq:
    case K::psq: {
      for (int i = 0; i < spec.n; ++i) {
        auto c = f.coords_of(q_even_mat(spec.n, i, i));
        if (c) gens.push_back(*c);
      }
      break;
    }
    case K::counterexample: {
      const int n = spec.n, N = 2 * n;
      for (int i = 0; i < n; ++i)
        gens.push_back(require_coords(f, mat_add(unit(N, i, i), unit(N, n + i, n + i))));
      break;
    }
    default: break;  // abstract families: no distinguished diagonal torus
  }
  return graded_span_checked(f.alg, gens);
}

// ----- comparison algebra names ---------------------------------------------

namespace {

struct NamedBuild {
  SuperAlgebra alg;
  Vec functional;              // canonical trace, zero for factors without one
  std::optional<Vec> central;  // identity-type central element
};

// replicate the index embedding used by direct_sum
NamedBuild named_product(const NamedBuild& a, const NamedBuild& b) {
  NamedBuild out;
  out.alg = direct_sum(a.alg, b.alg);
  const int de = out.alg.dim_even;
  auto a_idx = [&](int i) { return i < a.alg.dim_even ? i : de + (i - a.alg.dim_even); };
  auto b_idx = [&](int i) {
    return i < b.alg.dim_even ? a.alg.dim_even + i : de + a.alg.dim_odd + (i - b.alg.dim_even);
  };
  out.functional.assign(out.alg.dim(), Rat(0));
  for (int i = 0; i < a.alg.dim(); ++i) out.functional[a_idx(i)] = a.functional[i];
  for (int i = 0; i < b.alg.dim(); ++i) out.functional[b_idx(i)] = b.functional[i];
  if (a.central && b.central) {
    Vec c(out.alg.dim(), Rat(0));
    for (int i = 0; i < a.alg.dim(); ++i) c[a_idx(i)] = (*a.central)[i];
    for (int i = 0; i < b.alg.dim(); ++i) c[b_idx(i)] = (*b.central)[i];
    out.central = std::move(c);
  }
  return out;
}

NamedBuild apply_s(const NamedBuild& in) {
  if (vec_is_zero(in.functional)) throw std::runtime_error("s(...): no canonical trace");
  Mat row(1, in.alg.dim());
  for (int j = 0; j < in.alg.dim(); ++j) row.at(0, j) = in.functional[j];
  GradedSubspace ker = graded_span_checked(in.alg, kernel_basis(row));
  ExtractedAlgebra ex = subalgebra_as_algebra(in.alg, ker, "k");
  NamedBuild out;
  out.alg = std::move(ex.alg);
  out.functional.assign(out.alg.dim(), Rat(0));
  if (in.central) {
    auto c = ker.space.coordinates(*in.central);
    if (c) out.central = *c;
  }
  return out;
}

NamedBuild apply_p(const NamedBuild& in) {
  if (!in.central) throw std::runtime_error("p(...): no identity-type central element");
  QuotientAlgebra q = quotient(in.alg, graded_span_checked(in.alg, {*in.central}));
  NamedBuild out;
  out.alg = std::move(q.alg);
  out.functional.assign(out.alg.dim(), Rat(0));
  return out;
}

NamedBuild family_build(const FamilySpec& spec) {
  FamilyAlgebra f = build_family(spec);
  NamedBuild out;
  using K = FamilySpec::Kind;
  out.functional.assign(f.alg.dim(), Rat(0));
  const auto& real = f.alg.realization;
  if (real && (spec.kind == K::gl || spec.kind == K::sl)) {
    for (int i = 0; i < f.alg.dim(); ++i) {
      Rat t(0);
      for (int a = 0; a < real->p + real->q; ++a)
        t += (a < real->p ? rat(1) : rat(-1)) * real->mats[i].at(a, a);
      out.functional[i] = t;  // supertrace
    }
  } else if (real && (spec.kind == K::q || spec.kind == K::sq)) {
    for (int i = 0; i < f.alg.dim(); ++i) {
      Rat t(0);
      for (int a = 0; a < spec.n; ++a) t += real->mats[i].at(a, spec.n + a);
      out.functional[i] = t;  // odd trace
    }
  } else if (real && (spec.kind == K::pe || spec.kind == K::spe)) {
    for (int i = 0; i < f.alg.dim(); ++i) {
      Rat t(0);
      for (int a = 0; a < spec.n; ++a) t += real->mats[i].at(a, a);
      out.functional[i] = t;  // trace of the upper-left block
    }
  }
  if (spec.kind == K::gl || spec.kind == K::sl) {
    out.central = f.coords_of(Mat::identity(spec.m + spec.n));
  } else if (spec.kind == K::q || spec.kind == K::sq) {
    Mat aI(2 * spec.n, 2 * spec.n);
    for (int i = 0; i < 2 * spec.n; ++i) aI.at(i, i) = 1;
    out.central = f.coords_of(aI);
  }
  out.alg = std::move(f.alg);
  return out;
}

struct NameParser {
  const std::string& s;
  size_t pos = 0;

  explicit NameParser(const std::string& str) : s(str) {}

  bool eof() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  NamedBuild parse_expr() {
    NamedBuild acc = parse_term();
    while (peek() == '*') {
      ++pos;
      acc = named_product(acc, parse_term());
    }
    return acc;
  }

  NamedBuild parse_term() {
    NamedBuild base = parse_factor();
    if (peek() == '^') {
      ++pos;
      size_t start = pos;
      while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      int k = std::stoi(s.substr(start, pos - start));
      if (k < 1) throw std::runtime_error("power must be positive");
      NamedBuild acc = base;
      for (int i = 1; i < k; ++i) acc = named_product(acc, base);
      return acc;
    }
    return base;
  }

  NamedBuild parse_factor() {
    size_t start = pos;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
    std::string name = s.substr(start, pos - start);
    if (peek() != '(') throw std::runtime_error("expected '(' after '" + name + "'");
    if (name == "s" || name == "p" || name == "ps") {
      ++pos;
      NamedBuild inner = parse_expr();
      expect(')');
      if (name == "s") return apply_s(inner);
      if (name == "p") return apply_p(inner);
      return apply_p(apply_s(inner));
    }
    // family factor: args contain no parentheses
    size_t close = s.find(')', pos);
    if (close == std::string::npos) throw std::runtime_error("missing ')'");
    std::string args = s.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    std::string spec_text;
    if (name == "so") {
      spec_text = "osp(" + args + "|0)";
    } else if (name == "sp") {
      spec_text = "osp(0|" + args + ")";
    } else if ((name == "gl" || name == "sl") && args.find('|') == std::string::npos) {
      spec_text = name + "(" + args + "|0)";
    } else {
      spec_text = name + "(" + args + ")";
    }
    auto spec = parse_family_spec(spec_text);
    if (!spec) throw std::runtime_error("bad factor " + name + "(" + args + ")");
    return family_build(*spec);
  }

  void expect(char c) {
    if (peek() != c) throw std::runtime_error(std::string("expected '") + c + "'");
    ++pos;
  }
};

}  // namespace

std::optional<SuperAlgebra> named_algebra(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  try {
    NameParser p(s);
    NamedBuild b = p.parse_expr();
    if (!p.eof()) return std::nullopt;
    return b.alg;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace supersylow
