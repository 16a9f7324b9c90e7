#include "supersylow/fdmodule.hpp"

#include "supersylow/linalg.hpp"
#include "supersylow/parallel.hpp"
#include "supersylow/polynomial.hpp"

#include <json.hpp>

#include <stdexcept>

namespace supersylow {

namespace {

using ojson = nlohmann::ordered_json;

ojson mat_to_json(const Mat& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.rows; ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const ojson& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) {
      auto r = rat_from_string(j.at(i).at(c).get<std::string>());
      if (!r) throw std::runtime_error("module_from_json: bad rational");
      m.at(i, c) = *r;
    }
  return m;
}

// graded kernel of a parity-preserving matrix, returned as module vectors
void graded_kernel(const Mat& m, int de, std::vector<Vec>* even_out, std::vector<Vec>* odd_out) {
  const int d = m.rows;
  const int dn = d - de;
  Mat top(de, de), bot(dn, dn);
  for (int i = 0; i < de; ++i)
    for (int j = 0; j < de; ++j) top.at(i, j) = m.at(i, j);
  for (int i = 0; i < dn; ++i)
    for (int j = 0; j < dn; ++j) bot.at(i, j) = m.at(de + i, de + j);
  for (const Vec& k : kernel_basis(top)) {
    Vec v(d, Rat(0));
    for (int i = 0; i < de; ++i) v[i] = k[i];
    even_out->push_back(v);
  }
  for (const Vec& k : kernel_basis(bot)) {
    Vec v(d, Rat(0));
    for (int i = 0; i < dn; ++i) v[de + i] = k[i];
    odd_out->push_back(v);
  }
}

}  // namespace

Mat module_action(const FdModule& m, const Vec& v) {
  Mat out(m.dim(), m.dim());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    out = mat_add(out, mat_scale(v[i], m.action[i]));
  }
  return out;
}

std::vector<std::string> check_module(const SuperAlgebra& a, const FdModule& m) {
  std::vector<std::string> bad;
  const int d = m.dim();
  if (static_cast<int>(m.action.size()) != a.dim()) {
    bad.push_back("action count " + std::to_string(m.action.size()) + " != algebra dim " +
                  std::to_string(a.dim()));
    return bad;
  }
  for (int i = 0; i < a.dim(); ++i) {
    const Mat& r = m.action[i];
    if (r.rows != d || r.cols != d) {
      bad.push_back("action " + std::to_string(i) + ": wrong shape");
      continue;
    }
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        if (r.at(p, q) == 0) continue;
        const bool swaps = m.odd_index(p) != m.odd_index(q);
        if (swaps != a.odd_index(i))
          bad.push_back("action " + std::to_string(i) + ": parity block violated at (" +
                        std::to_string(p) + "," + std::to_string(q) + ")");
      }
  }
  if (!bad.empty()) return bad;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) {
      Mat lhs = module_action(m, a.bracket_basis(i, j));
      Mat rhs = mat_sub(mat_mul(m.action[i], m.action[j]),
                        (a.odd_index(i) && a.odd_index(j))
                            ? mat_scale(rat(-1), mat_mul(m.action[j], m.action[i]))
                            : mat_mul(m.action[j], m.action[i]));
      if (!(lhs == rhs))
        bad.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) +
                      "): action does not represent the bracket");
    }
  return bad;
}

int sdim(const FdModule& m) { return m.dim_even - m.dim_odd; }

FdModule trivial_module(const SuperAlgebra& a) {
  FdModule m;
  m.dim_even = 1;
  m.dim_odd = 0;
  m.action.assign(a.dim(), Mat(1, 1));
  return m;
}

FdModule adjoint_module(const SuperAlgebra& a) {
  FdModule m;
  m.dim_even = a.dim_even;
  m.dim_odd = a.dim_odd;
  for (int i = 0; i < a.dim(); ++i) m.action.push_back(a.ad_basis(i));
  return m;
}

std::optional<FdModule> standard_module(const FamilyAlgebra& f) {
  const auto& real = f.alg.realization;
  if (!real || !real->central_ideal.empty()) return std::nullopt;
  FdModule m;
  m.dim_even = real->p;
  m.dim_odd = real->q;
  m.action = real->mats;
  return m;
}

FdModule direct_sum_module(const FdModule& m1, const FdModule& m2) {
  if (m1.action.size() != m2.action.size())
    throw std::invalid_argument("direct_sum_module: modules over different algebras");
  FdModule out;
  out.dim_even = m1.dim_even + m2.dim_even;
  out.dim_odd = m1.dim_odd + m2.dim_odd;
  auto map1 = [&](int i) { return i < m1.dim_even ? i : out.dim_even + (i - m1.dim_even); };
  auto map2 = [&](int i) {
    return i < m2.dim_even ? m1.dim_even + i : out.dim_even + m1.dim_odd + (i - m2.dim_even);
  };
  for (size_t k = 0; k < m1.action.size(); ++k) {
    Mat act(out.dim(), out.dim());
    for (int r = 0; r < m1.dim(); ++r)
      for (int c = 0; c < m1.dim(); ++c) act.at(map1(r), map1(c)) = m1.action[k].at(r, c);
    for (int r = 0; r < m2.dim(); ++r)
      for (int c = 0; c < m2.dim(); ++c) act.at(map2(r), map2(c)) = m2.action[k].at(r, c);
    out.action.push_back(std::move(act));
  }
  return out;
}

FdModule tensor_module(const SuperAlgebra& a, const FdModule& m1, const FdModule& m2) {
  if (m1.action.size() != m2.action.size() || static_cast<int>(m1.action.size()) != a.dim())
    throw std::invalid_argument("tensor_module: modules over different algebras");
  FdModule out;
  std::vector<std::vector<int>> idx(m1.dim(), std::vector<int>(m2.dim(), -1));
  std::vector<std::pair<int, int>> pairs;
  for (int pass = 0; pass < 2; ++pass)  // even pairs first, then odd
    for (int i = 0; i < m1.dim(); ++i)
      for (int j = 0; j < m2.dim(); ++j) {
        const bool odd = m1.odd_index(i) != m2.odd_index(j);
        if (odd != (pass == 1)) continue;
        idx[i][j] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
      }
  out.dim_odd = m1.dim_even * m2.dim_odd + m1.dim_odd * m2.dim_even;
  out.dim_even = static_cast<int>(pairs.size()) - out.dim_odd;
  for (int k = 0; k < a.dim(); ++k) {
    Mat act(static_cast<int>(pairs.size()), static_cast<int>(pairs.size()));
    for (size_t col = 0; col < pairs.size(); ++col) {
      auto [i, j] = pairs[col];
      for (int r = 0; r < m1.dim(); ++r) {
        const Rat& c1 = m1.action[k].at(r, i);
        if (c1 != 0) act.at(idx[r][j], col) += c1;
      }
      const bool flip = a.odd_index(k) && m1.odd_index(i);  // Koszul sign past the first factor
      for (int s = 0; s < m2.dim(); ++s) {
        const Rat& c2 = m2.action[k].at(s, j);
        if (c2 != 0) act.at(idx[i][s], col) += flip ? -c2 : c2;
      }
    }
    out.action.push_back(std::move(act));
  }
  return out;
}

FdModule dual_module(const SuperAlgebra& a, const FdModule& m) {
  FdModule out;
  out.dim_even = m.dim_even;
  out.dim_odd = m.dim_odd;
  for (int k = 0; k < a.dim(); ++k) {
    Mat act(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) {
        // (x·f)(v) = −(−1)^{|x||f|} f(x·v) on dual basis functionals
        const bool flip = a.odd_index(k) && m.odd_index(i);
        act.at(j, i) = flip ? m.action[k].at(i, j) : -m.action[k].at(i, j);
      }
    out.action.push_back(std::move(act));
  }
  return out;
}

FdModule restrict_module(const FdModule& m, const ExtractedAlgebra& sub) {
  FdModule out;
  out.dim_even = m.dim_even;
  out.dim_odd = m.dim_odd;
  for (int j = 0; j < sub.inclusion.cols; ++j) out.action.push_back(module_action(m, sub.inclusion.col(j)));
  return out;
}

DsResult ds(const SuperAlgebra& a, const FdModule& m, const Vec& x) {
  if (!vec_is_zero(a.even_component(x))) throw std::invalid_argument("ds: x must be odd");
  DsResult res;
  res.input = m;
  res.x = x;
  const int d = m.dim();

  Mat X = module_action(m, x);
  Mat Y = module_action(m, a.bracket(x, x));
  if (!(mat_mul(X, X) == mat_scale(rat(1, 2), Y)))
    throw std::invalid_argument("ds: action inconsistent with the bracket of x with itself");
  if (!is_semisimple_matrix(Y)) throw std::invalid_argument("ds: [x,x] acts non-semisimply");

  // invariant subspace: kernel of ρ([x,x]), graded since Y preserves parity
  std::vector<Vec> ker_e, ker_o;
  graded_kernel(Y, m.dim_even, &ker_e, &ker_o);
  const int ke = static_cast<int>(ker_e.size());
  const int ko = static_cast<int>(ker_o.size());
  Mat basis(d, ke + ko);
  for (int c = 0; c < ke; ++c)
    for (int r = 0; r < d; ++r) basis.at(r, c) = ker_e[c][r];
  for (int c = 0; c < ko; ++c)
    for (int r = 0; r < d; ++r) basis.at(r, ke + c) = ker_o[c][r];

  // ρ(x) in restricted coordinates (even block first); squares to zero there
  Mat A(ke + ko, ke + ko);
  for (int c = 0; c < ke + ko; ++c) {
    Vec img = mat_apply(X, basis.col(c));
    auto coords = solve(basis, img);
    if (!coords) throw std::logic_error("ds: restriction is not invariant");
    for (int r = 0; r < ke + ko; ++r) A.at(r, c) = (*coords)[r];
  }
  Mat a_oe(ko, ke), a_eo(ke, ko);  // parity-swapping blocks
  for (int r = 0; r < ko; ++r)
    for (int c = 0; c < ke; ++c) a_oe.at(r, c) = A.at(ke + r, c);
  for (int r = 0; r < ke; ++r)
    for (int c = 0; c < ko; ++c) a_eo.at(r, c) = A.at(r, ke + c);

  std::vector<Vec> kere = kernel_basis(a_oe), kero = kernel_basis(a_eo);
  const int ime = mat_rank(a_eo), imo = mat_rank(a_oe);
  res.kernel_dim = {static_cast<int>(kere.size()), static_cast<int>(kero.size())};
  res.image_cap_kernel_dim = {ime, imo};  // im ⊆ ker because ρ(x)² vanishes here
  res.output_dims = {res.kernel_dim.first - ime, res.kernel_dim.second - imo};

  // representatives: kernel vectors independent of the image, per parity
  auto pick = [&](const std::vector<Vec>& kern, const Mat& img_block, bool odd_part) {
    std::vector<Vec> img_vecs;
    for (int c = 0; c < img_block.cols; ++c) img_vecs.push_back(img_block.col(c));
    Subspace grow = Subspace::span(img_block.rows, img_vecs);
    for (const Vec& k : kern) {
      if (grow.contains(k)) continue;
      std::vector<Vec> all = grow.basis_vectors();
      all.push_back(k);
      grow = Subspace::span(img_block.rows, all);
      // lift restricted coordinates back to module coordinates
      Vec lift(d, Rat(0));
      for (size_t i = 0; i < k.size(); ++i) {
        const Vec& b = odd_part ? ker_o[i] : ker_e[i];
        for (int r = 0; r < d; ++r) lift[r] += k[i] * b[r];
      }
      res.representatives.push_back(lift);
    }
  };
  pick(kere, a_eo, false);
  pick(kero, a_oe, true);
  return res;
}

std::map<Vec, std::pair<int, int>> weight_spaces(const SuperAlgebra& a, const FdModule& m,
                                                 const RootDatum& rd) {
  const int d = m.dim();
  struct Piece {
    Subspace sp;
    Vec wt;
  };
  std::vector<Piece> pieces{{Subspace::full(d), {}}};
  for (const Vec& t : rd.torus_coords) {
    Mat T = module_action(m, t);
    Poly mp = minimal_polynomial(T);
    if (poly_deg(poly_gcd(mp, poly_derivative(mp))) != 0)
      throw std::invalid_argument("weight_spaces: torus acts non-diagonalizably");
    auto roots = rational_roots_if_split(mp);
    if (!roots) throw std::invalid_argument("weight_spaces: irrational torus weights");
    std::vector<Piece> next;
    for (const Rat& lam : *roots) {
      Mat shift = mat_sub(T, mat_scale(lam, Mat::identity(d)));
      Subspace eig = Subspace::span(d, kernel_basis(shift));
      for (const Piece& p : pieces) {
        Subspace inter = subspace_intersect(p.sp, eig);
        if (inter.dim() == 0) continue;
        Vec wt = p.wt;
        wt.push_back(lam);
        next.push_back({std::move(inter), std::move(wt)});
      }
    }
    pieces = std::move(next);
  }
  std::vector<Vec> even_units, odd_units;
  for (int i = 0; i < d; ++i) {
    Vec u(d, Rat(0));
    u[i] = 1;
    (i < m.dim_even ? even_units : odd_units).push_back(u);
  }
  Subspace even_block = Subspace::span(d, even_units);
  Subspace odd_block = Subspace::span(d, odd_units);
  std::map<Vec, std::pair<int, int>> out;
  int total = 0;
  for (const Piece& p : pieces) {
    const int e = subspace_intersect(p.sp, even_block).dim();
    const int o = subspace_intersect(p.sp, odd_block).dim();
    if (e + o != p.sp.dim())
      throw std::logic_error("weight_spaces: eigenspace not graded (module invalid?)");
    out[p.wt] = {e, o};
    total += p.sp.dim();
  }
  if (total != d) throw std::logic_error("weight_spaces: eigenspaces do not fill the module");
  return out;
}

std::string module_to_json(const FdModule& m, int indent) {
  ojson j;
  j["dim_even"] = m.dim_even;
  j["dim_odd"] = m.dim_odd;
  ojson acts = ojson::array();
  for (const Mat& act : m.action) acts.push_back(mat_to_json(act));
  j["action"] = std::move(acts);
  return j.dump(indent) + "\n";
}

FdModule module_from_json(const std::string& text) {
  ojson j = ojson::parse(text);
  FdModule m;
  m.dim_even = j.at("dim_even").get<int>();
  m.dim_odd = j.at("dim_odd").get<int>();
  for (const auto& act : j.at("action")) {
    Mat mat = mat_from_json(act);
    if (mat.rows != m.dim() || mat.cols != m.dim())
      throw std::runtime_error("module_from_json: action shape mismatch");
    m.action.push_back(std::move(mat));
  }
  return m;
}

}  // namespace supersylow
