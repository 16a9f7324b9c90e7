#include "supersylow/relcoh.hpp"

#include "supersylow/linalg.hpp"
#include "supersylow/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace supersylow {

namespace {

Vec unit_vec(int n, int i) {
  Vec v(n, rat(0));
  v[i] = rat(1);
  return v;
}

// basis of S^2(g_odd): monomials x_i ∨ x_j with i <= j, lex order
std::vector<std::pair<int, int>> sym_pairs(int n1) {
  std::vector<std::pair<int, int>> p;
  for (int i = 0; i < n1; ++i)
    for (int j = i; j < n1; ++j) p.push_back({i, j});
  return p;
}

int pair_index(int n1, int i, int j) {  // i <= j
  return i * n1 - i * (i - 1) / 2 + (j - i);
}

int sym_dim(int n1, int k) {
  if (k == 0) return 1;
  if (k == 1) return n1;
  return n1 * (n1 + 1) / 2;
}

// ad(z) restricted to the odd part, one matrix per even basis element
std::vector<Mat> odd_adjoint(const SuperAlgebra& a) {
  const int de = a.dim_even, n1 = a.dim_odd;
  std::vector<Mat> out;
  for (int z = 0; z < de; ++z) {
    Mat m(n1, n1);
    for (int i = 0; i < n1; ++i) {
      Vec b = a.bracket_basis(z, de + i);
      for (int l = 0; l < n1; ++l) m.at(l, i) = b[de + l];
    }
    out.push_back(std::move(m));
  }
  return out;
}

// derivation action of each even basis element on S^2(g_odd)
std::vector<Mat> sym2_action(int n1, const std::vector<Mat>& ad1,
                             const std::vector<std::pair<int, int>>& pairs) {
  const int np = static_cast<int>(pairs.size());
  std::vector<Mat> out;
  for (const Mat& az : ad1) {
    Mat m2(np, np);
    for (int p = 0; p < np; ++p) {
      auto [u, v] = pairs[p];
      for (int l = 0; l < n1; ++l) {
        if (az.at(l, u) != 0)
          m2.at(pair_index(n1, std::min(l, v), std::max(l, v)), p) += az.at(l, u);
        if (az.at(l, v) != 0)
          m2.at(pair_index(n1, std::min(u, l), std::max(u, l)), p) += az.at(l, v);
      }
    }
    out.push_back(std::move(m2));
  }
  return out;
}

// the center of the even subalgebra must act by semisimple matrices; the
// derived part of a reductive even part acts semisimply automatically
void check_semisimple_over_even(const SuperAlgebra& a, const FdModule& m) {
  const int de = a.dim_even;
  if (de == 0) return;
  std::vector<Vec> units;
  for (int i = 0; i < de; ++i) units.push_back(unit_vec(a.dim(), i));
  ExtractedAlgebra e = subalgebra_as_algebra(a, graded_span_checked(a, units));
  for (const Vec& zb : center(e.alg).basis()) {
    if (!is_semisimple_matrix(module_action(m, mat_apply(e.inclusion, zb))))
      throw std::invalid_argument("build_complex: module is not semisimple over the even part");
  }
}

}  // namespace

std::pair<int, int> RelComplex::dims(int k) const {
  const int n = static_cast<int>(basis[k].size());
  return {even_count[k], n - even_count[k]};
}

RelComplex build_complex(const SuperAlgebra& a, const FdModule& m, int max_degree) {
  if (max_degree < 1 || max_degree > 2)
    throw std::invalid_argument("build_complex: max_degree must be 1 or 2");
  if (static_cast<int>(m.action.size()) != a.dim())
    throw std::invalid_argument("build_complex: module does not match the algebra");
  check_semisimple_over_even(a, m);

  const int d = m.dim();
  const int de = a.dim_even;
  const int n1 = a.dim_odd;
  const auto pairs = sym_pairs(n1);

  RelComplex c;
  c.module = m;
  c.odd_dim = n1;
  c.max_degree = max_degree;

  const std::vector<Mat> ad1 = odd_adjoint(a);
  const std::vector<Mat> ad2 =
      max_degree >= 2 ? sym2_action(n1, ad1, pairs) : std::vector<Mat>{};

  // joint kernel of the even-part action on Hom(S^k(g_odd), M), one parity
  // at a time; flat cochain coordinates are row * sym_dim + col
  auto degree_basis = [&](int k, std::vector<Vec>& out, int& evens) {
    const int sk = sym_dim(n1, k);
    const std::vector<Mat>* sym_act = nullptr;
    if (k == 1) sym_act = &ad1;
    if (k == 2) sym_act = &ad2;
    for (int p = 0; p < 2; ++p) {
      const bool odd_rows = ((k + p) % 2) == 1;
      std::vector<int> rows_list;
      for (int r = 0; r < d; ++r)
        if (m.odd_index(r) == odd_rows) rows_list.push_back(r);
      const int nr = static_cast<int>(rows_list.size());
      if (nr * sk > 0) {
        Mat sys(de * nr * sk, nr * sk);
        int row = 0;
        for (int z = 0; z < de; ++z) {
          const Mat& rz = m.action[z];
          for (int ri = 0; ri < nr; ++ri) {
            for (int s0 = 0; s0 < sk; ++s0, ++row) {
              for (int rj = 0; rj < nr; ++rj)
                sys.at(row, rj * sk + s0) += rz.at(rows_list[ri], rows_list[rj]);
              if (sym_act) {
                const Mat& az = (*sym_act)[z];
                for (int s = 0; s < sk; ++s) sys.at(row, ri * sk + s) -= az.at(s, s0);
              }
            }
          }
        }
        for (const Vec& kv : kernel_basis(sys)) {
          Vec full(d * sk, rat(0));
          for (int ri = 0; ri < nr; ++ri)
            for (int s = 0; s < sk; ++s) full[rows_list[ri] * sk + s] = kv[ri * sk + s];
          out.push_back(std::move(full));
        }
      }
      if (p == 0) evens = static_cast<int>(out.size());
    }
  };
  for (int k = 0; k <= max_degree; ++k) degree_basis(k, c.basis[k], c.even_count[k]);

  // (dc)(x_0,..,x_k) = Σ_i x_i · c(..x̂_i..); bracket terms vanish because
  // odd brackets land in the even part
  auto apply_d = [&](int k, const Vec& flat) -> Vec {
    Mat cm = mat_unflatten(flat, d, sym_dim(n1, k));
    if (k == 0) {
      Mat out(d, n1);
      for (int j = 0; j < n1; ++j) {
        const Mat& rj = m.action[de + j];
        for (int r = 0; r < d; ++r) {
          Rat acc = rat(0);
          for (int t = 0; t < d; ++t) acc += rj.at(r, t) * cm.at(t, 0);
          out.at(r, j) = acc;
        }
      }
      return mat_flatten(out);
    }
    Mat out(d, static_cast<int>(pairs.size()));
    for (int pi = 0; pi < static_cast<int>(pairs.size()); ++pi) {
      const auto [i, j] = pairs[pi];
      const Mat& ri = m.action[de + i];
      const Mat& rj = m.action[de + j];
      for (int r = 0; r < d; ++r) {
        Rat acc = rat(0);
        for (int t = 0; t < d; ++t) acc += ri.at(r, t) * cm.at(t, j) + rj.at(r, t) * cm.at(t, i);
        out.at(r, pi) = acc;
      }
    }
    return mat_flatten(out);
  };

  for (int k = 0; k < max_degree; ++k) {
    const int nk = static_cast<int>(c.basis[k].size());
    const int nk1 = static_cast<int>(c.basis[k + 1].size());
    Mat bmat(d * sym_dim(n1, k + 1), nk1);
    for (int j = 0; j < nk1; ++j)
      for (int r = 0; r < bmat.rows; ++r) bmat.at(r, j) = c.basis[k + 1][j][r];
    Mat dk(nk1, nk);
    for (int j = 0; j < nk; ++j) {
      Vec img = apply_d(k, c.basis[k][j]);
      if (nk1 == 0) {
        if (!vec_is_zero(img)) throw std::logic_error("build_complex: differential left the complex");
        continue;
      }
      auto coords = solve(bmat, img);
      if (!coords) throw std::logic_error("build_complex: differential left the complex");
      for (int r = 0; r < nk1; ++r) dk.at(r, j) = (*coords)[r];
    }
    c.d[k] = std::move(dk);
  }
  if (max_degree == 1) c.d[1] = Mat(0, static_cast<int>(c.basis[1].size()));

  // d preserves cochain parity; re-check the block structure exactly
  for (int k = 0; k < max_degree; ++k) {
    const int er = c.even_count[k + 1], ec = c.even_count[k];
    for (int r = 0; r < c.d[k].rows; ++r)
      for (int col = 0; col < c.d[k].cols; ++col)
        if ((r < er) != (col < ec) && c.d[k].at(r, col) != 0)
          throw std::logic_error("build_complex: differential mixed parities");
  }
  return c;
}

namespace {

// diagonal parity block of d_k in the parity-pure bases, even block first
Mat parity_block(const Mat& dk, int even_rows, int even_cols, int p) {
  const int r0 = p == 0 ? 0 : even_rows, r1 = p == 0 ? even_rows : dk.rows;
  const int c0 = p == 0 ? 0 : even_cols, c1 = p == 0 ? even_cols : dk.cols;
  Mat b(r1 - r0, c1 - c0);
  for (int r = r0; r < r1; ++r)
    for (int c = c0; c < c1; ++c) b.at(r - r0, c - c0) = dk.at(r, c);
  return b;
}

}  // namespace

std::pair<int, int> h0(const RelComplex& c) {
  std::pair<int, int> out;
  for (int p = 0; p < 2; ++p) {
    Mat b = parity_block(c.d[0], c.even_count[1], c.even_count[0], p);
    (p == 0 ? out.first : out.second) = b.cols - mat_rank(b);
  }
  return out;
}

std::pair<int, int> h1(const RelComplex& c) {
  if (c.max_degree < 2) throw std::invalid_argument("h1: complex truncated below degree 2");
  std::pair<int, int> out;
  for (int p = 0; p < 2; ++p) {
    Mat b0 = parity_block(c.d[0], c.even_count[1], c.even_count[0], p);
    Mat b1 = parity_block(c.d[1], c.even_count[2], c.even_count[1], p);
    (p == 0 ? out.first : out.second) = b1.cols - mat_rank(b1) - mat_rank(b0);
  }
  return out;
}

std::pair<int, int> ext1(const SuperAlgebra& a, const FdModule& m, const FdModule& n) {
  return h1(build_complex(a, tensor_module(a, dual_module(a, m), n), 2));
}

bool restriction_injective_ext1(const SuperAlgebra& a, const GradedSubspace& k,
                                const FdModule& m, const FdModule& n) {
  if (!is_subalgebra(a, k))
    throw std::invalid_argument("restriction_injective_ext1: not a subalgebra");
  const FdModule w = tensor_module(a, dual_module(a, m), n);
  const RelComplex cg = build_complex(a, w, 2);
  const ExtractedAlgebra sub = subalgebra_as_algebra(a, k);
  const FdModule wk = restrict_module(w, sub);
  const RelComplex ck = build_complex(sub.alg, wk, 2);

  const int d = w.dim();
  const int n1g = a.dim_odd;
  const int n1k = sub.alg.dim_odd;

  // expand basis coordinates of a degree-1 class into flat cochain coords
  auto expand = [d](const std::vector<Vec>& basis, const Vec& coords, int n1) {
    Vec f(d * n1, rat(0));
    for (int i = 0; i < static_cast<int>(coords.size()); ++i)
      if (coords[i] != 0) f = vec_add(f, vec_scale(coords[i], basis[i]));
    return f;
  };

  std::vector<Vec> z_full;  // cocycles of the ambient complex
  for (const Vec& t : kernel_basis(cg.d[1])) z_full.push_back(expand(cg.basis[1], t, n1g));
  if (z_full.empty()) return true;

  auto boundaries = [&expand](const RelComplex& c, int n1) {
    std::vector<Vec> out;
    for (int j = 0; j < c.d[0].cols; ++j) out.push_back(expand(c.basis[1], c.d[0].col(j), n1));
    return out;
  };
  const std::vector<Vec> bg_full = boundaries(cg, n1g);
  const std::vector<Vec> bk_full = boundaries(ck, n1k);

  // pull a cochain back along the inclusion of the odd part of k
  auto restrict_cochain = [&](const Vec& f) {
    Vec out(d * n1k, rat(0));
    for (int jk = 0; jk < n1k; ++jk)
      for (int i = 0; i < n1g; ++i) {
        const Rat& u = sub.inclusion.at(a.dim_even + i, sub.alg.dim_even + jk);
        if (u == 0) continue;
        for (int r = 0; r < d; ++r) out[r * n1k + jk] += u * f[r * n1g + i];
      }
    return out;
  };

  // [c] dies under restriction iff res(c) is a boundary of the subcomplex;
  // injectivity means every such cocycle is already a boundary upstairs
  const int zc = static_cast<int>(z_full.size());
  const int bkc = static_cast<int>(bk_full.size());
  Mat big(d * n1k, zc + bkc);
  for (int j = 0; j < zc; ++j) {
    Vec rc = restrict_cochain(z_full[j]);
    for (int r = 0; r < big.rows; ++r) big.at(r, j) = rc[r];
  }
  for (int j = 0; j < bkc; ++j)
    for (int r = 0; r < big.rows; ++r) big.at(r, zc + j) = bk_full[j][r];

  const Subspace bg_span = Subspace::span(d * n1g, bg_full);
  for (const Vec& t : kernel_basis(big)) {
    Vec cand(d * n1g, rat(0));
    for (int i = 0; i < zc; ++i)
      if (t[i] != 0) cand = vec_add(cand, vec_scale(t[i], z_full[i]));
    if (!bg_span.contains(cand)) return false;
  }
  return true;
}

}  // namespace supersylow
