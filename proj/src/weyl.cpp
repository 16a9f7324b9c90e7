#include "supersylow/weyl.hpp"

#include "supersylow/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace supersylow {

namespace {

Vec unit_vec(int n, int i) {
  Vec v(n, rat(0));
  v[i] = rat(1);
  return v;
}

// signed permutation block acting on coords [offset, offset + k), identity
// elsewhere; p[i] is the image slot of slot i, signs[i] the attached sign
Mat block_matrix(int n, int offset, const std::vector<int>& p, const std::vector<int>& signs) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  const int k = static_cast<int>(p.size());
  for (int i = 0; i < k; ++i) m.at(offset + i, offset + i) = 0;
  for (int i = 0; i < k; ++i) m.at(offset + p[i], offset + i) = signs[i];
  return m;
}

// S_k on [offset, offset + k), optionally with sign changes; even_signs_only
// restricts to an even number of -1s (type D)
std::vector<Mat> perm_group(int n, int offset, int k, bool with_signs, bool even_signs_only) {
  std::vector<Mat> out;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> signs(k, 1);
  do {
    if (!with_signs) {
      out.push_back(block_matrix(n, offset, p, signs));
      continue;
    }
    for (int mask = 0; mask < (1 << k); ++mask) {
      if (even_signs_only && __builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
      for (int i = 0; i < k; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(block_matrix(n, offset, p, signs));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Mat> group_product(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  std::vector<Mat> out;
  out.reserve(a.size() * b.size());
  for (const Mat& x : a)
    for (const Mat& y : b) out.push_back(mat_mul_serial(x, y));
  return out;
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

// index the underlying permutation of a signed permutation matrix
std::vector<int> perm_of(const Mat& m) {
  std::vector<int> p(m.cols, -1);
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < m.rows; ++i)
      if (m.at(i, j) != 0) {
        p[j] = i;
        break;
      }
  return p;
}

}  // namespace

WeylData weyl_data(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  WeylData wd;
  int d = 0;  // number of torus blocks

  switch (spec.kind) {
    case Kind::sl:
    case Kind::psl: {
      const int m = spec.m, n = spec.n;
      if (spec.kind == Kind::sl && m == n)
        throw std::invalid_argument("weyl_data: sl(n|n) is not a table row");
      wd.coords = m + n;
      d = std::min(m, n);
      wd.ambient = group_product(perm_group(wd.coords, 0, m, false, false),
                                 perm_group(wd.coords, m, n, false, false));
      for (int i = 0; i < d; ++i) {
        wd.torus_dirs.push_back(
            vec_add(unit_vec(wd.coords, i), unit_vec(wd.coords, m + i)));
        wd.blocks.push_back({i, m + i});
      }
      break;
    }
    case Kind::osp: {
      const int k = spec.m / 2;      // so(m) diagonal coordinates
      const int nn = spec.n / 2;     // sp(2n) diagonal coordinates
      const bool so_even = spec.m % 2 == 0;
      wd.coords = k + nn;
      d = std::min(k, nn);
      wd.ambient = group_product(perm_group(wd.coords, 0, k, true, so_even),
                                 perm_group(wd.coords, k, nn, true, false));
      for (int i = 0; i < d; ++i) {
        wd.torus_dirs.push_back(
            vec_add(unit_vec(wd.coords, i), unit_vec(wd.coords, k + i)));
        wd.blocks.push_back({i, k + i});
      }
      break;
    }
    case Kind::pe:
    case Kind::spe: {
      wd.coords = spec.n;
      wd.ambient = perm_group(wd.coords, 0, wd.coords, false, false);
      d = spec.n / 2;
      for (int i = 0; i < d; ++i) {
        wd.torus_dirs.push_back(vec_add(unit_vec(wd.coords, 2 * i),
                                        vec_scale(rat(-1), unit_vec(wd.coords, 2 * i + 1))));
        wd.blocks.push_back({2 * i, 2 * i + 1});
      }
      break;
    }
    case Kind::psq: {
      wd.coords = spec.n;
      wd.ambient = perm_group(wd.coords, 0, wd.coords, false, false);
      // every diagonal direction lies in the candidate torus
      for (int i = 0; i < wd.coords; ++i) wd.torus_dirs.push_back(unit_vec(wd.coords, i));
      for (int i = 0; i < spec.n / 2; ++i) wd.blocks.push_back({2 * i, 2 * i + 1});
      if (spec.n % 2) wd.blocks.push_back({spec.n - 1});
      d = wd.coords;
      break;
    }
    default:
      throw std::invalid_argument("weyl_data: not a table family");
  }

  const int td = static_cast<int>(wd.torus_dirs.size());
  Mat tbasis(wd.coords, td);
  for (int j = 0; j < td; ++j)
    for (int r = 0; r < wd.coords; ++r) tbasis.at(r, j) = wd.torus_dirs[j][r];
  const bool full_torus = td == wd.coords && spec.kind == Kind::psq;

  std::set<std::string> seen_g, seen_n;
  for (const Mat& w : wd.ambient) {
    Mat induced(td, td);
    if (full_torus) {
      induced = w;
    } else {
      bool stabilizes = true;
      for (int j = 0; j < td && stabilizes; ++j) {
        auto coords = solve(tbasis, mat_apply(w, wd.torus_dirs[j]));
        if (!coords) {
          stabilizes = false;
          break;
        }
        for (int r = 0; r < td; ++r) induced.at(r, j) = (*coords)[r];
      }
      if (!stabilizes) continue;
    }
    if (seen_g.insert(mat_key(induced)).second) wd.w_g.push_back(induced);

    // block preservation: the underlying permutation maps blocks onto blocks
    const std::vector<int> p = perm_of(w);
    bool blocks_ok = true;
    for (const std::vector<int>& b : wd.blocks) {
      std::vector<int> img;
      for (int c : b) img.push_back(p[c]);
      std::sort(img.begin(), img.end());
      bool found = false;
      for (const std::vector<int>& b2 : wd.blocks)
        if (img == b2) {
          found = true;
          break;
        }
      if (!found) {
        blocks_ok = false;
        break;
      }
    }
    if (blocks_ok && seen_n.insert(mat_key(induced)).second) wd.w_n.push_back(induced);
  }
  return wd;
}

int third_sylow_count(const WeylData& wd) {
  const int g = static_cast<int>(wd.w_g.size());
  const int n = static_cast<int>(wd.w_n.size());
  if (n == 0 || g % n != 0) throw std::logic_error("third_sylow_count: not a subgroup index");
  return g / n;
}

}  // namespace supersylow
