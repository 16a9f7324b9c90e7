#include "supersylow/linalg.hpp"

#include <cassert>

namespace supersylow {

RrefResult rref(const Mat& m) {
  Mat w = m;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < w.cols && row < w.rows; ++col) {
    int sel = -1;
    for (int i = row; i < w.rows; ++i)
      if (w.at(i, col) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < w.cols; ++j) std::swap(w.at(sel, j), w.at(row, j));
    Rat inv = 1 / w.at(row, col);
    for (int j = col; j < w.cols; ++j) w.at(row, j) *= inv;
    for (int i = 0; i < w.rows; ++i) {
      if (i == row || w.at(i, col) == 0) continue;
      Rat f = w.at(i, col);
      for (int j = col; j < w.cols; ++j) w.at(i, j) -= f * w.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  RrefResult res;
  res.rank = row;
  res.pivots = pivots;
  res.r = Mat(row, w.cols);
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < w.cols; ++j) res.r.at(i, j) = w.at(i, j);
  return res;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols, Rat(0));
    v[j] = 1;
    for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.r.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  assert(static_cast<int>(b.size()) == m.rows);
  Mat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  RrefResult rr = rref(aug);
  Vec x(m.cols, Rat(0));
  for (int i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == m.cols) return std::nullopt;  // 0 = 1 row
    x[rr.pivots[i]] = rr.r.at(i, m.cols);
  }
  return x;
}

int mat_rank(const Mat& m) { return rref(m).rank; }

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat::identity(ambient);
  for (int i = 0; i < ambient; ++i) s.pivots.push_back(i);
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& gens) {
  Mat m(static_cast<int>(gens.size()), ambient);
  for (size_t i = 0; i < gens.size(); ++i) {
    assert(static_cast<int>(gens[i].size()) == ambient);
    for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = gens[i][j];
  }
  RrefResult rr = rref(m);
  Subspace s;
  s.ambient = ambient;
  s.basis = rr.r;
  s.pivots = rr.pivots;
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  assert(static_cast<int>(v.size()) == ambient);
  Vec w = v;
  for (int i = 0; i < basis.rows; ++i) {
    const Rat& c = w[pivots[i]];
    if (c == 0) continue;
    Rat f = c;  // pivot entries are 1
    for (int j = 0; j < ambient; ++j)
      if (basis.at(i, j) != 0) w[j] -= f * basis.at(i, j);
  }
  return w;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.basis.rows; ++i)
    if (!contains(other.basis.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient == o.ambient && basis == o.basis;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec w = v;
  Vec coords(basis.rows, Rat(0));
  for (int i = 0; i < basis.rows; ++i) {
    const Rat c = w[pivots[i]];
    if (c == 0) continue;
    coords[i] = c;
    for (int j = 0; j < ambient; ++j)
      if (basis.at(i, j) != 0) w[j] -= c * basis.at(i, j);
  }
  if (!vec_is_zero(w)) return std::nullopt;
  return coords;
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (int i = 0; i < basis.rows; ++i) out.push_back(basis.row(i));
  return out;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  assert(a.ambient == b.ambient);
  std::vector<Vec> gens = a.basis_vectors();
  for (auto& v : b.basis_vectors()) gens.push_back(v);
  return Subspace::span(a.ambient, gens);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  assert(a.ambient == b.ambient);
  // Solve lambda . A = mu . B: kernel of [A^T | -B^T].
  int n = a.ambient, ka = a.dim(), kb = b.dim();
  Mat m(n, ka + kb);
  for (int i = 0; i < ka; ++i)
    for (int j = 0; j < n; ++j) m.at(j, i) = a.basis.at(i, j);
  for (int i = 0; i < kb; ++i)
    for (int j = 0; j < n; ++j) m.at(j, ka + i) = -b.basis.at(i, j);
  std::vector<Vec> ker = kernel_basis(m);
  std::vector<Vec> gens;
  for (const auto& k : ker) {
    Vec v(n, Rat(0));
    for (int i = 0; i < ka; ++i)
      if (k[i] != 0)
        for (int j = 0; j < n; ++j) v[j] += k[i] * a.basis.at(i, j);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

std::vector<int> complement_coordinates(const Subspace& s) {
  std::vector<bool> is_pivot(s.ambient, false);
  for (int p : s.pivots) is_pivot[p] = true;
  std::vector<int> out;
  for (int j = 0; j < s.ambient; ++j)
    if (!is_pivot[j]) out.push_back(j);
  return out;
}

}  // namespace supersylow
