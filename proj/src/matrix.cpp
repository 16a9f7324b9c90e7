#include "supersylow/matrix.hpp"

#include <cassert>

namespace supersylow {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rs) {
  rows = static_cast<int>(rs.size());
  cols = rows ? static_cast<int>(rs.begin()->size()) : 0;
  a.assign(static_cast<size_t>(rows) * cols, Rat(0));
  int i = 0;
  for (const auto& r : rs) {
    assert(static_cast<int>(r.size()) == cols);
    int j = 0;
    for (long v : r) at(i, j++) = rat(v);
    ++i;
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Vec Mat::row(int i) const {
  Vec v(cols);
  for (int j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

Vec Mat::col(int j) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

Mat mat_add(const Mat& x, const Mat& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  Mat r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat mat_scale(const Rat& c, const Mat& x) {
  Mat r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = c * x.a[i];
  return r;
}

Mat mat_transpose(const Mat& x) {
  Mat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Vec mat_apply(const Mat& x, const Vec& v) {
  assert(static_cast<int>(v.size()) == x.cols);
  Vec r(x.rows, Rat(0));
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      if (x.at(i, j) != 0 && v[j] != 0) r[i] += x.at(i, j) * v[j];
  return r;
}

Rat mat_trace(const Mat& x) {
  assert(x.is_square());
  Rat t(0);
  for (int i = 0; i < x.rows; ++i) t += x.at(i, i);
  return t;
}

Rat mat_supertrace(const Mat& x, int p) {
  assert(x.is_square() && p >= 0 && p <= x.rows);
  Rat t(0);
  for (int i = 0; i < x.rows; ++i) t += (i < p) ? x.at(i, i) : -x.at(i, i);
  return t;
}

Vec mat_flatten(const Mat& x) { return x.a; }

Mat mat_unflatten(const Vec& v, int rows, int cols) {
  assert(static_cast<int>(v.size()) == rows * cols);
  Mat m(rows, cols);
  m.a = v;
  return m;
}

}  // namespace supersylow
