#include "supersylow/superalgebra.hpp"

#include "supersylow/parallel.hpp"

#include <cassert>
#include <stdexcept>

namespace supersylow {

void SuperAlgebra::init_table() {
  table.assign(dim(), std::vector<std::vector<std::pair<int, Rat>>>(dim()));
  if (names.empty())
    for (int i = 0; i < dim(); ++i) names.push_back("b" + std::to_string(i));
}

void SuperAlgebra::set_bracket(int i, int j, const Vec& v) {
  assert(static_cast<int>(v.size()) == dim());
  auto& cell = table[i][j];
  cell.clear();
  for (int k = 0; k < dim(); ++k)
    if (v[k] != 0) cell.emplace_back(k, v[k]);
}

Vec SuperAlgebra::bracket_basis(int i, int j) const {
  Vec v(dim(), Rat(0));
  for (const auto& [k, c] : table[i][j]) v[k] = c;
  return v;
}

Vec SuperAlgebra::bracket(const Vec& x, const Vec& y) const {
  assert(static_cast<int>(x.size()) == dim() && static_cast<int>(y.size()) == dim());
  Vec r(dim(), Rat(0));
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      const Rat f = x[i] * y[j];
      for (const auto& [k, c] : table[i][j]) r[k] += f * c;
    }
  }
  return r;
}

Mat SuperAlgebra::ad(const Vec& x) const {
  Mat m(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    for (int i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (const auto& [k, c] : table[i][j]) m.at(k, j) += x[i] * c;
    }
  }
  return m;
}

Mat SuperAlgebra::ad_basis(int i) const {
  Mat m(dim(), dim());
  for (int j = 0; j < dim(); ++j)
    for (const auto& [k, c] : table[i][j]) m.at(k, j) = c;
  return m;
}

Vec SuperAlgebra::even_component(const Vec& x) const {
  Vec r(dim(), Rat(0));
  for (int i = 0; i < dim_even; ++i) r[i] = x[i];
  return r;
}

Vec SuperAlgebra::odd_component(const Vec& x) const {
  Vec r(dim(), Rat(0));
  for (int i = dim_even; i < dim(); ++i) r[i] = x[i];
  return r;
}

bool SuperAlgebra::is_homogeneous(const Vec& x) const {
  return vec_is_zero(even_component(x)) || vec_is_zero(odd_component(x));
}

Mat SuperAlgebra::realize(const Vec& x) const {
  assert(realization.has_value());
  const Realization& r = *realization;
  Mat m(r.p + r.q, r.p + r.q);
  for (int i = 0; i < dim(); ++i)
    if (x[i] != 0) m = mat_add(m, mat_scale(x[i], r.mats[i]));
  return m;
}

bool check_super_antisymmetry(const SuperAlgebra& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ij = a.bracket_basis(i, j);
      Vec ji = a.bracket_basis(j, i);
      const bool both_odd = a.odd_index(i) && a.odd_index(j);
      // [x,y] + (-1)^{|x||y|}[y,x] = 0: symmetric when both odd, else antisymmetric
      Vec sum = both_odd ? vec_sub(ij, ji) : vec_add(ij, ji);
      if (!vec_is_zero(sum)) return false;
      // parity of the output must match |i| + |j|
      const int want = (a.parity(i) + a.parity(j)) % 2;
      for (int k = 0; k < n; ++k)
        if (ij[k] != 0 && a.parity(k) != want) return false;
    }
  return true;
}

namespace {

bool jacobi_triple(const SuperAlgebra& a, int i, int j, int k) {
  // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]
  auto term = [&a](int p, int q, int r) {
    Vec inner = a.bracket_basis(q, r);
    Vec v(a.dim(), Rat(0));
    for (int t = 0; t < a.dim(); ++t)
      if (inner[t] != 0) {
        for (const auto& [m, c] : a.table[p][t]) v[m] += inner[t] * c;
      }
    return v;
  };
  auto sgn = [&a](int p, int q) { return (a.parity(p) * a.parity(q)) % 2 ? rat(-1) : rat(1); };
  Vec total = vec_scale(sgn(i, k), term(i, j, k));
  total = vec_add(total, vec_scale(sgn(j, i), term(j, k, i)));
  total = vec_add(total, vec_scale(sgn(k, j), term(k, i, j)));
  return vec_is_zero(total);
}

}  // namespace

bool check_jacobi_serial(const SuperAlgebra& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        if (!jacobi_triple(a, i, j, k)) return false;
  return true;
}

bool check_jacobi_par(const SuperAlgebra& a) {
  const int n = a.dim();
  bool ok = true;
#pragma omp parallel for schedule(dynamic) shared(ok)
  for (int i = 0; i < n; ++i) {
    if (!ok) continue;
    bool local = true;
    for (int j = i; j < n && local; ++j)
      for (int k = j; k < n && local; ++k)
        if (!jacobi_triple(a, i, j, k)) local = false;
    if (!local) {
#pragma omp critical
      ok = false;
    }
  }
  return ok;
}

bool check_realization(const SuperAlgebra& a) {
  if (!a.realization) return true;
  const Realization& r = *a.realization;
  if (static_cast<int>(r.mats.size()) != a.dim()) return false;
  Subspace central = Subspace::zero((r.p + r.q) * (r.p + r.q));
  {
    std::vector<Vec> gens;
    for (const Mat& c : r.central_ideal) gens.push_back(mat_flatten(c));
    central = Subspace::span(central.ambient, gens);
  }
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const bool anti = a.odd_index(i) && a.odd_index(j);
      Mat lhs = mat_commutator(r.mats[i], r.mats[j], anti);
      Mat rhs = a.realize(a.bracket_basis(i, j));
      if (!central.contains(mat_flatten(mat_sub(lhs, rhs)))) return false;
    }
  return true;
}

std::vector<Vec> GradedSubspace::even_basis() const {
  std::vector<Vec> out;
  for (int i = 0; i < even_dim; ++i) out.push_back(space.basis.row(i));
  return out;
}

std::vector<Vec> GradedSubspace::odd_basis() const {
  std::vector<Vec> out;
  for (int i = even_dim; i < space.dim(); ++i) out.push_back(space.basis.row(i));
  return out;
}

std::optional<GradedSubspace> graded_span(const SuperAlgebra& a, const std::vector<Vec>& gens) {
  Subspace s = Subspace::span(a.dim(), gens);
  GradedSubspace g;
  g.space = s;
  g.even_dim = 0;
  for (int i = 0; i < s.dim(); ++i) {
    Vec row = s.basis.row(i);
    bool even_pure = vec_is_zero(a.odd_component(row));
    bool odd_pure = vec_is_zero(a.even_component(row));
    if (even_pure) ++g.even_dim;
    else if (!odd_pure) return std::nullopt;  // mixed row: span is not graded
  }
  // RREF ordering guarantees even rows (pivot < dim_even) come first.
  return g;
}

GradedSubspace graded_span_checked(const SuperAlgebra& a, const std::vector<Vec>& gens) {
  auto g = graded_span(a, gens);
  if (!g) throw std::runtime_error("expected a graded subspace");
  return *g;
}

GradedSubspace full_subspace(const SuperAlgebra& a) {
  GradedSubspace g;
  g.space = Subspace::full(a.dim());
  g.even_dim = a.dim_even;
  return g;
}

GradedSubspace zero_subspace(const SuperAlgebra& a) {
  GradedSubspace g;
  g.space = Subspace::zero(a.dim());
  g.even_dim = 0;
  return g;
}

GradedSubspace graded_sum(const SuperAlgebra& a, const GradedSubspace& x, const GradedSubspace& y) {
  std::vector<Vec> gens = x.basis();
  for (auto& v : y.basis()) gens.push_back(v);
  return graded_span_checked(a, gens);
}

GradedSubspace graded_intersect(const SuperAlgebra& a, const GradedSubspace& x,
                                const GradedSubspace& y) {
  Subspace s = subspace_intersect(x.space, y.space);
  return graded_span_checked(a, s.basis_vectors());
}

GradedSubspace bracket_span(const SuperAlgebra& a, const GradedSubspace& x,
                            const GradedSubspace& y) {
  std::vector<Vec> gens;
  for (const auto& u : x.basis())
    for (const auto& v : y.basis()) gens.push_back(a.bracket(u, v));
  return graded_span_checked(a, gens);
}

bool is_subalgebra(const SuperAlgebra& a, const GradedSubspace& s) {
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (!s.contains(a.bracket(u, v))) return false;
  return true;
}

bool is_ideal(const SuperAlgebra& a, const GradedSubspace& s) {
  for (int i = 0; i < a.dim(); ++i) {
    Vec e(a.dim(), Rat(0));
    e[i] = 1;
    for (const auto& v : s.basis())
      if (!s.contains(a.bracket(e, v))) return false;
  }
  return true;
}

GradedSubspace generated_subalgebra(const SuperAlgebra& a, const std::vector<Vec>& gens) {
  Subspace cur = Subspace::span(a.dim(), gens);
  while (true) {
    std::vector<Vec> next = cur.basis_vectors();
    bool grew = false;
    auto base = cur.basis_vectors();
    for (size_t i = 0; i < base.size(); ++i)
      for (size_t j = i; j < base.size(); ++j) {
        Vec br = a.bracket(base[i], base[j]);
        if (!cur.contains(br)) {
          next.push_back(std::move(br));
          grew = true;
        }
      }
    if (!grew) break;
    cur = Subspace::span(a.dim(), next);
  }
  return graded_span_checked(a, cur.basis_vectors());
}

GradedSubspace derived_subalgebra(const SuperAlgebra& a) {
  std::vector<Vec> gens;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) gens.push_back(a.bracket_basis(i, j));
  return graded_span_checked(a, gens);
}

namespace {

// Constraint matrix for x -> (residues of [x, s_j] after reduction by target),
// with target = zero space giving the centralizer condition.
GradedSubspace solve_bracket_condition(const SuperAlgebra& a, const std::vector<Vec>& against,
                                       const Subspace* reduce_by) {
  const int n = a.dim();
  const int m = static_cast<int>(against.size());
  Mat sys(n * m, n);
  for (int i = 0; i < n; ++i) {
    Vec e(n, Rat(0));
    e[i] = 1;
    for (int j = 0; j < m; ++j) {
      Vec br = a.bracket(e, against[j]);
      if (reduce_by) br = reduce_by->reduce(br);
      for (int k = 0; k < n; ++k) sys.at(j * n + k, i) = br[k];
    }
  }
  return graded_span_checked(a, kernel_basis(sys));
}

}  // namespace

GradedSubspace centralizer(const SuperAlgebra& a, const GradedSubspace& s) {
  return solve_bracket_condition(a, s.basis(), nullptr);
}

GradedSubspace centralizer_of_element(const SuperAlgebra& a, const Vec& x) {
  return solve_bracket_condition(a, {x}, nullptr);
}

GradedSubspace center(const SuperAlgebra& a) { return centralizer(a, full_subspace(a)); }

GradedSubspace normalizer(const SuperAlgebra& a, const GradedSubspace& s) {
  return solve_bracket_condition(a, s.basis(), &s.space);
}

GradedSubspace even_center(const SuperAlgebra& a) {
  GradedSubspace z = center(a);
  return graded_span_checked(a, z.even_basis());
}

std::optional<Vec> ExtractedAlgebra::parent_coords(const SuperAlgebra& parent,
                                                   const GradedSubspace& s,
                                                   const Vec& parent_vec) const {
  return s.space.coordinates(parent_vec);
}

ExtractedAlgebra subalgebra_as_algebra(const SuperAlgebra& a, const GradedSubspace& s,
                                       const std::string& name_prefix) {
  assert(is_subalgebra(a, s));
  ExtractedAlgebra out;
  auto basis = s.basis();
  const int d = s.dim();
  out.alg.dim_even = s.even_dim;
  out.alg.dim_odd = s.odd_dim();
  for (int i = 0; i < d; ++i) out.alg.names.push_back(name_prefix + std::to_string(i));
  out.alg.init_table();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec br = a.bracket(basis[i], basis[j]);
      auto coords = s.space.coordinates(br);
      assert(coords.has_value());
      out.alg.set_bracket(i, j, *coords);
    }
  out.inclusion = Mat(a.dim(), d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < a.dim(); ++i) out.inclusion.at(i, j) = basis[j][i];
  if (a.realization) {
    Realization r;
    r.p = a.realization->p;
    r.q = a.realization->q;
    for (int j = 0; j < d; ++j) r.mats.push_back(a.realize(basis[j]));
    r.central_ideal = a.realization->central_ideal;
    out.alg.realization = std::move(r);
  }
  return out;
}

QuotientAlgebra quotient(const SuperAlgebra& a, const GradedSubspace& ideal) {
  if (!is_ideal(a, ideal)) throw std::runtime_error("quotient: not an ideal");
  const int n = a.dim();
  std::vector<int> comp = complement_coordinates(ideal.space);
  // Even complement coordinates first, then odd; ambient ordering gives this.
  QuotientAlgebra out;
  out.alg.dim_even = 0;
  for (int c : comp)
    if (c < a.dim_even) ++out.alg.dim_even;
  out.alg.dim_odd = static_cast<int>(comp.size()) - out.alg.dim_even;
  for (int c : comp) out.alg.names.push_back(a.names[c]);
  out.alg.init_table();
  const int d = static_cast<int>(comp.size());
  // projection = residue of elimination restricted to complement coords
  out.projection = Mat(d, n);
  for (int j = 0; j < n; ++j) {
    Vec e(n, Rat(0));
    e[j] = 1;
    Vec res = ideal.space.reduce(e);
    for (int i = 0; i < d; ++i) out.projection.at(i, j) = res[comp[i]];
  }
  out.section = Mat(n, d);
  for (int i = 0; i < d; ++i) out.section.at(comp[i], i) = 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec br = a.bracket_basis(comp[i], comp[j]);
      out.alg.set_bracket(i, j, mat_apply(out.projection, br));
    }
  if (a.realization) {
    GradedSubspace z = center(a);
    if (z.contains(ideal)) {
      Realization r;
      r.p = a.realization->p;
      r.q = a.realization->q;
      for (int i = 0; i < d; ++i) r.mats.push_back(a.realization->mats[comp[i]]);
      r.central_ideal = a.realization->central_ideal;
      for (const auto& v : ideal.basis()) r.central_ideal.push_back(a.realize(v));
      out.alg.realization = std::move(r);
    }
  }
  return out;
}

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
  SuperAlgebra s;
  s.dim_even = a.dim_even + b.dim_even;
  s.dim_odd = a.dim_odd + b.dim_odd;
  // index embedding: a-even, b-even, a-odd, b-odd
  auto a_idx = [&](int i) { return i < a.dim_even ? i : s.dim_even + (i - a.dim_even); };
  auto b_idx = [&](int i) {
    return i < b.dim_even ? a.dim_even + i : s.dim_even + a.dim_odd + (i - b.dim_even);
  };
  s.names.assign(s.dim(), "");
  for (int i = 0; i < a.dim(); ++i) s.names[a_idx(i)] = "l." + a.names[i];
  for (int i = 0; i < b.dim(); ++i) s.names[b_idx(i)] = "r." + b.names[i];
  s.init_table();
  auto copy_block = [&s](const SuperAlgebra& src, auto idx) {
    for (int i = 0; i < src.dim(); ++i)
      for (int j = 0; j < src.dim(); ++j) {
        Vec br = src.bracket_basis(i, j);
        Vec v(s.dim(), Rat(0));
        for (int k = 0; k < src.dim(); ++k) v[idx(k)] = br[k];
        s.set_bracket(idx(i), idx(j), v);
      }
  };
  copy_block(a, a_idx);
  copy_block(b, b_idx);
  if (a.realization && b.realization) {
    Realization r;
    r.p = a.realization->p + b.realization->p;
    r.q = a.realization->q + b.realization->q;
    const int pa = a.realization->p, qa = a.realization->q;
    const int pb = b.realization->p, qb = b.realization->q;
    auto embed_a = [&](const Mat& m) {
      Mat e(r.p + r.q, r.p + r.q);
      auto row = [&](int i) { return i < pa ? i : r.p + (i - pa); };
      for (int i = 0; i < pa + qa; ++i)
        for (int j = 0; j < pa + qa; ++j) e.at(row(i), row(j)) = m.at(i, j);
      return e;
    };
    auto embed_b = [&](const Mat& m) {
      Mat e(r.p + r.q, r.p + r.q);
      auto row = [&](int i) { return i < pb ? pa + i : r.p + qa + (i - pb); };
      for (int i = 0; i < pb + qb; ++i)
        for (int j = 0; j < pb + qb; ++j) e.at(row(i), row(j)) = m.at(i, j);
      return e;
    };
    r.mats.assign(s.dim(), Mat(r.p + r.q, r.p + r.q));
    for (int i = 0; i < a.dim(); ++i) r.mats[a_idx(i)] = embed_a(a.realization->mats[i]);
    for (int i = 0; i < b.dim(); ++i) r.mats[b_idx(i)] = embed_b(b.realization->mats[i]);
    for (const auto& c : a.realization->central_ideal) r.central_ideal.push_back(embed_a(c));
    for (const auto& c : b.realization->central_ideal) r.central_ideal.push_back(embed_b(c));
    s.realization = std::move(r);
  }
  return s;
}

GradedSubspace map_subspace(const SuperAlgebra& target, const Mat& map, const GradedSubspace& s) {
  std::vector<Vec> gens;
  for (const auto& v : s.basis()) gens.push_back(mat_apply(map, v));
  return graded_span_checked(target, gens);
}

}  // namespace supersylow
