#include "supersylow/halfspace.hpp"

#include <cassert>
#include <map>

namespace supersylow {

namespace {

// One inequality sum_j a[j] x_j >= c.
struct Row {
  Vec a;
  Rat c;
};

// Canonical primitive-integer scaling so duplicates collapse; rows with the
// same left side keep only the strongest right side.
void normalize_rows(std::vector<Row>& rows) {
  std::map<std::vector<std::string>, Rat> best;
  for (auto& r : rows) {
    mpz_class den(1);
    auto fold_den = [&den](const Rat& x) {
      mpz_class d = x.get_den(), g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      den = den / g * d;
    };
    for (const auto& x : r.a) fold_den(x);
    fold_den(r.c);
    mpz_class content(0);
    auto fold_num = [&content, &den](const Rat& x) {
      mpz_class n = mpz_class(x * den), g;
      mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
      content = g;
    };
    for (const auto& x : r.a) fold_num(x);
    if (content == 0) content = 1;  // zero left side: scale rhs sign only
    Rat scale(den, content);
    scale.canonicalize();
    for (auto& x : r.a) x *= scale;
    r.c *= scale;
    std::vector<std::string> key;
    for (const auto& x : r.a) key.push_back(rat_to_string(x));
    auto it = best.find(key);
    if (it == best.end() || it->second < r.c) best[key] = r.c;
  }
  rows.clear();
  for (auto& [key, c] : best) {
    Row r;
    for (const auto& s : key) r.a.push_back(*rat_from_string(s));
    r.c = c;
    rows.push_back(std::move(r));
  }
}

}  // namespace

HalfspaceResult halfspace_feasible(const std::vector<Vec>& weights, int dim) {
  if (weights.empty()) {
    // Vacuously feasible; any functional works.
    HalfspaceResult res;
    res.feasible = true;
    res.witness = Vec(dim, Rat(0));
    return res;
  }
  std::vector<Row> rows;
  for (const auto& w : weights) {
    assert(static_cast<int>(w.size()) == dim);
    rows.push_back({w, Rat(1)});
  }
  // levels[k] = system over variables 0..k-1 (before eliminating x_{k-1}).
  std::vector<std::vector<Row>> levels(dim + 1);
  normalize_rows(rows);
  levels[dim] = rows;
  for (int k = dim; k >= 1; --k) {
    const int var = k - 1;
    std::vector<Row> next;
    std::vector<const Row*> pos, neg;
    for (const auto& r : levels[k]) {
      if (r.a[var] > 0) pos.push_back(&r);
      else if (r.a[var] < 0) neg.push_back(&r);
      else {
        Row z = r;
        z.a.resize(var);
        next.push_back(std::move(z));
      }
    }
    for (const Row* p : pos)
      for (const Row* n : neg) {
        // Positive combination cancelling x_var.
        Rat cp = -n->a[var], cn = p->a[var];
        Row r;
        r.a.resize(var);
        for (int j = 0; j < var; ++j) r.a[j] = cp * p->a[j] + cn * n->a[j];
        r.c = cp * p->c + cn * n->c;
        next.push_back(std::move(r));
      }
    normalize_rows(next);
    levels[k - 1] = std::move(next);
  }
  for (const auto& r : levels[0])
    if (r.c > 0) return {};  // 0 >= positive: no functional exists
  // Feasible: back-substitute a witness level by level.
  Vec phi(dim, Rat(0));
  for (int var = 0; var < dim; ++var) {
    std::optional<Rat> lo, hi;
    for (const auto& r : levels[var + 1]) {
      if (r.a[var] == 0) continue;
      Rat bound = r.c;
      for (int j = 0; j < var; ++j) bound -= r.a[j] * phi[j];
      bound /= r.a[var];
      if (r.a[var] > 0) {  // x_var >= bound
        if (!lo || bound > *lo) lo = bound;
      } else {  // division by negative flips to x_var <= bound
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      assert(*lo <= *hi);
      phi[var] = (*lo + *hi) / 2;
    } else if (lo) phi[var] = *lo + 1;
    else if (hi) phi[var] = *hi - 1;
    // else unconstrained: keep 0
  }
  // Re-verify exactly; the result is self-certifying on the feasible side.
  for (const auto& w : weights) {
    Rat dot(0);
    for (int j = 0; j < dim; ++j) dot += phi[j] * w[j];
    assert(dot > 0);
    if (!(dot > 0)) return {};
  }
  HalfspaceResult res;
  res.feasible = true;
  res.witness = phi;
  return res;
}

}  // namespace supersylow
