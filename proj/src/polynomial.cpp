#include "supersylow/polynomial.hpp"

#include "supersylow/parallel.hpp"

#include <cassert>

namespace supersylow {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(r);
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(r);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return poly_trim(r);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  assert(!b.empty());
  Poly rem = a, q;
  int db = poly_deg(b);
  if (poly_deg(a) >= db) q.assign(a.size() - b.size() + 1, Rat(0));
  while (poly_deg(rem) >= db) {
    int d = poly_deg(rem) - db;
    Rat c = rem.back() / b.back();
    q[d] = c;
    for (int i = 0; i <= db; ++i) rem[d + i] -= c * b[i];
    rem = poly_trim(rem);
  }
  return {poly_trim(q), rem};
}

Poly poly_monic(const Poly& p) {
  if (p.empty()) return p;
  Poly r = p;
  Rat inv = 1 / p.back();
  for (auto& c : r) c *= inv;
  return r;
}

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(a);
  b = poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = rat(static_cast<long>(i)) * p[i];
  return poly_trim(r);
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat r(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

Mat poly_eval_mat(const Poly& p, const Mat& m) {
  assert(m.is_square());
  Mat r(m.rows, m.rows);
  for (size_t i = p.size(); i-- > 0;) {
    r = mat_mul_serial(r, m);
    if (p[i] != 0)
      for (int d = 0; d < m.rows; ++d) r.at(d, d) += p[i];
  }
  return r;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    if (!out.empty()) out += (p[i] > 0) ? " + " : " - ";
    else if (p[i] < 0) out += "-";
    Rat c = abs(p[i]);
    if (c != 1 || i == 0) out += rat_to_string(c);
    if (i >= 1) {
      if (c != 1) out += "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Poly squarefree_part(const Poly& p) {
  if (poly_deg(p) <= 0) return poly_monic(p);
  Poly g = poly_gcd(p, poly_derivative(p));
  return poly_monic(poly_divmod(p, g).first);
}

Poly minimal_polynomial(const Mat& m) {
  assert(m.is_square());
  int n = m.rows;
  Poly acc = {Rat(1)};  // lcm of local annihilators so far
  for (int s = 0; s < n; ++s) {
    // Local annihilator of e_s: first dependence among e_s, m e_s, m^2 e_s, ...
    Vec v(n, Rat(0));
    v[s] = 1;
    std::vector<Vec> krylov = {v};
    while (true) {
      Vec next = mat_apply(m, krylov.back());
      Mat a(n, static_cast<int>(krylov.size()));
      for (size_t j = 0; j < krylov.size(); ++j)
        for (int i = 0; i < n; ++i) a.at(i, static_cast<int>(j)) = krylov[j][i];
      if (auto c = solve(a, next)) {
        // m^k e_s = sum c_i m^i e_s -> local annihilator t^k - sum c_i t^i.
        Poly local(krylov.size() + 1, Rat(0));
        local.back() = 1;
        for (size_t i = 0; i < c->size(); ++i) local[i] = -(*c)[i];
        Poly g = poly_gcd(acc, local);
        acc = poly_divmod(poly_mul(acc, local), g).first;  // lcm
        break;
      }
      krylov.push_back(std::move(next));
    }
    if (poly_deg(acc) == n) break;  // cannot grow further
  }
  return poly_monic(acc);
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
  Poly r0 = poly_trim(a), r1 = poly_trim(b);
  Poly u0 = {Rat(1)}, u1 = {};
  Poly v0 = {}, v1 = {Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    Poly v2 = poly_sub(v0, poly_mul(q, v1));
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.empty()) return {r0, u0, v0};
  Rat lead = r0.back();
  auto scale = [&](Poly p) {
    for (auto& c : p) c /= lead;
    return p;
  };
  return {scale(r0), scale(u0), scale(v0)};
}

bool is_semisimple_matrix(const Mat& m) {
  Poly p = minimal_polynomial(m);
  Poly g = poly_gcd(p, poly_derivative(p));
  return poly_deg(g) == 0;
}

bool is_nilpotent_matrix(const Mat& m) {
  Poly p = minimal_polynomial(m);
  // Nilpotent iff minpoly = t^k.
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] != 0) return false;
  return true;
}

JordanDecomposition jordan_decomposition(const Mat& m) {
  assert(m.is_square());
  Poly mp = minimal_polynomial(m);
  Poly f = squarefree_part(mp);
  if (poly_deg(f) == poly_deg(mp)) return {m, Mat(m.rows, m.rows)};  // already semisimple
  // u with u f' = 1 mod f (f squarefree => gcd(f, f') = 1).
  XgcdResult x = poly_xgcd(poly_derivative(f), f);
  assert(poly_deg(x.g) == 0);
  Poly u = x.u;
  Mat s = m;
  // f(S) lies in the ideal generated by f(m); squaring each round kills it
  // once 2^rounds exceeds the maximal multiplicity (<= deg mp).
  int rounds = 1;
  while ((1 << rounds) < poly_deg(mp) + 1) ++rounds;
  for (int it = 0; it <= rounds; ++it) {
    Mat fs = poly_eval_mat(f, s);
    if (fs.is_zero()) break;
    Mat us = poly_eval_mat(u, s);
    s = mat_sub(s, mat_mul_serial(fs, us));
  }
  assert(poly_eval_mat(f, s).is_zero());
  return {s, mat_sub(m, s)};
}

std::optional<std::vector<Rat>> rational_roots_if_split(const Poly& p0) {
  Poly p = poly_trim(p0);
  if (p.empty()) return std::nullopt;  // zero polynomial: undefined here
  std::vector<Rat> roots;
  // Strip factors of t.
  size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  for (size_t i = 0; i < low; ++i) roots.push_back(Rat(0));
  p.erase(p.begin(), p.begin() + low);
  while (poly_deg(p) >= 1) {
    // Clear denominators -> primitive integer polynomial.
    mpz_class den(1);
    for (const auto& c : p) {
      mpz_class d = c.get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      den = den / g * d;
    }
    std::vector<mpz_class> ip;
    for (const auto& c : p) ip.push_back(mpz_class(c * den));
    mpz_class a0 = ip.front(), an = ip.back();
    bool found = false;
    auto divisors = [](mpz_class v) {
      std::vector<mpz_class> out;
      v = abs(v);
      for (mpz_class d = 1; d * d <= v; ++d)
        if (v % d == 0) { out.push_back(d); if (d * d != v) out.push_back(v / d); }
      return out;
    };
    if (a0 == 0) { roots.push_back(Rat(0)); p = poly_divmod(p, Poly{Rat(0), Rat(1)}).first; continue; }
    for (const auto& num : divisors(a0)) {
      for (const auto& dd : divisors(an)) {
        for (int sign = 0; sign < 2 && !found; ++sign) {
          Rat cand(sign ? -num : num, dd);
          cand.canonicalize();
          if (poly_eval(p, cand) == 0) {
            roots.push_back(cand);
            p = poly_divmod(p, Poly{-cand, Rat(1)}).first;
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

}  // namespace supersylow
