#ifndef SUPERSYLOW_POLYNOMIAL_HPP
#define SUPERSYLOW_POLYNOMIAL_HPP

#include "supersylow/linalg.hpp"

#include <optional>
#include <utility>

namespace supersylow {

// Polynomial over Q, coefficients ascending (p[i] = coeff of t^i).
// Normalized: no trailing zeros; the zero polynomial is {}.
using Poly = Vec;

Poly poly_trim(Poly p);
int poly_deg(const Poly& p);  // -1 for zero
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// (quotient, remainder) with b != 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& p);
Poly poly_gcd(Poly a, Poly b);  // monic gcd
Poly poly_derivative(const Poly& p);
Rat poly_eval(const Poly& p, const Rat& x);
Mat poly_eval_mat(const Poly& p, const Mat& m);
std::string poly_to_string(const Poly& p, const std::string& var = "t");

// p / gcd(p, p'): the radical (distinct irreducible factors, each once).
Poly squarefree_part(const Poly& p);

// Monic minimal polynomial via per-coordinate Krylov annihilators.
Poly minimal_polynomial(const Mat& m);

// Extended gcd: returns (g, u, v) monic g with u*a + v*b = g.
struct XgcdResult { Poly g, u, v; };
XgcdResult poly_xgcd(const Poly& a, const Poly& b);

// Semisimple over the algebraic closure <=> minimal polynomial squarefree.
bool is_semisimple_matrix(const Mat& m);

// Additive Jordan decomposition m = s + n over Q: s semisimple, n nilpotent,
// [s, n] = 0, both polynomials in m.  Newton lifting along the squarefree
// part of the minimal polynomial; no eigenvalue computation.
struct JordanDecomposition { Mat s, n; };
JordanDecomposition jordan_decomposition(const Mat& m);

bool is_nilpotent_matrix(const Mat& m);

// All rational roots with multiplicity if p splits over Q; nullopt otherwise.
std::optional<std::vector<Rat>> rational_roots_if_split(const Poly& p);

}  // namespace supersylow

#endif
