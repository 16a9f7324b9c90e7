#ifndef SUPERSYLOW_ALGEBRA_IO_HPP
#define SUPERSYLOW_ALGEBRA_IO_HPP

#include "supersylow/superalgebra.hpp"

#include <string>

namespace supersylow {

// Deterministic JSON form of an algebra.  Coefficients are exact strings
// ("num" or "num/den"); brackets list only pairs i <= j with nonzero value,
// the i > j half being forced by super-antisymmetry.
std::string algebra_to_json(const SuperAlgebra& a, int indent = 2);
SuperAlgebra algebra_from_json(const std::string& text);

void save_algebra(const SuperAlgebra& a, const std::string& path);
SuperAlgebra load_algebra(const std::string& path);

}  // namespace supersylow

#endif
