#ifndef SUPERSYLOW_RATIONAL_HPP
#define SUPERSYLOW_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>
#include <optional>

namespace supersylow {

// Exact rational scalar.  Everything downstream assumes canonical form,
// so raw (num, den) construction must go through rat().
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parse "n" or "n/d".  Returns nullopt on garbage; never throws.
std::optional<Rat> rat_from_string(const std::string& s);

// Canonical text form: "n" when integral, else "n/d".
std::string rat_to_string(const Rat& r);

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& v);

}  // namespace supersylow

#endif
