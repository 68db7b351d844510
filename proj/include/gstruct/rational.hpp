#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gstruct {

// Exact rational scalar. gmp keeps values canonical:
// lowest terms, denominator > 0, zero is 0/1.
using Rational = mpq_class;

// Internal invariant broken; callers map this to exit code 3.
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input; callers map this to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ConsistencyError(what);
}

// The two-argument mpq_class constructor skips canonicalization; route all
// fraction literals through here instead.
inline Rational frac(long p, long q) {
  if (q == 0) throw ConsistencyError("frac: zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q", q != 0.
Rational rat_parse(const std::string& s);

// "p" when integral, "p/q" otherwise.
std::string rat_str(const Rational& r);

bool rat_is_int(const Rational& r);

// Requires an integral value that fits in long.
long rat_to_long(const Rational& r);

using QVec = std::vector<Rational>;

Rational dot(const QVec& a, const QVec& b);

}  // namespace gstruct
