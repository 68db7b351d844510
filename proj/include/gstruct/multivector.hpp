#pragma once

#include <map>

#include "gstruct/linalg.hpp"

namespace gstruct {

// Sparse alternating k-tensor on R^n. Keys are strictly increasing 1-based
// index tuples, values nonzero.
struct Multivector {
  int n = 0;
  int k = 0;
  std::map<std::vector<int>, Rational> terms;

  Multivector() = default;
  Multivector(int n_, int k_) : n(n_), k(k_) {}

  // Sorts idx, applies the permutation sign, accumulates, drops zeros.
  // Tuples with a repeated index contribute nothing.
  void add_term(std::vector<int> idx, const Rational& c);

  // Coefficient of an arbitrary (possibly unsorted) tuple, with sign.
  Rational coeff(std::vector<int> idx) const;

  bool is_zero() const { return terms.empty(); }
  Multivector& operator+=(const Multivector& o);
  Multivector operator-() const;
  bool operator==(const Multivector& o) const;
};

Multivector operator*(const Rational& c, const Multivector& m);

// Sorts v in place, returns the permutation sign, 0 on a repeated entry.
int sort_sign(std::vector<int>& v);

Multivector wedge(const Multivector& a, const Multivector& b);

// Interior contraction of a 2-form into a 3-form, normalized so that
// (e_i^e_j) -| (e_i^e_j^e_k) = e_k.
Multivector contract2(const Multivector& sigma, const Multivector& t);

// S_ij = sum_{m,n} T_imn T_jnm-free convention: full antisymmetric arrays,
// S_ij = sum_{m,n} T_imn T_jmn. Symmetric n x n matrix.
Mat torsion_square(const Multivector& t);

// One line per term: "i1 .. ik p/q", tuples sorted, lines in key order.
std::string mv_to_text(const Multivector& m);
Multivector mv_from_text(int n, int k, const std::string& text);

// Convenience: e_{i1} ^ ... ^ e_{ik} with coefficient c.
Multivector mono(int n, std::vector<int> idx, const Rational& c = 1);

// Strictly increasing 1-based k-tuples in lexicographic order, matching the
// key order of Multivector::terms.
std::vector<std::vector<int>> monomial_keys(int n, int k);

// Coefficients on the monomial basis, in key order, and back.
QVec mv_coords(const Multivector& m, const std::vector<std::vector<int>>& keys);
Multivector mv_from_coords(int n, int k, const std::vector<std::vector<int>>& keys, const QVec& x);

}  // namespace gstruct
