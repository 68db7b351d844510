#pragma once

#include "gstruct/multivector.hpp"

namespace gstruct {

// Skew endomorphism of R^n. Entries are 1-based, w(i,j) = -w(j,i).
struct SkewEndo {
  int n = 0;
  std::vector<Rational> a;  // dense n x n

  SkewEndo() = default;
  explicit SkewEndo(int n_) : n(n_), a(static_cast<size_t>(n_) * n_) {}

  const Rational& at(int i, int j) const { return a[static_cast<size_t>(i - 1) * n + (j - 1)]; }

  // Sets w(i,j) = v and w(j,i) = -v.
  void set(int i, int j, const Rational& v);

  bool is_zero() const;
  SkewEndo& operator+=(const SkewEndo& o);
  bool operator==(const SkewEndo& o) const { return n == o.n && a == o.a; }
};

SkewEndo operator*(const Rational& c, const SkewEndo& m);

// Ordered pairs (i, j), i < j, indexing the monomial basis e_i ^ e_j of so(n).
std::vector<std::pair<int, int>> so_basis_pairs(int n);

// e_i ^ e_j corresponds to the matrix E_ij - E_ji.
SkewEndo from_two_form(const Multivector& w);
Multivector to_two_form(const SkewEndo& m);

// Coordinates in the monomial basis, and back.
QVec skew_coords(const SkewEndo& m);
SkewEndo skew_from_coords(int n, const QVec& x);

// <A,B> = -1/2 tr(AB); monomials e_i ^ e_j are orthonormal for it.
Rational skew_ip(const SkewEndo& a, const SkewEndo& b);

SkewEndo commutator(const SkewEndo& a, const SkewEndo& b);

// Derivation action of so(n) on alternating tensors,
// on grade 1: e_i -> sum_j w(j,i) e_j.
Multivector so_act(const SkewEndo& w, const Multivector& t);

// Derivative of the pulled-back tensor along the flow of the linear
// field x -> w x; equals the negative of so_act on these coefficients.
Multivector lie_derivative(const SkewEndo& w, const Multivector& t);

}  // namespace gstruct
