#pragma once

#include <array>

#include "gstruct/skew.hpp"

namespace gstruct {

// Fully symmetric cubic tensor on R^n, stored on sorted triples i <= j <= k.
// The value at any permutation of a triple equals the stored one.
struct SymTensor3 {
  int n = 0;
  std::map<std::array<int, 3>, Rational> terms;

  SymTensor3() = default;
  explicit SymTensor3(int n_) : n(n_) {}

  Rational coeff(int i, int j, int k) const;
  void add(int i, int j, int k, const Rational& c);

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SymTensor3& o) const { return n == o.n && terms == o.terms; }
};

// Same derivation action as on alternating tensors:
// (w . T)_{abc} = sum_l [ w(a,l) T_{lbc} + w(b,l) T_{alc} + w(c,l) T_{abl} ].
SymTensor3 so_act(const SkewEndo& w, const SymTensor3& t);

// sum_i T_{iik}, one value per k; zero for the traceless tensors used here.
QVec sym_trace(const SymTensor3& t);

// Nondecreasing 1-based triples in lexicographic order, the key order of terms.
std::vector<std::array<int, 3>> sym_keys(int n);
QVec sym_coords(const SymTensor3& t, const std::vector<std::array<int, 3>>& keys);

}  // namespace gstruct
