#pragma once

#include "gstruct/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gstruct {

// Root data for the six reductive families the case studies need.
enum class Family { A1, A2, B3, B4, G2, F4 };

std::string family_name(Family f);

QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_neg(const QVec& a);
QVec vec_scale(const Rational& c, const QVec& a);

// Weights are rational vectors whose first `ambient` entries carry the root
// geometry in orthogonal coordinates. Any trailing entries act as inert
// labels (the abelian charge in the unitary case): reflections copy them
// through and inner products skip them.
struct RootSystem {
  Family family;
  int ambient = 0;
  int rank = 0;
  std::vector<QVec> simple;
  std::vector<QVec> fundamental;
  std::vector<QVec> positive;
  QVec rho;  // half sum of positive roots, equals the sum of fundamentals

  // inner product restricted to the geometric block
  Rational ip(const QVec& a, const QVec& b) const;
  // 2<v, simple[i]> / <simple[i], simple[i]>
  Rational cartan_pair(const QVec& v, int i) const;
  QVec reflect_simple(const QVec& v, int i) const;
  bool is_dominant(const QVec& v) const;
  bool is_dominant_integral(const QVec& v) const;
  QVec dominantize(QVec v) const;
  std::vector<QVec> weyl_orbit(const QVec& v) const;

  // geometric part of v in the simple root basis; throws when v leaves the
  // span of the simple roots
  QVec simple_coords(const QVec& v) const;
  // integer simple root coordinates, nullopt when v has an inert component
  // or is not an integral combination of simple roots
  std::optional<std::vector<long>> root_lattice_coords(const QVec& v) const;
  // coordinate sum of simple_coords(v)
  Rational height(const QVec& v) const;

  // sum of labels[i] * fundamental[i]
  QVec weight(const std::vector<long>& labels) const;
  // highest weight of the dual module, inert labels negate
  QVec dual(const QVec& v) const;
};

RootSystem make_root_system(Family f);

}  // namespace gstruct
