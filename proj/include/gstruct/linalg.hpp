#pragma once

#include "gstruct/rational.hpp"

namespace gstruct {

// Dense matrix over exact rationals, row major, 0-based.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Rational> d;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), d(static_cast<size_t>(r) * c) {}

  Rational& at(int r, int c) { return d[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return d[static_cast<size_t>(r) * cols + c]; }

  static Mat from_rows(const std::vector<QVec>& rws);
  static Mat from_columns(const std::vector<QVec>& cls);

  QVec mul(const QVec& x) const;
  QVec row(int r) const;
  QVec col(int c) const;
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && d == o.d; }
};

struct Echelon {
  int rank = 0;
  std::vector<int> pivot_cols;  // increasing
  Mat m;                        // echelon form, pivot i sits at (i, pivot_cols[i])
};

// Fraction-free elimination: rows are scaled to integers, then Bareiss.
// Divisions below are exact, entries stay integral throughout.
Echelon eliminate(Mat a);

int exact_rank(const Mat& a);

// Basis of {x : a x = 0}. One vector per free column, free coordinate set to 1.
std::vector<QVec> exact_kernel(const Mat& a);

struct AffineSolution {
  bool consistent = false;
  QVec particular;
  std::vector<QVec> kernel;
};

// All solutions of a x = b.
AffineSolution solve_affine(const Mat& a, const QVec& b);

// Orthogonal but unnormalized vector, squared length kept separately
// so everything stays rational.
struct OrthoVec {
  QVec v;
  Rational norm2;
};

// Gram-Schmidt without normalization. Input must be linearly independent.
std::vector<OrthoVec> gram_schmidt(const std::vector<QVec>& basis);

}  // namespace gstruct
