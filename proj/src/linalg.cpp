#include "gstruct/linalg.hpp"

#include <algorithm>

namespace gstruct {

Mat Mat::from_rows(const std::vector<QVec>& rws) {
  if (rws.empty()) return Mat();
  Mat m(static_cast<int>(rws.size()), static_cast<int>(rws[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    require(static_cast<int>(rws[r].size()) == m.cols, "from_rows: ragged input");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rws[r][c];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<QVec>& cls) {
  if (cls.empty()) return Mat();
  Mat m(static_cast<int>(cls[0].size()), static_cast<int>(cls.size()));
  for (int c = 0; c < m.cols; ++c) {
    require(static_cast<int>(cls[c].size()) == m.rows, "from_columns: ragged input");
    for (int r = 0; r < m.rows; ++r) m.at(r, c) = cls[c][r];
  }
  return m;
}

QVec Mat::mul(const QVec& x) const {
  require(static_cast<int>(x.size()) == cols, "mul: size mismatch");
  QVec y(rows, Rational(0));
  for (int r = 0; r < rows; ++r) {
    Rational s = 0;
    for (int c = 0; c < cols; ++c)
      if (at(r, c) != 0) s += at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

QVec Mat::row(int r) const {
  QVec v(cols);
  for (int c = 0; c < cols; ++c) v[c] = at(r, c);
  return v;
}

QVec Mat::col(int c) const {
  QVec v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

static void scale_rows_to_integers(Mat& a) {
  for (int r = 0; r < a.rows; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < a.cols; ++c) {
      const mpz_class& den = a.at(r, c).get_den();
      if (den != 1) { mpz_class g; mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t()); l = g; }
    }
    if (l != 1)
      for (int c = 0; c < a.cols; ++c) a.at(r, c) *= Rational(l);
  }
}

Echelon eliminate(Mat a) {
  scale_rows_to_integers(a);
  Echelon e;
  Rational prev = 1;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int pr = -1;
    for (int i = r; i < a.rows; ++i)
      if (a.at(i, c) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(pr, j), a.at(r, j));
    for (int i = r + 1; i < a.rows; ++i) {
      for (int j = c + 1; j < a.cols; ++j)
        a.at(i, j) = (a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j)) / prev;
      a.at(i, c) = 0;
    }
    prev = a.at(r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  e.m = std::move(a);
  return e;
}

int exact_rank(const Mat& a) { return eliminate(a).rank; }

static QVec back_substitute(const Echelon& e, int free_col, const QVec* rhs) {
  // x[free_col] = 1 (homogeneous case) against the echelon rows, top pivot last.
  QVec x(e.m.cols, Rational(0));
  if (free_col >= 0) x[free_col] = 1;
  for (int t = e.rank - 1; t >= 0; --t) {
    int pc = e.pivot_cols[t];
    Rational s = rhs ? (*rhs)[t] : Rational(0);
    for (int j = pc + 1; j < e.m.cols; ++j)
      if (e.m.at(t, j) != 0 && x[j] != 0) s -= e.m.at(t, j) * x[j];
    x[pc] = s / e.m.at(t, pc);
  }
  return x;
}

std::vector<QVec> exact_kernel(const Mat& a) {
  Echelon e = eliminate(a);
  std::vector<QVec> basis;
  int next_pivot = 0;
  for (int c = 0; c < a.cols; ++c) {
    if (next_pivot < e.rank && e.pivot_cols[next_pivot] == c) { ++next_pivot; continue; }
    basis.push_back(back_substitute(e, c, nullptr));
  }
  return basis;
}

AffineSolution solve_affine(const Mat& a, const QVec& b) {
  require(static_cast<int>(b.size()) == a.rows, "solve_affine: rhs size mismatch");
  Mat aug(a.rows, a.cols + 1);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols) = b[r];
  }
  Echelon e = eliminate(std::move(aug));
  AffineSolution sol;
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols) return sol;  // inconsistent
  sol.consistent = true;
  // rhs entries ended up in the echelon's last column after the same row ops.
  QVec rhs(e.rank);
  for (int t = 0; t < e.rank; ++t) rhs[t] = e.m.at(t, a.cols);
  Echelon trimmed;
  trimmed.rank = e.rank;
  trimmed.pivot_cols = e.pivot_cols;
  trimmed.m = Mat(e.m.rows, a.cols);
  for (int r = 0; r < e.m.rows; ++r)
    for (int c = 0; c < a.cols; ++c) trimmed.m.at(r, c) = e.m.at(r, c);
  sol.particular = back_substitute(trimmed, -1, &rhs);
  sol.kernel = exact_kernel(a);
  return sol;
}

std::vector<OrthoVec> gram_schmidt(const std::vector<QVec>& basis) {
  std::vector<OrthoVec> out;
  for (const QVec& b : basis) {
    QVec v = b;
    for (const OrthoVec& u : out) {
      Rational c = dot(b, u.v) / u.norm2;
      if (c == 0) continue;
      for (size_t i = 0; i < v.size(); ++i) v[i] -= c * u.v[i];
    }
    Rational n2 = dot(v, v);
    require(n2 != 0, "gram_schmidt: dependent input");
    out.push_back({std::move(v), n2});
  }
  return out;
}

}  // namespace gstruct
