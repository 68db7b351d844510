#include "gstruct/skew.hpp"

namespace gstruct {

void SkewEndo::set(int i, int j, const Rational& v) {
  require(1 <= i && i <= n && 1 <= j && j <= n, "SkewEndo::set: index out of range");
  require(i != j || v == 0, "SkewEndo::set: nonzero diagonal");
  a[static_cast<size_t>(i - 1) * n + (j - 1)] = v;
  a[static_cast<size_t>(j - 1) * n + (i - 1)] = -v;
}

bool SkewEndo::is_zero() const {
  for (const Rational& v : a)
    if (v != 0) return false;
  return true;
}

SkewEndo& SkewEndo::operator+=(const SkewEndo& o) {
  require(n == o.n, "SkewEndo +=: size mismatch");
  for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
  return *this;
}

SkewEndo operator*(const Rational& c, const SkewEndo& m) {
  SkewEndo r(m.n);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = c * m.a[i];
  return r;
}

std::vector<std::pair<int, int>> so_basis_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p.emplace_back(i, j);
  return p;
}

SkewEndo from_two_form(const Multivector& w) {
  require(w.k == 2, "from_two_form: grade must be 2");
  SkewEndo m(w.n);
  for (const auto& [idx, c] : w.terms) m.set(idx[0], idx[1], c);
  return m;
}

Multivector to_two_form(const SkewEndo& m) {
  Multivector w(m.n, 2);
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j)
      if (m.at(i, j) != 0) w.add_term({i, j}, m.at(i, j));
  return w;
}

QVec skew_coords(const SkewEndo& m) {
  QVec x;
  x.reserve(static_cast<size_t>(m.n) * (m.n - 1) / 2);
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j) x.push_back(m.at(i, j));
  return x;
}

SkewEndo skew_from_coords(int n, const QVec& x) {
  require(static_cast<int>(x.size()) == n * (n - 1) / 2, "skew_from_coords: size mismatch");
  SkewEndo m(n);
  size_t t = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) m.set(i, j, x[t++]);
  return m;
}

Rational skew_ip(const SkewEndo& a, const SkewEndo& b) {
  require(a.n == b.n, "skew_ip: size mismatch");
  Rational tr = 0;
  for (int i = 1; i <= a.n; ++i)
    for (int k = 1; k <= a.n; ++k) tr += a.at(i, k) * b.at(k, i);
  return -tr / 2;
}

SkewEndo commutator(const SkewEndo& a, const SkewEndo& b) {
  require(a.n == b.n, "commutator: size mismatch");
  SkewEndo r(a.n);
  for (int i = 1; i <= a.n; ++i)
    for (int j = i + 1; j <= a.n; ++j) {
      Rational s = 0;
      for (int k = 1; k <= a.n; ++k) s += a.at(i, k) * b.at(k, j) - b.at(i, k) * a.at(k, j);
      r.set(i, j, s);
    }
  return r;
}

Multivector so_act(const SkewEndo& w, const Multivector& t) {
  require(w.n == t.n, "so_act: dimension mismatch");
  Multivector r(t.n, t.k);
  for (const auto& [idx, c] : t.terms)
    for (int p = 0; p < t.k; ++p) {
      int ip = idx[p];
      for (int j = 1; j <= t.n; ++j) {
        const Rational& wji = w.at(j, ip);
        if (wji == 0) continue;
        std::vector<int> jdx = idx;
        jdx[p] = j;
        r.add_term(std::move(jdx), c * wji);
      }
    }
  return r;
}

Multivector lie_derivative(const SkewEndo& w, const Multivector& t) {
  return -so_act(w, t);
}

}  // namespace gstruct
