#include "gstruct/rootsystem.hpp"

#include <algorithm>
#include <set>

namespace gstruct {

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

QVec half(std::initializer_list<long> xs) {
  QVec v;
  v.reserve(xs.size());
  for (long x : xs) v.push_back(frac(x, 2));
  return v;
}

std::optional<QVec> solve_in_simple_basis(const RootSystem& rs, const QVec& v) {
  require(static_cast<int>(v.size()) >= rs.ambient, "simple basis: vector too short");
  Mat a(rs.ambient, rs.rank);
  for (int i = 0; i < rs.ambient; ++i)
    for (int j = 0; j < rs.rank; ++j) a.at(i, j) = rs.simple[j][i];
  QVec rhs(v.begin(), v.begin() + rs.ambient);
  AffineSolution s = solve_affine(a, rhs);
  if (!s.consistent) return std::nullopt;
  require(s.kernel.empty(), "simple basis: dependent simple roots");
  return s.particular;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A1: return "A1";
    case Family::A2: return "A2";
    case Family::B3: return "B3";
    case Family::B4: return "B4";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
  }
  throw InputError("family_name: unknown family");
}

QVec vec_add(const QVec& a, const QVec& b) {
  require(a.size() == b.size(), "vec_add: size mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vec_sub(const QVec& a, const QVec& b) {
  require(a.size() == b.size(), "vec_sub: size mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vec_neg(const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVec vec_scale(const Rational& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rational RootSystem::ip(const QVec& a, const QVec& b) const {
  require(static_cast<int>(a.size()) >= ambient && static_cast<int>(b.size()) >= ambient,
          "ip: vector too short");
  Rational s = 0;
  for (int i = 0; i < ambient; ++i) s += a[i] * b[i];
  return s;
}

Rational RootSystem::cartan_pair(const QVec& v, int i) const {
  return 2 * ip(v, simple[i]) / ip(simple[i], simple[i]);
}

QVec RootSystem::reflect_simple(const QVec& v, int i) const {
  Rational c = cartan_pair(v, i);
  QVec r = v;
  for (int k = 0; k < ambient; ++k) r[k] -= c * simple[i][k];
  return r;
}

bool RootSystem::is_dominant(const QVec& v) const {
  for (int i = 0; i < rank; ++i)
    if (cartan_pair(v, i) < 0) return false;
  return true;
}

bool RootSystem::is_dominant_integral(const QVec& v) const {
  for (int i = 0; i < rank; ++i) {
    Rational c = cartan_pair(v, i);
    if (c < 0 || !rat_is_int(c)) return false;
  }
  return true;
}

QVec RootSystem::dominantize(QVec v) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank; ++i) {
      if (cartan_pair(v, i) < 0) {
        v = reflect_simple(v, i);
        moved = true;
      }
    }
  }
  return v;
}

std::vector<QVec> RootSystem::weyl_orbit(const QVec& v) const {
  std::set<QVec> seen{v};
  std::vector<QVec> queue{v};
  while (!queue.empty()) {
    QVec w = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      QVec r = reflect_simple(w, i);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return std::vector<QVec>(seen.begin(), seen.end());
}

QVec RootSystem::simple_coords(const QVec& v) const {
  auto c = solve_in_simple_basis(*this, v);
  require(c.has_value(), "simple_coords: outside the root span");
  return *c;
}

std::optional<std::vector<long>> RootSystem::root_lattice_coords(const QVec& v) const {
  for (size_t k = ambient; k < v.size(); ++k)
    if (v[k] != 0) return std::nullopt;
  auto c = solve_in_simple_basis(*this, v);
  if (!c.has_value()) return std::nullopt;
  std::vector<long> out;
  out.reserve(c->size());
  for (const Rational& x : *c) {
    if (!rat_is_int(x)) return std::nullopt;
    out.push_back(rat_to_long(x));
  }
  return out;
}

Rational RootSystem::height(const QVec& v) const {
  QVec c = simple_coords(v);
  Rational h = 0;
  for (const Rational& x : c) h += x;
  return h;
}

QVec RootSystem::weight(const std::vector<long>& labels) const {
  require(static_cast<int>(labels.size()) == rank, "weight: wrong label count");
  QVec w(ambient, Rational(0));
  for (int i = 0; i < rank; ++i)
    w = vec_add(w, vec_scale(Rational(labels[i]), fundamental[i]));
  return w;
}

QVec RootSystem::dual(const QVec& v) const { return dominantize(vec_neg(v)); }

RootSystem make_root_system(Family f) {
  RootSystem r;
  r.family = f;
  int expect = 0;
  switch (f) {
    case Family::A1:
      r.ambient = 1;
      r.simple = {qv({2})};
      r.fundamental = {qv({1})};
      expect = 1;
      break;
    case Family::A2:
      r.ambient = 3;
      r.simple = {qv({1, -1, 0}), qv({0, 1, -1})};
      r.fundamental = {QVec{frac(2, 3), frac(-1, 3), frac(-1, 3)},
                       QVec{frac(1, 3), frac(1, 3), frac(-2, 3)}};
      expect = 3;
      break;
    case Family::B3:
      r.ambient = 3;
      r.simple = {qv({1, -1, 0}), qv({0, 1, -1}), qv({0, 0, 1})};
      r.fundamental = {qv({1, 0, 0}), qv({1, 1, 0}), half({1, 1, 1})};
      expect = 9;
      break;
    case Family::B4:
      r.ambient = 4;
      r.simple = {qv({1, -1, 0, 0}), qv({0, 1, -1, 0}), qv({0, 0, 1, -1}), qv({0, 0, 0, 1})};
      r.fundamental = {qv({1, 0, 0, 0}), qv({1, 1, 0, 0}), qv({1, 1, 1, 0}), half({1, 1, 1, 1})};
      expect = 16;
      break;
    case Family::G2:
      r.ambient = 3;
      r.simple = {qv({1, -1, 0}), qv({-2, 1, 1})};
      r.fundamental = {qv({0, -1, 1}), qv({-1, -1, 2})};
      expect = 6;
      break;
    case Family::F4:
      r.ambient = 4;
      r.simple = {qv({0, 1, -1, 0}), qv({0, 0, 1, -1}), qv({0, 0, 0, 1}), half({1, -1, -1, -1})};
      r.fundamental = {qv({1, 1, 0, 0}), qv({2, 1, 1, 0}), half({3, 1, 1, 1}), qv({1, 0, 0, 0})};
      expect = 24;
      break;
  }
  r.rank = static_cast<int>(r.simple.size());

  // every root lies in the reflection orbit of some simple root
  std::set<QVec> roots;
  for (int i = 0; i < r.rank; ++i)
    for (const QVec& w : r.weyl_orbit(r.simple[i])) roots.insert(w);
  QVec twice(r.ambient, Rational(0));
  for (const QVec& a : roots) {
    if (r.height(a) > 0) {
      r.positive.push_back(a);
      twice = vec_add(twice, a);
    }
  }
  r.rho = vec_scale(frac(1, 2), twice);

  require(static_cast<int>(r.positive.size()) == expect, "root system: positive count off");
  QVec fsum(r.ambient, Rational(0));
  for (const QVec& w : r.fundamental) fsum = vec_add(fsum, w);
  require(fsum == r.rho, "root system: fundamental weights inconsistent");
  return r;
}

}  // namespace gstruct
