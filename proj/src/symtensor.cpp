#include "gstruct/symtensor.hpp"

#include <algorithm>
#include <set>

namespace gstruct {

static std::array<int, 3> sorted3(int i, int j, int k) {
  std::array<int, 3> a{i, j, k};
  std::sort(a.begin(), a.end());
  return a;
}

Rational SymTensor3::coeff(int i, int j, int k) const {
  auto it = terms.find(sorted3(i, j, k));
  return it == terms.end() ? Rational(0) : it->second;
}

void SymTensor3::add(int i, int j, int k, const Rational& c) {
  require(1 <= i && i <= n && 1 <= j && j <= n && 1 <= k && k <= n, "SymTensor3: index range");
  if (c == 0) return;
  auto key = sorted3(i, j, k);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SymTensor3 so_act(const SkewEndo& w, const SymTensor3& t) {
  require(w.n == t.n, "so_act: dimension mismatch");
  // candidate output triples: one position of a stored triple replaced, then sorted
  std::set<std::array<int, 3>> candidates;
  for (const auto& [key, c] : t.terms) {
    (void)c;
    for (int p = 0; p < 3; ++p)
      for (int a = 1; a <= t.n; ++a) {
        std::array<int, 3> out = key;
        out[p] = a;
        candidates.insert(sorted3(out[0], out[1], out[2]));
      }
  }
  SymTensor3 r(t.n);
  for (const auto& out : candidates) {
    Rational s = 0;
    for (int l = 1; l <= t.n; ++l) {
      if (w.at(out[0], l) != 0) s += w.at(out[0], l) * t.coeff(l, out[1], out[2]);
      if (w.at(out[1], l) != 0) s += w.at(out[1], l) * t.coeff(out[0], l, out[2]);
      if (w.at(out[2], l) != 0) s += w.at(out[2], l) * t.coeff(out[0], out[1], l);
    }
    if (s != 0) r.terms.emplace(out, s);
  }
  return r;
}

QVec sym_trace(const SymTensor3& t) {
  QVec tr(t.n, Rational(0));
  for (int k = 1; k <= t.n; ++k)
    for (int i = 1; i <= t.n; ++i) tr[k - 1] += t.coeff(i, i, k);
  return tr;
}

std::vector<std::array<int, 3>> sym_keys(int n) {
  std::vector<std::array<int, 3>> keys;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) keys.push_back({i, j, k});
  return keys;
}

QVec sym_coords(const SymTensor3& t, const std::vector<std::array<int, 3>>& keys) {
  QVec x(keys.size());
  size_t found = 0;
  for (size_t i = 0; i < keys.size(); ++i) {
    auto it = t.terms.find(keys[i]);
    if (it != t.terms.end()) {
      x[i] = it->second;
      ++found;
    }
  }
  require(found == t.terms.size(), "sym_coords: term outside the key list");
  return x;
}

}  // namespace gstruct
