#include "gstruct/characters.hpp"

#include <algorithm>

namespace gstruct {

void ms_add(WeightMS& ms, const QVec& w, long c) {
  if (c == 0) return;
  auto it = ms.find(w);
  if (it == ms.end()) {
    ms.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == 0) ms.erase(it);
}

WeightMS ms_sum(const WeightMS& a, const WeightMS& b) {
  WeightMS r = a;
  for (const auto& [w, c] : b) ms_add(r, w, c);
  return r;
}

WeightMS ms_scale_mult(const WeightMS& a, long c) {
  WeightMS r;
  if (c == 0) return r;
  for (const auto& [w, m] : a) r.emplace(w, c * m);
  return r;
}

WeightMS ms_tensor(const WeightMS& a, const WeightMS& b) {
  WeightMS r;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) ms_add(r, vec_add(u, v), cu * cv);
  return r;
}

WeightMS ms_adams(const WeightMS& a, long k) {
  WeightMS r;
  Rational f(k);
  for (const auto& [w, c] : a) ms_add(r, vec_scale(f, w), c);
  return r;
}

long ms_total(const WeightMS& a) {
  long t = 0;
  for (const auto& [w, c] : a) t += c;
  return t;
}

namespace {

WeightMS ms_div(const WeightMS& a, long d) {
  WeightMS r;
  for (const auto& [w, c] : a) {
    require(c % d == 0, "alternating power: multiplicity not divisible");
    if (c / d != 0) r.emplace(w, c / d);
  }
  return r;
}

}  // namespace

WeightMS wedge2(const WeightMS& x) {
  WeightMS s = ms_tensor(x, x);
  for (const auto& [w, c] : ms_adams(x, 2)) ms_add(s, w, -c);
  return ms_div(s, 2);
}

WeightMS wedge3(const WeightMS& x) {
  WeightMS s = ms_tensor(ms_tensor(x, x), x);
  WeightMS p2 = ms_adams(x, 2);
  for (const auto& [w, c] : ms_tensor(x, p2)) ms_add(s, w, -3 * c);
  for (const auto& [w, c] : ms_adams(x, 3)) ms_add(s, w, 2 * c);
  return ms_div(s, 6);
}

long CharacterEngine::weyl_dim(const QVec& hw) const {
  require(rs_.is_dominant_integral(hw), "weyl_dim: not a dominant integral weight");
  QVec lr(hw.begin(), hw.begin() + rs_.ambient);
  lr = vec_add(lr, rs_.rho);
  Rational num = 1, den = 1;
  for (const QVec& a : rs_.positive) {
    num *= rs_.ip(lr, a);
    den *= rs_.ip(rs_.rho, a);
  }
  return rat_to_long(num / den);
}

const WeightMS& CharacterEngine::irrep(const QVec& hw) {
  if (auto it = cache_.find(hw); it != cache_.end()) return it->second;
  require(rs_.is_dominant_integral(hw), "irrep: not a dominant integral weight");
  const int rk = rs_.rank;

  QVec low = vec_neg(rs_.dominantize(vec_neg(hw)));
  auto box = rs_.root_lattice_coords(vec_sub(hw, low));
  require(box.has_value(), "irrep: support leaves the root lattice");
  for (long b : *box) require(b >= 0, "irrep: negative box bound");

  // candidates: hw minus nonnegative root combinations inside the box,
  // kept when dominant; every one of them is a genuine weight
  struct Dom {
    QVec w;
    long depth;
  };
  std::vector<Dom> doms;
  std::vector<long> c(rk, 0);
  while (true) {
    QVec w = hw;
    long depth = 0;
    for (int i = 0; i < rk; ++i) {
      for (int t = 0; t < rs_.ambient; ++t) w[t] -= Rational(c[i]) * rs_.simple[i][t];
      depth += c[i];
    }
    if (rs_.is_dominant(w)) doms.push_back({std::move(w), depth});
    int i = 0;
    while (i < rk && c[i] == (*box)[i]) {
      c[i] = 0;
      ++i;
    }
    if (i == rk) break;
    ++c[i];
  }
  std::sort(doms.begin(), doms.end(), [](const Dom& a, const Dom& b) {
    return a.depth != b.depth ? a.depth < b.depth : a.w < b.w;
  });
  require(!doms.empty() && doms.front().w == hw, "irrep: enumeration missed the top");

  QVec top = vec_add(QVec(hw.begin(), hw.begin() + rs_.ambient), rs_.rho);
  Rational top2 = rs_.ip(top, top);

  // multiplicities at dominant weights by increasing depth; the recursion
  // only reads weights strictly closer to the top
  std::map<QVec, long> mult;
  for (const Dom& d : doms) {
    if (d.depth == 0) {
      mult.emplace(d.w, 1);
      continue;
    }
    QVec mur = vec_add(QVec(d.w.begin(), d.w.begin() + rs_.ambient), rs_.rho);
    Rational denom = top2 - rs_.ip(mur, mur);
    require(denom > 0, "irrep: degenerate recursion denominator");
    Rational num = 0;
    for (const QVec& a : rs_.positive) {
      for (long k = 1;; ++k) {
        QVec nu = d.w;
        for (int t = 0; t < rs_.ambient; ++t) nu[t] += Rational(k) * a[t];
        auto mit = mult.find(rs_.dominantize(nu));
        if (mit == mult.end()) break;
        num += 2 * mit->second * rs_.ip(nu, a);
      }
    }
    Rational m = num / denom;
    require(rat_is_int(m) && m > 0, "irrep: multiplicity recursion broken");
    mult.emplace(d.w, rat_to_long(m));
  }

  WeightMS full;
  for (const auto& [w, m] : mult)
    for (const QVec& o : rs_.weyl_orbit(w)) ms_add(full, o, m);
  require(ms_total(full) == weyl_dim(hw), "irrep: weight count mismatch");
  return cache_.emplace(hw, std::move(full)).first->second;
}

Decomposition CharacterEngine::decompose(WeightMS ms) {
  Decomposition out;
  long guard = 0;
  while (!ms.empty()) {
    require(++guard <= 100000, "decompose: runaway subtraction");
    auto best = ms.begin();
    Rational best_h = rs_.height(best->first);
    for (auto it = std::next(ms.begin()); it != ms.end(); ++it) {
      Rational h = rs_.height(it->first);
      if (h > best_h || (h == best_h && it->first > best->first)) {
        best = it;
        best_h = h;
      }
    }
    QVec w = best->first;
    long m = best->second;
    if (m < 0 || !rs_.is_dominant_integral(w)) {
      out.is_character = false;
      out.residue = std::move(ms);
      return out;
    }
    long d = weyl_dim(w);
    for (const auto& [u, cu] : irrep(w)) ms_add(ms, u, -m * cu);
    out.summands.push_back({std::move(w), m, d});
  }
  std::sort(out.summands.begin(), out.summands.end(), [](const Summand& a, const Summand& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.hw < b.hw;
  });
  return out;
}

}  // namespace gstruct
