#include "gstruct/multivector.hpp"

#include <sstream>

namespace gstruct {

int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 1; i < v.size(); ++i) {
    size_t j = i;
    while (j > 0 && v[j - 1] > v[j]) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
      --j;
    }
  }
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) return 0;
  return sign;
}

void Multivector::add_term(std::vector<int> idx, const Rational& c) {
  require(static_cast<int>(idx.size()) == k, "add_term: grade mismatch");
  for (int i : idx) require(1 <= i && i <= n, "add_term: index out of range");
  if (c == 0) return;
  int s = sort_sign(idx);
  if (s == 0) return;
  auto it = terms.find(idx);
  if (it == terms.end()) {
    terms.emplace(std::move(idx), s > 0 ? c : Rational(-c));
  } else {
    it->second += (s > 0 ? c : Rational(-c));
    if (it->second == 0) terms.erase(it);
  }
}

Rational Multivector::coeff(std::vector<int> idx) const {
  int s = sort_sign(idx);
  if (s == 0) return 0;
  auto it = terms.find(idx);
  if (it == terms.end()) return 0;
  return s > 0 ? it->second : Rational(-it->second);
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require(n == o.n && k == o.k, "+=: shape mismatch");
  for (const auto& [idx, c] : o.terms) {
    auto it = terms.find(idx);
    if (it == terms.end()) {
      terms.emplace(idx, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector r(n, k);
  for (const auto& [idx, c] : terms) r.terms.emplace(idx, -c);
  return r;
}

bool Multivector::operator==(const Multivector& o) const {
  return n == o.n && k == o.k && terms == o.terms;
}

Multivector operator*(const Rational& c, const Multivector& m) {
  Multivector r(m.n, m.k);
  if (c == 0) return r;
  for (const auto& [idx, v] : m.terms) r.terms.emplace(idx, c * v);
  return r;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  require(a.n == b.n, "wedge: dimension mismatch");
  Multivector r(a.n, a.k + b.k);
  for (const auto& [ia, ca] : a.terms)
    for (const auto& [ib, cb] : b.terms) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), ca * cb);
    }
  return r;
}

Multivector contract2(const Multivector& sigma, const Multivector& t) {
  require(sigma.k == 2 && t.k == 3, "contract2: expects grade 2 into grade 3");
  require(sigma.n == t.n, "contract2: dimension mismatch");
  Multivector r(t.n, 1);
  for (const auto& [ab, cs] : sigma.terms)
    for (const auto& [ijk, ct] : t.terms) {
      // remaining index of ijk after removing {a,b}, if they are contained
      int rest = 0, hit = 0;
      for (int x : ijk) {
        if (x == ab[0] || x == ab[1]) ++hit;
        else rest = x;
      }
      if (hit != 2) continue;
      // T_{a b rest} = sign * ct
      std::vector<int> perm = {ab[0], ab[1], rest};
      int s = sort_sign(perm);
      r.add_term({rest}, Rational(s) * cs * ct);
    }
  return r;
}

Mat torsion_square(const Multivector& t) {
  require(t.k == 3, "torsion_square: expects a 3-form");
  Mat s(t.n, t.n);
  // S_ij = sum_{m<n} 2 T_imn T_jmn over the shared pair {m,n}
  for (const auto& [idx1, c1] : t.terms)
    for (const auto& [idx2, c2] : t.terms)
      for (int p1 = 0; p1 < 3; ++p1)
        for (int p2 = 0; p2 < 3; ++p2) {
          int i = idx1[p1], j = idx2[p2];
          std::vector<int> m1, m2;
          for (int q = 0; q < 3; ++q) {
            if (q != p1) m1.push_back(idx1[q]);
            if (q != p2) m2.push_back(idx2[q]);
          }
          if (!((m1[0] == m2[0] && m1[1] == m2[1]) || (m1[0] == m2[1] && m1[1] == m2[0])))
            continue;
          Rational a = t.coeff({i, m1[0], m1[1]});
          Rational b = t.coeff({j, m1[0], m1[1]});
          s.at(i - 1, j - 1) += 2 * a * b;  // the unordered pair {m,n} stands for two ordered ones
        }
  return s;
}

std::string mv_to_text(const Multivector& m) {
  std::ostringstream os;
  for (const auto& [idx, c] : m.terms) {
    for (int i : idx) os << i << ' ';
    os << rat_str(c) << '\n';
  }
  return os.str();
}

Multivector mv_from_text(int n, int k, const std::string& text) {
  Multivector m(n, k);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<int> idx(k);
    std::string cs;
    bool blank = true;
    for (char ch : line)
      if (!isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
    if (blank) continue;
    for (int i = 0; i < k; ++i)
      if (!(ls >> idx[i])) throw InputError("bad tensor line: " + line);
    if (!(ls >> cs)) throw InputError("bad tensor line: " + line);
    std::string extra;
    if (ls >> extra) throw InputError("trailing tokens: " + line);
    m.add_term(idx, rat_parse(cs));
  }
  return m;
}

Multivector mono(int n, std::vector<int> idx, const Rational& c) {
  Multivector m(n, static_cast<int>(idx.size()));
  m.add_term(std::move(idx), c);
  return m;
}

std::vector<std::vector<int>> monomial_keys(int n, int k) {
  require(0 < k && k <= n, "monomial_keys: bad grade");
  std::vector<std::vector<int>> keys;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    keys.push_back(cur);
    int p = k - 1;
    while (p >= 0 && cur[p] == n - (k - 1 - p)) --p;
    if (p < 0) break;
    ++cur[p];
    for (int q = p + 1; q < k; ++q) cur[q] = cur[q - 1] + 1;
  }
  return keys;
}

QVec mv_coords(const Multivector& m, const std::vector<std::vector<int>>& keys) {
  QVec x(keys.size());
  size_t found = 0;
  for (size_t i = 0; i < keys.size(); ++i) {
    auto it = m.terms.find(keys[i]);
    if (it != m.terms.end()) {
      x[i] = it->second;
      ++found;
    }
  }
  require(found == m.terms.size(), "mv_coords: term outside the key list");
  return x;
}

Multivector mv_from_coords(int n, int k, const std::vector<std::vector<int>>& keys, const QVec& x) {
  require(keys.size() == x.size(), "mv_from_coords: size mismatch");
  Multivector m(n, k);
  for (size_t i = 0; i < keys.size(); ++i)
    if (x[i] != 0) m.terms.emplace(keys[i], x[i]);
  return m;
}

}  // namespace gstruct
