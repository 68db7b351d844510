#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gstruct/symtensor.hpp"
#include "oracles.hpp"

using namespace gstruct;

TEST_CASE("rational parse and print") {
  CHECK(rat_parse("3/6") == frac(1, 2));
  CHECK(rat_parse("-4/2") == Rational(-2));
  CHECK(rat_str(frac(-1, 3)) == "-1/3");
  CHECK(rat_str(Rational(7)) == "7");
  CHECK_THROWS_AS(rat_parse("1/0"), InputError);
  CHECK_THROWS_AS(rat_parse("abc"), InputError);
  CHECK(rat_is_int(frac(4, 2)));
  CHECK(rat_to_long(Rational(-12)) == -12);
}

TEST_CASE("sorting sign") {
  std::vector<int> v{3, 1, 2};
  CHECK(sort_sign(v) == 1);
  CHECK(v == std::vector<int>{1, 2, 3});
  v = {2, 1};
  CHECK(sort_sign(v) == -1);
  v = {1, 1};
  CHECK(sort_sign(v) == 0);
}

TEST_CASE("wedge: pinned sign examples") {
  // e2 ^ e1 = -e1 ^ e2
  Multivector a = mono(4, {2}), b = mono(4, {1});
  Multivector w = wedge(a, b);
  CHECK(w.coeff({1, 2}) == Rational(-1));
  // e1 ^ (e3 ^ e2) = -e123
  Multivector c(4, 2);
  c.add_term({3, 2}, 1);
  CHECK(c.coeff({2, 3}) == Rational(-1));
  Multivector w2 = wedge(mono(4, {1}), c);
  CHECK(w2.coeff({1, 2, 3}) == Rational(-1));
}

TEST_CASE("wedge agrees with permutation-expansion oracle") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    Multivector a = oracle::rand_form(rng, 6, 2, 4);
    Multivector b = oracle::rand_form(rng, 6, rep % 2 ? 1 : 2, 3);
    CHECK(wedge(a, b) == oracle::wedge_by_expansion(a, b));
  }
}

TEST_CASE("wedge is graded-commutative and associative") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 25; ++rep) {
    Multivector a = oracle::rand_form(rng, 6, 1, 3);
    Multivector b = oracle::rand_form(rng, 6, 2, 3);
    Multivector c = oracle::rand_form(rng, 6, 1, 3);
    // a ^ b = (-1)^{1*2} b ^ a
    CHECK(wedge(a, b) == wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    Multivector aa = wedge(a, a);
    CHECK(aa.is_zero());
  }
}

TEST_CASE("contract2: pinned normalization") {
  Multivector t = mono(3, {1, 2, 3});
  CHECK(contract2(mono(3, {1, 2}), t) == mono(3, {3}));
  CHECK(contract2(mono(3, {1, 3}), t) == mono(3, {2}, -1));
  CHECK(contract2(mono(3, {2, 3}), t) == mono(3, {1}));
}

TEST_CASE("contract2 agrees with dense-array oracle") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    Multivector s = oracle::rand_form(rng, 7, 2, 5);
    Multivector t = oracle::rand_form(rng, 7, 3, 6);
    CHECK(contract2(s, t) == oracle::contract2_dense(s, t));
  }
}

TEST_CASE("contract2 is adjoint to wedging") {
  // <sigma -| T, v> = <T, sigma ^ v> with orthonormal monomials
  std::mt19937_64 rng(14);
  for (int rep = 0; rep < 20; ++rep) {
    Multivector s = oracle::rand_form(rng, 6, 2, 4);
    Multivector t = oracle::rand_form(rng, 6, 3, 5);
    for (int v = 1; v <= 6; ++v) {
      Rational lhs = contract2(s, t).coeff({v});
      Multivector sv = wedge(s, mono(6, {v}));
      Rational rhs = 0;
      for (const auto& [idx, c] : sv.terms) rhs += c * t.coeff(idx);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("so_act on grade 1 and the two-form correspondence") {
  // rho(e1 ^ e2): e1 -> -e2, e2 -> e1
  SkewEndo w = from_two_form(mono(3, {1, 2}));
  CHECK(so_act(w, mono(3, {1})) == mono(3, {2}, -1));
  CHECK(so_act(w, mono(3, {2})) == mono(3, {1}));
  CHECK(so_act(w, mono(3, {3})).is_zero());

  // acting on a 2-form matches the matrix commutator
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 20; ++rep) {
    Multivector a2 = oracle::rand_form(rng, 5, 2, 4);
    Multivector b2 = oracle::rand_form(rng, 5, 2, 4);
    SkewEndo a = from_two_form(a2), b = from_two_form(b2);
    CHECK(from_two_form(so_act(a, b2)) == commutator(a, b));
  }
}

TEST_CASE("so_act is a Lie algebra action") {
  std::mt19937_64 rng(16);
  for (int rep = 0; rep < 15; ++rep) {
    SkewEndo a = from_two_form(oracle::rand_form(rng, 6, 2, 4));
    SkewEndo b = from_two_form(oracle::rand_form(rng, 6, 2, 4));
    Multivector t = oracle::rand_form(rng, 6, 3, 5);
    Multivector lhs = so_act(commutator(a, b), t);
    Multivector rhs = so_act(a, so_act(b, t));
    rhs += -so_act(b, so_act(a, t));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("skew inner product is orthonormal on monomials") {
  auto pairs = so_basis_pairs(4);
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = 0; j < pairs.size(); ++j) {
      SkewEndo a = from_two_form(mono(4, {pairs[i].first, pairs[i].second}));
      SkewEndo b = from_two_form(mono(4, {pairs[j].first, pairs[j].second}));
      CHECK(skew_ip(a, b) == (i == j ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("exact_kernel agrees with an independent elimination order") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 25; ++rep) {
    Mat m = oracle::rand_matrix(rng, 4 + rep % 4, 5 + rep % 3);
    auto ker = exact_kernel(m);
    auto ref = oracle::kernel_rtl(m);
    CHECK(ker.size() == ref.size());
    CHECK(exact_rank(m) == static_cast<int>(m.cols - ker.size()));
    // every vector annihilates m, and the spans coincide by dimension + containment
    std::vector<QVec> all = ker;
    for (const QVec& v : ker) {
      QVec y = m.mul(v);
      for (const Rational& r : y) CHECK(r == 0);
    }
    for (const QVec& v : ref) {
      QVec y = m.mul(v);
      for (const Rational& r : y) CHECK(r == 0);
      all.push_back(v);
    }
    if (!all.empty()) {
      Mat stacked = Mat::from_rows(all);
      CHECK(exact_rank(stacked) == static_cast<int>(ker.size()));
    }
  }
}

TEST_CASE("solve_affine round trip") {
  std::mt19937_64 rng(18);
  for (int rep = 0; rep < 25; ++rep) {
    Mat m = oracle::rand_matrix(rng, 5, 4);
    QVec x(4);
    for (auto& v : x) v = oracle::rand_rational(rng);
    QVec b = m.mul(x);
    auto sol = solve_affine(m, b);
    REQUIRE(sol.consistent);
    CHECK(m.mul(sol.particular) == b);
    // perturbing b off the column space must become inconsistent
    if (exact_rank(m) < m.rows) {
      // find a row outside: bump b by a kernel vector of m^T
      Mat mt(m.cols, m.rows);
      for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) mt.at(c, r) = m.at(r, c);
      auto left = exact_kernel(mt);
      if (!left.empty()) {
        QVec b2 = b;
        for (int r = 0; r < m.rows; ++r) b2[r] += left[0][r];
        CHECK_FALSE(solve_affine(m, b2).consistent);
      }
    }
  }
}

TEST_CASE("gram_schmidt keeps exactness") {
  std::mt19937_64 rng(19);
  std::vector<QVec> basis;
  for (int i = 0; i < 4; ++i) {
    QVec v(6);
    for (auto& x : v) x = oracle::rand_rational(rng);
    basis.push_back(v);
  }
  if (exact_rank(Mat::from_rows(basis)) == 4) {
    auto og = gram_schmidt(basis);
    for (size_t i = 0; i < og.size(); ++i) {
      CHECK(dot(og[i].v, og[i].v) == og[i].norm2);
      for (size_t j = 0; j < i; ++j) CHECK(dot(og[i].v, og[j].v) == 0);
    }
  }
}

TEST_CASE("torsion_square on a pinned 3-form") {
  // T = e123 + 2 e145: S_11 = 2(1+4) = 10, S_23 = 0, S_35 = 0, S_45 = 0,
  // S_22 = S_33 = 2, S_44 = S_55 = 8, S_25 = 0
  Multivector t(5, 3);
  t.add_term({1, 2, 3}, 1);
  t.add_term({1, 4, 5}, 2);
  Mat s = torsion_square(t);
  CHECK(s.at(0, 0) == Rational(10));
  CHECK(s.at(1, 1) == Rational(2));
  CHECK(s.at(2, 2) == Rational(2));
  CHECK(s.at(3, 3) == Rational(8));
  CHECK(s.at(4, 4) == Rational(8));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) CHECK(s.at(i, j) == Rational(0));
}

TEST_CASE("torsion_square detects cross terms") {
  // T = e123 + e124: S_34 = sum T_3mn T_4mn = 2 * T_312 * T_412 = 2
  Multivector t(4, 3);
  t.add_term({1, 2, 3}, 1);
  t.add_term({1, 2, 4}, 1);
  Mat s = torsion_square(t);
  CHECK(s.at(2, 3) == Rational(2));
  CHECK(s.at(3, 2) == Rational(2));
}

TEST_CASE("multivector text round trip") {
  Multivector t(7, 3);
  t.add_term({1, 3, 5}, Rational(1));
  t.add_term({5, 6, 7}, frac(-1, 3));
  std::string text = mv_to_text(t);
  CHECK(mv_from_text(7, 3, text) == t);
  CHECK_THROWS_AS(mv_from_text(7, 3, "1 2 bad\n"), InputError);
  CHECK_THROWS_AS(mv_from_text(7, 3, "1 2 3 1/2 junk\n"), InputError);
}

TEST_CASE("symmetric cubic action and trace") {
  SymTensor3 t(3);
  t.add(1, 1, 2, 1);  // T_112 = 1 and permutations
  CHECK(t.coeff(1, 2, 1) == Rational(1));
  // rotation in the (1,2) plane: e1 -> -e2, e2 -> e1
  SkewEndo w = from_two_form(mono(3, {1, 2}));
  SymTensor3 r = so_act(w, t);
  // (w.T)_{111} = 3 * w(1,l) T_{l11} summed: w(1,2) T_{211} * 3 = 3
  CHECK(r.coeff(1, 1, 1) == Rational(3));
  // (w.T)_{112} = w(1,2)T_{212} + w(1,2)T_{122}... compute: 2*w(1,2)*T_{122} + w(2,1)*T_{111}
  CHECK(r.coeff(1, 1, 2) == Rational(0));
  CHECK(r.coeff(2, 2, 1) == Rational(-2));

  SymTensor3 traceless(2);
  traceless.add(1, 1, 1, 1);
  traceless.add(1, 2, 2, -1);
  QVec tr = sym_trace(traceless);
  CHECK(tr[0] == Rational(0));
}
