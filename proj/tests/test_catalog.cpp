#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gstruct/catalog.hpp>

#include <algorithm>
#include <vector>

using namespace gstruct;

namespace {

std::vector<long> real_dims(const RealDecomposition& d) {
  std::vector<long> out;
  for (const RealSummand& s : d.summands)
    for (long i = 0; i < s.mult; ++i) out.push_back(s.real_dim);
  return out;
}

long real_total(const RealDecomposition& d) {
  long t = 0;
  for (const RealSummand& s : d.summands) t += s.mult * s.real_dim;
  return t;
}

}  // namespace

TEST_CASE("case data counts") {
  struct Row {
    CaseName name;
    int n;
    long g;
  } rows[] = {{CaseName::SO3_in_SO5, 5, 3},    {CaseName::U3_in_SO6, 6, 9},
              {CaseName::G2_in_SO7, 7, 14},    {CaseName::Spin7_in_SO8, 8, 21},
              {CaseName::Spin9_in_SO16, 16, 36}, {CaseName::F4_in_SO26, 26, 52}};
  for (auto& r : rows) {
    CaseStudy cs = build_case(r.name);
    CHECK(cs.n == r.n);
    CHECK(cs.dim_g == r.g);
    CHECK(ms_total(cs.defining) == r.n);
    CHECK(ms_total(cs.adjoint) == r.g);
    CHECK(parse_case(case_label(r.name)) == r.name);
  }
  CHECK_FALSE(parse_case("SO3-in-SO6").has_value());
}

TEST_CASE("orthogonal complements of the subalgebras") {
  struct Row {
    CaseName name;
    long dim_m;
  } rows[] = {{CaseName::SO3_in_SO5, 7},     {CaseName::U3_in_SO6, 6},
              {CaseName::G2_in_SO7, 7},      {CaseName::Spin7_in_SO8, 7},
              {CaseName::Spin9_in_SO16, 84}, {CaseName::F4_in_SO26, 273}};
  for (auto& r : rows) {
    CaseStudy cs = build_case(r.name);
    Decomposition m = complement_m(cs);
    RealDecomposition mr = realify(cs.eng.rs(), m);
    REQUIRE(mr.summands.size() == 1);
    CHECK(mr.summands.front().mult == 1);
    CHECK(mr.summands.front().real_dim == r.dim_m);
    CHECK(real_total(mr) == static_cast<long>(cs.n) * (cs.n - 1) / 2 - cs.dim_g);
  }

  // the complement of so(3) is the 7 dimensional module of highest weight 6
  CaseStudy so3 = build_case(CaseName::SO3_in_SO5);
  Decomposition m5 = complement_m(so3);
  REQUIRE(m5.summands.size() == 1);
  CHECK(m5.summands.front().hw == QVec{Rational(6)});

  // the unitary complement is a genuine dual pair
  CaseStudy u3 = build_case(CaseName::U3_in_SO6);
  RealDecomposition m6 = realify(u3.eng.rs(), complement_m(u3));
  REQUIRE(m6.summands.size() == 1);
  CHECK(m6.summands.front().hws.size() == 2);
}

TEST_CASE("torsion type tables") {
  struct Row {
    CaseName name;
    long pairs;
    std::vector<long> gamma;
    std::vector<long> lambda;
  } rows[] = {
      {CaseName::SO3_in_SO5, 35, {3, 5, 7, 9, 11}, {3, 7}},
      {CaseName::U3_in_SO6, 36, {2, 6, 12, 16}, {2, 6, 12}},
      {CaseName::G2_in_SO7, 49, {1, 7, 14, 27}, {1, 7, 27}},
      {CaseName::Spin7_in_SO8, 56, {8, 48}, {8, 48}},
      {CaseName::Spin9_in_SO16, 1344, {16, 128, 432, 768}, {128, 432}},
      {CaseName::F4_in_SO26, 7098, {26, 52, 273, 324, 1053, 1274, 4096}, {273, 1053, 1274}},
  };
  for (auto& r : rows) {
    CaseStudy cs = build_case(r.name);
    WeightMS gamma_ms = ms_tensor(cs.defining, complement_ms(cs));
    CHECK(ms_total(gamma_ms) == r.pairs);

    RealDecomposition g = realify(cs.eng.rs(), gamma_types(cs));
    CHECK(real_dims(g) == r.gamma);
    CHECK(real_total(g) == r.pairs);

    RealDecomposition l = realify(cs.eng.rs(), lambda3_types(cs));
    CHECK(real_dims(l) == r.lambda);
    long n = cs.n;
    CHECK(real_total(l) == n * (n - 1) * (n - 2) / 6);
  }
}

TEST_CASE("only the eight dimensional case matches its wedge character") {
  for (CaseName name : all_cases()) {
    CaseStudy cs = build_case(name);
    bool same = char_equal(ms_tensor(cs.defining, complement_ms(cs)), wedge3(cs.defining));
    CHECK(same == (name == CaseName::Spin7_in_SO8));
  }
}

TEST_CASE("admissibility and uniqueness flags") {
  struct Row {
    CaseName name;
    std::vector<long> admissible;
    bool conformal;
    bool unique;
  } rows[] = {
      {CaseName::SO3_in_SO5, {3, 7}, false, false},
      {CaseName::U3_in_SO6, {2, 6, 12}, true, true},
      {CaseName::G2_in_SO7, {1, 7, 27}, true, true},
      {CaseName::Spin7_in_SO8, {8, 48}, true, true},
      {CaseName::Spin9_in_SO16, {128, 432}, false, false},
      {CaseName::F4_in_SO26, {273, 1053, 1274}, false, false},
  };
  for (auto& r : rows) {
    CaseStudy cs = build_case(r.name);
    TorsionReport rep = torsion_report(cs);
    CHECK(real_dims(rep.admissible) == r.admissible);
    CHECK(rep.conformal_closed == r.conformal);
    CHECK(rep.unique_connection == r.unique);
    CHECK(rep.defining_in_types);
    CHECK(rep.theta1_injective);
    for (const RealSummand& s : rep.admissible.summands) CHECK(s.mult == 1);
  }
}

TEST_CASE("sixteen dimensional case summands pinned") {
  CaseStudy cs = build_case(CaseName::Spin9_in_SO16);
  const RootSystem& rs = cs.eng.rs();
  Decomposition g = gamma_types(cs);
  REQUIRE(g.summands.size() == 4);
  CHECK(g.summands[0].hw == rs.weight({0, 0, 0, 1}));
  CHECK(g.summands[0].dim == 16);
  CHECK(g.summands[1].hw == rs.weight({1, 0, 0, 1}));
  CHECK(g.summands[1].dim == 128);
  CHECK(g.summands[2].hw == rs.weight({0, 1, 0, 1}));
  CHECK(g.summands[2].dim == 432);
  CHECK(g.summands[3].hw == rs.weight({0, 0, 1, 1}));
  CHECK(g.summands[3].dim == 768);
  long rest = 0;
  for (size_t i = 1; i < g.summands.size(); ++i) rest += g.summands[i].dim;
  CHECK(rest == 1328);
}

TEST_CASE("unitary real pairing structure") {
  CaseStudy cs = build_case(CaseName::U3_in_SO6);
  RealDecomposition g = realify(cs.eng.rs(), gamma_types(cs));
  for (const RealSummand& s : g.summands) {
    CHECK(s.hws.size() == 2);
    CHECK(s.mult == 1);
    // members of a pair carry opposite charges
    CHECK(s.hws[0].back() == -s.hws[1].back());
    CHECK(cs.eng.rs().dual(s.hws[0]) == s.hws[1]);
  }
  // the sixteen dimensional type is the charge three adjoint pair
  const RealSummand& top = g.summands.back();
  CHECK(top.real_dim == 16);
  QVec adj3 = cs.eng.rs().weight({1, 1});
  adj3.emplace_back(-3);
  CHECK((top.hws[0] == adj3 || top.hws[1] == adj3));
}
