// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only when all
// criteria hold. The granular suites live in the test_* binaries; this one
// states the headline claims in one place.

#include <gstruct/report.hpp>

#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace gstruct;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

bool expect(bool ok, const std::string& what) {
  if (!ok) g_notes.push_back(what);
  return ok;
}

void criterion(const std::string& name, const std::function<void()>& body) {
  g_notes.clear();
  try {
    body();
  } catch (const std::exception& e) {
    g_notes.push_back(std::string("exception: ") + e.what());
  }
  std::printf("%s %s\n", g_notes.empty() ? "PASS" : "FAIL", name.c_str());
  for (const std::string& n : g_notes) std::printf("    %s\n", n.c_str());
  if (!g_notes.empty()) ++g_failures;
}

std::vector<long> dims_of(const RealDecomposition& d) {
  std::vector<long> out;
  for (const RealSummand& s : d.summands) out.push_back(s.real_dim);
  return out;
}

std::string dims_str(const std::vector<long>& v) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

bool dims_are(const RealDecomposition& d, std::vector<long> want, const std::string& label) {
  std::vector<long> got = dims_of(d);
  return expect(got == want, label + ": dims " + dims_str(got) + " != " + dims_str(want));
}

Rational rnd_rat(std::mt19937& g) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return frac(num(g), den(g));
}

Multivector rnd_3form(std::mt19937& g, int n) {
  Multivector t(n, 3);
  std::uniform_int_distribution<int> pick(0, 2);
  for (const auto& key : monomial_keys(n, 3))
    if (pick(g) == 0) t.add_term(key, rnd_rat(g));
  return t;
}

// every commutator of basis elements must stay in the span of the basis
bool closed_under_bracket(const std::vector<SkewEndo>& basis) {
  if (basis.size() < 2) return true;
  std::vector<QVec> rows;
  for (const SkewEndo& w : basis) rows.push_back(skew_coords(w));
  int r = exact_rank(Mat::from_rows(rows));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      std::vector<QVec> ext = rows;
      ext.push_back(skew_coords(commutator(basis[i], basis[j])));
      if (exact_rank(Mat::from_rows(ext)) != r) return false;
    }
  return true;
}

MValuedForm gamma_of_theta1(const StabilizerModel& sm, const Mat& theta1, const QVec& tc) {
  QVec image = theta1.mul(tc);
  auto keys2 = monomial_keys(sm.n, 2);
  long dm = static_cast<long>(sm.m_basis.size());
  MValuedForm g;
  g.n = sm.n;
  for (int d = 1; d <= sm.n; ++d) {
    QVec acc(keys2.size());
    for (long i = 0; i < dm; ++i) {
      Rational c = image[(d - 1) * dm + i] * frac(-1, 2);
      if (c == 0) continue;
      for (size_t p = 0; p < acc.size(); ++p) acc[p] += c * sm.m_basis[i].v[p];
    }
    g.comp.push_back(mv_from_coords(sm.n, 2, keys2, acc));
  }
  return g;
}

void check_case_tables() {
  {
    CaseStudy cs = build_case(CaseName::SO3_in_SO5);
    dims_are(realify(cs.eng.rs(), gamma_types(cs)), {3, 5, 7, 9, 11}, "SO3-in-SO5 types");
  }
  {
    CaseStudy cs = build_case(CaseName::U3_in_SO6);
    dims_are(realify(cs.eng.rs(), gamma_types(cs)), {2, 6, 12, 16}, "U3-in-SO6 types");
  }
  {
    CaseStudy cs = build_case(CaseName::G2_in_SO7);
    dims_are(realify(cs.eng.rs(), gamma_types(cs)), {1, 7, 14, 27}, "G2-in-SO7 types");
    dims_are(realify(cs.eng.rs(), lambda3_types(cs)), {1, 7, 27}, "G2-in-SO7 wedge");
  }
  {
    CaseStudy cs = build_case(CaseName::Spin7_in_SO8);
    dims_are(realify(cs.eng.rs(), gamma_types(cs)), {8, 48}, "Spin7-in-SO8 types");
    expect(char_equal(ms_tensor(cs.defining, complement_ms(cs)), wedge3(cs.defining)),
           "Spin7-in-SO8: wedge character differs from the tensor character");
  }
  {
    CaseStudy cs = build_case(CaseName::Spin9_in_SO16);
    std::vector<long> d = dims_of(realify(cs.eng.rs(), gamma_types(cs)));
    expect(d.size() == 4, "Spin9-in-SO16: expected four summands");
    long spin_count = 0, rest_sum = 0;
    for (long x : d) {
      if (x == 16) ++spin_count;
      else rest_sum += x;
    }
    expect(spin_count == 1, "Spin9-in-SO16: the 16-dim summand must appear once");
    expect(rest_sum == 1328, "Spin9-in-SO16: remaining dims must sum to 1328");
    long wsum = 0;
    for (long x : dims_of(realify(cs.eng.rs(), lambda3_types(cs)))) wsum += x;
    expect(wsum == 560, "Spin9-in-SO16: wedge dims must sum to 560");
  }
  {
    CaseStudy cs = build_case(CaseName::F4_in_SO26);
    dims_are(realify(cs.eng.rs(), gamma_types(cs)), {26, 52, 273, 324, 1053, 1274, 4096},
             "F4-in-SO26 types");
    dims_are(realify(cs.eng.rs(), lambda3_types(cs)), {273, 1053, 1274}, "F4-in-SO26 wedge");
  }
}

void check_admissibility() {
  for (CaseName name : all_cases()) {
    CaseStudy cs = build_case(name);
    TorsionReport r = torsion_report(cs);
    bool want_unique = name == CaseName::U3_in_SO6 || name == CaseName::G2_in_SO7 ||
                       name == CaseName::Spin7_in_SO8;
    bool want_closed = !(name == CaseName::SO3_in_SO5 || name == CaseName::Spin9_in_SO16 ||
                         name == CaseName::F4_in_SO26);
    expect(r.unique_connection == want_unique, case_label(name) + ": unique_connection flag");
    expect(r.conformal_closed == want_closed, case_label(name) + ": conformal_closed flag");
    if (name == CaseName::SO3_in_SO5) dims_are(r.admissible, {3, 7}, "SO3-in-SO5 admissible");
    if (name == CaseName::U3_in_SO6) dims_are(r.admissible, {2, 6, 12}, "U3-in-SO6 admissible");
    if (name == CaseName::G2_in_SO7) dims_are(r.admissible, {1, 7, 27}, "G2-in-SO7 admissible");
    if (name == CaseName::Spin7_in_SO8)
      dims_are(r.admissible, {8, 48}, "Spin7-in-SO8 admissible");
  }
}

void check_ranks() {
  const std::map<ModelName, long> want_g = {{ModelName::SO3Cubic, 3},
                                            {ModelName::KaehlerForm, 9},
                                            {ModelName::G2Form, 14},
                                            {ModelName::CayleyForm, 21}};
  for (const auto& [m, dg] : want_g) {
    StabilizerModel sm = build_model(m);
    expect(static_cast<long>(sm.g_basis.size()) == dg, model_label(m) + ": stabilizer dimension");
  }
  {
    ThetaMaps th = theta_maps(build_model(ModelName::CayleyForm));
    expect(th.rank1 == 56 && th.theta1.rows == 56 && th.theta1.cols == 56,
           "cayley-4form: contraction must be bijective of rank 56");
  }
  expect(theta_maps(build_model(ModelName::G2Form)).rank1 == 35, "g2-3form: contraction rank 35");
  expect(theta_maps(build_model(ModelName::SO3Cubic)).rank1 == 10, "so3-cubic: contraction rank 10");
}

void check_nilpotent_example() {
  HeisenbergReport hr = heisenberg_report();
  Mat want_sq(7, 7);
  const long diag[7] = {4, 0, 4, 4, 4, 4, 4};
  for (int i = 0; i < 7; ++i) want_sq.at(i, i) = diag[i];
  expect(hr.square == want_sq, "torsion square is not diag(4,0,4,4,4,4,4)");

  expect(hr.family_dim == 4 && hr.family.size() == 4 && hr.relations_hold,
         "curvature-constrained family must be the pinned 4-dimensional one");
  std::vector<Multivector> want_lie(4, Multivector(7, 3));
  want_lie[0].add_term({1, 4, 7}, 2);
  want_lie[0].add_term({3, 4, 6}, -2);
  want_lie[1].add_term({1, 5, 7}, -2);
  want_lie[1].add_term({3, 5, 6}, 2);
  want_lie[2].add_term({1, 3, 4}, 2);
  want_lie[2].add_term({1, 5, 6}, 2);
  want_lie[2].add_term({3, 5, 7}, 2);
  want_lie[2].add_term({4, 6, 7}, -2);
  for (int i = 0; i < 4; ++i)
    expect(hr.family_lie[i] == want_lie[i],
           "derivative of the torsion along family direction " + std::to_string(i + 1));

  expect(hr.isotropy_dim == 1 && hr.isotropy.size() == 1, "isotropy dimension must be 1");
  if (hr.isotropy.size() == 1) {
    const SkewEndo& w = hr.isotropy[0];
    expect(w.at(3, 6) + w.at(4, 5) == 0 && w.at(3, 6) != 0,
           "isotropy generator must satisfy w36 + w45 = 0");
  }
  expect(hr.isotropy_relation_holds, "isotropy relation flag");
}

void check_solvable_example() {
  SolvableReport sr = solvable_report();
  expect(sr.isotropy_dim == 2 && sr.isotropy.size() == 2, "isotropy dimension must be 2");
  expect(sr.abelian, "isotropy must be abelian");
  expect(sr.generators_stabilize, "distinguished generators must annihilate the torsion");
  expect(sr.generators_span, "distinguished generators must span the isotropy");
}

void check_classification() {
  std::vector<CaseTrace> traces = enumerate_cases();
  int survivors = 0;
  for (const CaseTrace& c : traces)
    if (c.survivor) {
      ++survivors;
      expect(c.t == 3 && c.k == 2 && c.n == 8 && c.g == 21,
             "survivor must be t=3, k=2, n=8, dim 21");
    }
  expect(survivors == 1, "exactly one case must survive");

  InvolutionRoots su3 = involution_p(8, 4, 5);
  expect(su3.raw == std::vector<long>{2, 3}, "su(3) involution roots must be {2,3}");

  auto scan = spin7_involution_scan();
  expect(scan.size() == 4, "four centralizer classes expected");
  for (const auto& [z, roots] : scan)
    expect(roots.candidates.empty(),
           "centralizer dim " + std::to_string(z) + ": no involution candidate may survive");
}

void check_properties() {
  // dimension formula vs weight count on every module the case studies use
  for (CaseName name : all_cases()) {
    CaseStudy cs = build_case(name);
    for (const Decomposition& d : {gamma_types(cs), lambda3_types(cs)})
      for (const Summand& s : d.summands) {
        long counted = ms_total(cs.eng.irrep(s.hw));
        expect(counted == cs.eng.weyl_dim(s.hw) && counted == s.dim,
               case_label(name) + ": weight count disagrees with the dimension formula");
      }
  }

  // decompose inverts sums of irreducibles
  std::mt19937 gen(20250814);
  for (Family f : {Family::A1, Family::A2, Family::G2, Family::B3}) {
    CharacterEngine eng(f);
    const RootSystem& rs = eng.rs();
    std::uniform_int_distribution<int> cnt(1, 4);
    std::uniform_int_distribution<long> coeff(0, f == Family::A1 ? 5 : 1);
    for (int trial = 0; trial < 5; ++trial) {
      std::map<QVec, long> want;
      WeightMS total;
      int k = cnt(gen);
      for (int i = 0; i < k; ++i) {
        std::vector<long> labels(rs.rank);
        for (int j = 0; j < rs.rank; ++j) labels[j] = coeff(gen);
        QVec hw = rs.weight(labels);
        want[hw] += 1;
        total = ms_sum(total, eng.irrep(hw));
      }
      Decomposition d = eng.decompose(total);
      std::map<QVec, long> got;
      for (const Summand& s : d.summands) got[s.hw] = s.mult;
      expect(d.is_character && got == want,
             family_name(f) + ": decompose failed to invert a sum of irreducibles");
    }
  }

  // contraction completeness and exact back-substitution, 50 random forms each
  for (ModelName m : all_models()) {
    StabilizerModel sm = build_model(m);
    ThetaMaps th = theta_maps(sm);
    auto keys3 = monomial_keys(sm.n, 3);
    auto keys2 = monomial_keys(sm.n, 2);
    long dm = static_cast<long>(sm.m_basis.size());
    long dg = static_cast<long>(sm.g_basis.size());
    bool complete = true;
    for (int trial = 0; trial < 50 && complete; ++trial) {
      Multivector t = rnd_3form(gen, sm.n);
      QVec tc = mv_coords(t, keys3);
      QVec im1 = th.theta1.mul(tc);
      QVec im2 = th.theta2.mul(tc);
      for (int d = 1; d <= sm.n && complete; ++d) {
        QVec acc(keys2.size());
        for (long i = 0; i < dm; ++i)
          for (size_t p = 0; p < acc.size(); ++p)
            acc[p] += im1[(d - 1) * dm + i] * sm.m_basis[i].v[p];
        for (long j = 0; j < dg; ++j)
          for (size_t p = 0; p < acc.size(); ++p)
            acc[p] += im2[(d - 1) * dg + j] * sm.g_basis[j].v[p];
        Multivector full(sm.n, 2);
        for (int a = 1; a <= sm.n; ++a)
          for (int b = a + 1; b <= sm.n; ++b) full.add_term({a, b}, t.coeff({a, b, d}));
        complete = acc == mv_coords(full, keys2);
      }
    }
    expect(complete, model_label(m) + ": contraction parts do not add up to the full one");

    bool solved = true;
    for (int trial = 0; trial < 50 && solved; ++trial) {
      Multivector t = rnd_3form(gen, sm.n);
      QVec tc = mv_coords(t, keys3);
      MValuedForm gamma = gamma_of_theta1(sm, th.theta1, tc);
      TorsionSolution sol = solve_torsion(sm, gamma);
      solved = sol.kind == TorsionSolution::Kind::Unique &&
               th.theta1.mul(mv_coords(sol.t0, keys3)) == th.theta1.mul(tc);
    }
    expect(solved, model_label(m) + ": back-substitution of a solvable gamma failed");
  }

  // every isotropy output closes under the bracket
  expect(closed_under_bracket(heisenberg_report().isotropy), "nilpotent isotropy not closed");
  expect(closed_under_bracket(solvable_report().isotropy), "solvable isotropy not closed");
  for (ModelName m : all_models()) {
    StabilizerModel sm = build_model(m);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<SkewEndo> iso = isotropy_algebra(sm, rnd_3form(gen, sm.n));
      expect(closed_under_bracket(iso), model_label(m) + ": isotropy of a random form not closed");
    }
  }
  const Multivector phi = *defining_tensor(ModelName::G2Form).form;
  std::vector<SkewEndo> full = isotropy_algebra(build_model(ModelName::G2Form), phi);
  expect(full.size() == 14 && closed_under_bracket(full),
         "isotropy of the invariant 3-form must be the full 14-dim stabilizer");
}

}  // namespace

int main() {
  criterion("decomposition-tables", check_case_tables);
  criterion("admissibility-flags", check_admissibility);
  criterion("stabilizer-and-contraction-ranks", check_ranks);
  criterion("nilpotent-example", check_nilpotent_example);
  criterion("solvable-example", check_solvable_example);
  criterion("classification", check_classification);
  criterion("property-suites", check_properties);
  return g_failures == 0 ? 0 : 1;
}
