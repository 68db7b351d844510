#include "gstruct/catalog.hpp"

#include <algorithm>

namespace gstruct {

namespace {

QVec with_charge(QVec w, long q) {
  w.emplace_back(q);
  return w;
}

const RealSummand* find_summand(const RealDecomposition& d, const std::vector<QVec>& hws) {
  for (const RealSummand& s : d.summands)
    if (s.hws == hws) return &s;
  return nullptr;
}

}  // namespace

std::string case_label(CaseName name) {
  switch (name) {
    case CaseName::SO3_in_SO5: return "SO3-in-SO5";
    case CaseName::U3_in_SO6: return "U3-in-SO6";
    case CaseName::G2_in_SO7: return "G2-in-SO7";
    case CaseName::Spin7_in_SO8: return "Spin7-in-SO8";
    case CaseName::Spin9_in_SO16: return "Spin9-in-SO16";
    case CaseName::F4_in_SO26: return "F4-in-SO26";
  }
  throw InputError("case_label: unknown case");
}

std::optional<CaseName> parse_case(const std::string& label) {
  for (CaseName c : all_cases())
    if (case_label(c) == label) return c;
  return std::nullopt;
}

std::vector<CaseName> all_cases() {
  return {CaseName::SO3_in_SO5,   CaseName::U3_in_SO6,    CaseName::G2_in_SO7,
          CaseName::Spin7_in_SO8, CaseName::Spin9_in_SO16, CaseName::F4_in_SO26};
}

CaseStudy build_case(CaseName name) {
  switch (name) {
    case CaseName::SO3_in_SO5: {
      CaseStudy cs{name, Family::A1, 5, 3, false, {}, {}, CharacterEngine(Family::A1)};
      cs.defining = cs.eng.irrep(cs.eng.rs().weight({4}));
      cs.adjoint = cs.eng.irrep(cs.eng.rs().weight({2}));
      return cs;
    }
    case CaseName::U3_in_SO6: {
      CaseStudy cs{name, Family::A2, 6, 9, true, {}, {}, CharacterEngine(Family::A2)};
      const RootSystem& rs = cs.eng.rs();
      cs.defining = ms_sum(cs.eng.irrep(with_charge(rs.weight({1, 0}), 1)),
                           cs.eng.irrep(with_charge(rs.weight({0, 1}), -1)));
      cs.adjoint = ms_sum(cs.eng.irrep(with_charge(rs.weight({1, 1}), 0)),
                          cs.eng.irrep(with_charge(rs.weight({0, 0}), 0)));
      return cs;
    }
    case CaseName::G2_in_SO7: {
      CaseStudy cs{name, Family::G2, 7, 14, false, {}, {}, CharacterEngine(Family::G2)};
      cs.defining = cs.eng.irrep(cs.eng.rs().weight({1, 0}));
      cs.adjoint = cs.eng.irrep(cs.eng.rs().weight({0, 1}));
      return cs;
    }
    case CaseName::Spin7_in_SO8: {
      CaseStudy cs{name, Family::B3, 8, 21, false, {}, {}, CharacterEngine(Family::B3)};
      cs.defining = cs.eng.irrep(cs.eng.rs().weight({0, 0, 1}));
      cs.adjoint = cs.eng.irrep(cs.eng.rs().weight({0, 1, 0}));
      return cs;
    }
    case CaseName::Spin9_in_SO16: {
      CaseStudy cs{name, Family::B4, 16, 36, false, {}, {}, CharacterEngine(Family::B4)};
      cs.defining = cs.eng.irrep(cs.eng.rs().weight({0, 0, 0, 1}));
      cs.adjoint = cs.eng.irrep(cs.eng.rs().weight({0, 1, 0, 0}));
      return cs;
    }
    case CaseName::F4_in_SO26: {
      CaseStudy cs{name, Family::F4, 26, 52, false, {}, {}, CharacterEngine(Family::F4)};
      cs.defining = cs.eng.irrep(cs.eng.rs().weight({0, 0, 0, 1}));
      cs.adjoint = cs.eng.irrep(cs.eng.rs().weight({1, 0, 0, 0}));
      return cs;
    }
  }
  throw InputError("build_case: unknown case");
}

RealDecomposition realify(const RootSystem& rs, const Decomposition& d) {
  require(d.is_character, "realify: not a character");
  std::map<QVec, std::pair<long, long>> open;  // hw -> (mult, complex dim)
  for (const Summand& s : d.summands) open[s.hw] = {s.mult, s.dim};
  RealDecomposition out;
  while (!open.empty()) {
    auto [hw, md] = *open.begin();
    open.erase(open.begin());
    QVec dl = rs.dual(hw);
    if (dl == hw) {
      out.summands.push_back({{hw}, md.first, md.second});
      continue;
    }
    auto it = open.find(dl);
    require(it != open.end() && it->second.first == md.first, "realify: unmatched dual pair");
    out.summands.push_back({{hw, dl}, md.first, md.second + it->second.second});
    open.erase(it);
  }
  std::sort(out.summands.begin(), out.summands.end(),
            [](const RealSummand& a, const RealSummand& b) {
              return a.real_dim != b.real_dim ? a.real_dim < b.real_dim : a.hws < b.hws;
            });
  return out;
}

WeightMS complement_ms(CaseStudy& cs) {
  WeightMS m = wedge2(cs.defining);
  for (const auto& [w, c] : cs.adjoint) ms_add(m, w, -c);
  return m;
}

Decomposition complement_m(CaseStudy& cs) {
  Decomposition d = cs.eng.decompose(complement_ms(cs));
  require(d.is_character, "complement_m: adjoint is not a subcharacter of so(n)");
  long total = 0;
  for (const Summand& s : d.summands) total += s.mult * s.dim;
  require(total == static_cast<long>(cs.n) * (cs.n - 1) / 2 - cs.dim_g,
          "complement_m: dimension bookkeeping off");
  return d;
}

Decomposition gamma_types(CaseStudy& cs) {
  Decomposition d = cs.eng.decompose(ms_tensor(cs.defining, complement_ms(cs)));
  require(d.is_character, "gamma_types: tensor character broken");
  return d;
}

Decomposition lambda3_types(CaseStudy& cs) {
  Decomposition d = cs.eng.decompose(wedge3(cs.defining));
  require(d.is_character, "lambda3_types: wedge character broken");
  return d;
}

TorsionReport torsion_report(CaseStudy& cs) {
  const RootSystem& rs = cs.eng.rs();
  TorsionReport rep;
  rep.name = cs.name;
  rep.types = realify(rs, gamma_types(cs));
  rep.lambda3 = realify(rs, lambda3_types(cs));

  rep.theta1_injective = true;
  for (const RealSummand& s : rep.lambda3.summands) {
    const RealSummand* g = find_summand(rep.types, s.hws);
    if (g == nullptr) {
      rep.theta1_injective = false;
      continue;
    }
    if (s.mult > g->mult) rep.theta1_injective = false;
    rep.admissible.summands.push_back({s.hws, std::min(s.mult, g->mult), s.real_dim});
  }

  Decomposition def = cs.eng.decompose(cs.defining);
  RealDecomposition def_real = realify(rs, def);
  require(def_real.summands.size() == 1, "torsion_report: defining module not real-irreducible");
  const std::vector<QVec>& vkey = def_real.summands.front().hws;
  rep.conformal_closed = find_summand(rep.lambda3, vkey) != nullptr;
  rep.defining_in_types = find_summand(rep.types, vkey) != nullptr;
  rep.unique_connection = rep.theta1_injective && rep.conformal_closed;
  return rep;
}

}  // namespace gstruct
