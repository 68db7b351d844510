#pragma once

#include "gstruct/characters.hpp"

#include <optional>
#include <string>

namespace gstruct {

enum class CaseName { SO3_in_SO5, U3_in_SO6, G2_in_SO7, Spin7_in_SO8, Spin9_in_SO16, F4_in_SO26 };

std::string case_label(CaseName name);
std::optional<CaseName> parse_case(const std::string& label);
std::vector<CaseName> all_cases();

// One reduction G inside SO(n), described entirely by characters: the
// restriction of R^n and the adjoint module of g. The unitary case keeps
// complexified summands graded by charge and pairs them up for reporting.
struct CaseStudy {
  CaseName name;
  Family family;
  int n = 0;
  long dim_g = 0;
  bool complex_pairing = false;
  WeightMS defining;
  WeightMS adjoint;
  CharacterEngine eng;
};

CaseStudy build_case(CaseName name);

// A real-irreducible summand: either one self-dual module or a dual pair of
// complex summands glued into a real module of twice the dimension. The
// self-dual summands appearing in these six cases all carry real structures,
// so their real dimension equals the complex one.
struct RealSummand {
  std::vector<QVec> hws;  // one or two highest weights, lexicographically sorted
  long mult = 0;
  long real_dim = 0;
};

struct RealDecomposition {
  std::vector<RealSummand> summands;  // sorted by real_dim, then first hw
};

RealDecomposition realify(const RootSystem& rs, const Decomposition& d);

// character of m in so(n) = g + m, as a weight multiset
WeightMS complement_ms(CaseStudy& cs);
// decomposition of m; the adjoint must subtract off cleanly or the
// embedding data is wrong
Decomposition complement_m(CaseStudy& cs);
// irreducible components of R^n tensor m, the torsion type space
Decomposition gamma_types(CaseStudy& cs);
// irreducible components of the third exterior power of R^n
Decomposition lambda3_types(CaseStudy& cs);

struct TorsionReport {
  CaseName name;
  RealDecomposition types;       // R^n tensor m
  RealDecomposition lambda3;
  RealDecomposition admissible;  // types reachable by a skew torsion form
  bool theta1_injective = false; // each lambda3 multiplicity fits inside types
  bool conformal_closed = false; // defining summand occurs in lambda3
  bool defining_in_types = false;      // defining summand occurs in types
  bool unique_connection = false;
};

TorsionReport torsion_report(CaseStudy& cs);

}  // namespace gstruct
