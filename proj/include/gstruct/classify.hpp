#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gstruct/rational.hpp"

namespace gstruct {

// Decision procedures for the rank/dimension classification that singles out
// the 21-dimensional rank-3 subgroup of SO(8).

struct GroupCard {
  std::string label;
  int rank = 0;
  long dim = 0;
  bool contains_exceptional = false;
};

struct RankDimBound {
  bool bound4 = false;            // dim <= 4 rank^2, all compact groups
  std::optional<bool> bound3;     // dim <= 3 rank^2, only without exceptional summands
};

RankDimBound rank_dim_bound(const GroupCard& c);
GroupCard product_card(const GroupCard& a, const GroupCard& b);

// n with n^2 = 3g + 1 when it exists.
std::optional<long> character_constraint(long g);

std::optional<long> perfect_sqrt(long x);

// Roots p of 3(g - z) = 2p(n - p) for an involution with centralizer
// dimension z. Requires n^2 = 3g + 1.
struct InvolutionRoots {
  std::vector<long> raw;         // integral roots, ascending
  std::vector<long> candidates;  // the even ones with 0 < p < n
  bool central = false;          // a root hits p = 0 or p = n, i.e. h = +-Id
};

InvolutionRoots involution_p(long g, long z, long n);

enum class GroupFamily { SU, SO, Sp, G2, F4, E6, E7, E8 };

bool family_is_exceptional(GroupFamily f);
std::string family_label(GroupFamily f, int m = 0);  // "SU(3)", "E7", ...
long family_dim(GroupFamily f, int m = 0);           // standard dimensions
long min_faithful_real_dim(GroupFamily f, int m = 0);

enum class InvolutionVerdict {
  HoldsNoSquare,           // 3g + 1 is not a perfect square
  HoldsByScan,             // no admissible involution datum survives
  HoldsByMinimalDimension  // candidates exist but no embedding into SO(n) does
};

struct InvolutionReport {
  GroupFamily family = GroupFamily::SU;
  int m = 0;  // 0 for the exceptional families
  InvolutionVerdict verdict = InvolutionVerdict::HoldsNoSquare;
  std::vector<std::string> trace;
  bool dim_table_note = false;  // E6: 78 used, the value 72 circulates in tables
  bool square_anomaly = false;  // E7: 3g + 1 = 400 is a square, fallback applied
};

// Verifies the involution property for one family member; classical families
// take the rank parameter m (2 <= m <= max_m).
InvolutionReport involution_property(GroupFamily f, int m = 0, int max_m = 12);

// All exceptional families plus SU/SO/Sp for 2 <= m <= max_m.
std::vector<InvolutionReport> involution_scan(int max_m = 12);

// Centralizer dimensions of the involution classes of the rank-3
// 21-dimensional group in SO(8), paired with their root data; every
// candidate list comes back empty.
std::vector<std::pair<long, InvolutionRoots>> spin7_involution_scan();

// Composite compact Lie algebras of the given rank and dimension, as labels
// like "B3" or "A1+A1+T2". Simple summands are drawn from ranks <= 5.
std::vector<std::string> compact_algebras_of(int rank, long dim);

struct CaseTrace {
  int t = 0;   // torus rank
  long k = 0;  // n / 2^{t-1}
  long g = 0;  // (4^{t-1} k^2 - 1) / 3
  long n = 0;  // 2^{t-1} k
  bool survivor = false;
  std::string rule;                 // elimination tag, empty for the survivor
  std::vector<std::string> detail;
};

// Every (t, k) with t <= 5, g integral and g <= 4 t^2, with verdicts.
// Exactly one survivor: t = 3, k = 2, g = 21, n = 8.
std::vector<CaseTrace> enumerate_cases();

struct ClassifyReport {
  std::vector<CaseTrace> traces;
  CaseTrace survivor;
  std::vector<InvolutionReport> involution;
  std::vector<std::pair<long, InvolutionRoots>> spin7_scan;
  InvolutionRoots su3_example;     // g = 8, z = 4, n = 5
  std::vector<std::string> flags;  // dimension-table and square anomalies
};

ClassifyReport classify_report(int max_m = 12);

}  // namespace gstruct
