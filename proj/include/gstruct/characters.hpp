#pragma once

#include "gstruct/rootsystem.hpp"

#include <map>
#include <vector>

namespace gstruct {

// Weight multiset with integer multiplicities, the working form of a
// (possibly virtual) character.
using WeightMS = std::map<QVec, long>;

void ms_add(WeightMS& ms, const QVec& w, long c);
WeightMS ms_sum(const WeightMS& a, const WeightMS& b);
WeightMS ms_scale_mult(const WeightMS& a, long c);
WeightMS ms_tensor(const WeightMS& a, const WeightMS& b);
// weights stretched by k, multiplicities kept (power sum of the character)
WeightMS ms_adams(const WeightMS& a, long k);
long ms_total(const WeightMS& a);

// alternating powers via power sums; multiplicities must divide out
WeightMS wedge2(const WeightMS& x);
WeightMS wedge3(const WeightMS& x);

inline bool char_equal(const WeightMS& a, const WeightMS& b) { return a == b; }

struct Summand {
  QVec hw;
  long mult = 0;
  long dim = 0;  // complex dimension of the module with highest weight hw
};

struct Decomposition {
  bool is_character = true;
  std::vector<Summand> summands;  // sorted by dim, then by highest weight
  WeightMS residue;               // what was left when is_character is false
};

class CharacterEngine {
 public:
  explicit CharacterEngine(Family f) : rs_(make_root_system(f)) {}

  const RootSystem& rs() const { return rs_; }

  long weyl_dim(const QVec& hw) const;
  // full weight multiset of the irreducible module, cached per highest weight
  const WeightMS& irrep(const QVec& hw);
  // greedy peel from the top; flags multisets that are not genuine characters
  Decomposition decompose(WeightMS ms);

 private:
  RootSystem rs_;
  std::map<QVec, WeightMS> cache_;
};

}  // namespace gstruct
