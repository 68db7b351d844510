#include "gstruct/rational.hpp"

namespace gstruct {

Rational rat_parse(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("bad rational literal: " + s);
  if (q.get_den() == 0) throw InputError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

bool rat_is_int(const Rational& r) { return r.get_den() == 1; }

long rat_to_long(const Rational& r) {
  if (!rat_is_int(r)) throw ConsistencyError("expected integer, got " + rat_str(r));
  if (!r.get_num().fits_slong_p()) throw ConsistencyError("integer out of range: " + rat_str(r));
  return r.get_num().get_si();
}

Rational dot(const QVec& a, const QVec& b) {
  require(a.size() == b.size(), "dot: length mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace gstruct
