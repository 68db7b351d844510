#include "gstruct/models.hpp"

#include <algorithm>

namespace gstruct {

namespace {

Multivector g2_three_form() {
  Multivector t(7, 3);
  t.add_term({1, 2, 7}, 1);
  t.add_term({1, 3, 5}, 1);
  t.add_term({1, 4, 6}, -1);
  t.add_term({2, 3, 6}, -1);
  t.add_term({2, 4, 5}, -1);
  t.add_term({3, 4, 7}, 1);
  t.add_term({5, 6, 7}, 1);
  return t;
}

Multivector cayley_four_form() {
  // last-coordinate extension of the 7-dimensional 3-form plus its dual;
  // this relative orientation is the one with a 21-dimensional stabilizer
  Multivector t(8, 4);
  const Multivector phi = g2_three_form();
  for (const auto& [idx, c] : phi.terms) t.add_term({idx[0], idx[1], idx[2], 8}, c);
  t.add_term({3, 4, 5, 6}, 1);
  t.add_term({2, 4, 6, 7}, -1);
  t.add_term({2, 3, 5, 7}, 1);
  t.add_term({1, 4, 5, 7}, 1);
  t.add_term({1, 3, 6, 7}, 1);
  t.add_term({1, 2, 5, 6}, 1);
  t.add_term({1, 2, 3, 4}, 1);
  return t;
}

Mat sym3(std::initializer_list<long> entries) {
  Mat a(3, 3);
  auto it = entries.begin();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a.at(r, c) = Rational(*it++);
  return a;
}

Rational trace_product(const Mat& a, const Mat& b) {
  Rational s = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) s += a.at(r, c) * b.at(c, r);
  return s;
}

Rational trace_product(const Mat& a, const Mat& b, const Mat& c) {
  Rational s = 0;
  for (int r = 0; r < 3; ++r)
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) s += a.at(r, p) * b.at(p, q) * c.at(q, r);
  return s;
}

SymTensor3 so3_cubic() {
  auto frame = cubic_frame();
  SymTensor3 t(5);
  for (int i = 1; i <= 5; ++i)
    for (int j = i; j <= 5; ++j)
      for (int k = j; k <= 5; ++k)
        t.add(i, j, k, trace_product(frame[i - 1], frame[j - 1], frame[k - 1]));
  QVec tr = sym_trace(t);
  for (const Rational& v : tr) require(v == 0, "so3 cubic: trace part nonzero");
  return t;
}

int expected_stabilizer_dim(ModelName m) {
  switch (m) {
    case ModelName::SO3Cubic: return 3;
    case ModelName::KaehlerForm: return 9;
    case ModelName::G2Form: return 14;
    case ModelName::CayleyForm: return 21;
  }
  throw ConsistencyError("unknown model");
}

// theta restricted to the given orthogonal subspace basis of so(n);
// row (d-1)*dim + i carries the coefficient on e_d (x) basis[i]
Mat theta_matrix(const StabilizerModel& sm, const std::vector<OrthoVec>& basis) {
  const int n = sm.n;
  auto keys3 = monomial_keys(n, 3);
  auto keys2 = monomial_keys(n, 2);
  const int dim = static_cast<int>(basis.size());
  std::vector<Multivector> sigma;
  sigma.reserve(basis.size());
  for (const auto& b : basis) sigma.push_back(mv_from_coords(n, 2, keys2, b.v));
  Mat t(n * dim, static_cast<int>(keys3.size()));
  for (int c = 0; c < static_cast<int>(keys3.size()); ++c) {
    Multivector tm = mono(n, keys3[c], 1);
    for (int i = 0; i < dim; ++i) {
      Multivector v = contract2(sigma[i], tm);
      for (const auto& [idx, cf] : v.terms) t.at((idx[0] - 1) * dim + i, c) = cf / basis[i].norm2;
    }
  }
  return t;
}

QVec two_form_coords(const Multivector& w) {
  return mv_coords(w, monomial_keys(w.n, 2));
}

Mat diag_mat(const QVec& d) {
  Mat a(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) a.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return a;
}

SkewEndo combine(const std::vector<SkewEndo>& basis, const QVec& x) {
  require(basis.size() == x.size() && !basis.empty(), "combine: size mismatch");
  SkewEndo w(basis[0].n);
  for (size_t i = 0; i < basis.size(); ++i) w += x[i] * basis[i];
  return w;
}

}  // namespace

std::string model_label(ModelName m) {
  switch (m) {
    case ModelName::SO3Cubic: return "so3-cubic";
    case ModelName::KaehlerForm: return "kaehler-2form";
    case ModelName::G2Form: return "g2-3form";
    case ModelName::CayleyForm: return "cayley-4form";
  }
  throw ConsistencyError("unknown model");
}

std::optional<ModelName> parse_model(const std::string& s) {
  for (ModelName m : all_models())
    if (model_label(m) == s) return m;
  return std::nullopt;
}

std::vector<ModelName> all_models() {
  return {ModelName::SO3Cubic, ModelName::KaehlerForm, ModelName::G2Form, ModelName::CayleyForm};
}

std::vector<Mat> cubic_frame() {
  std::vector<Mat> frame = {
      sym3({1, 1, 1, 1, -1, 0, 1, 0, 0}),
      sym3({1, -1, 0, -1, -1, 1, 0, 1, 0}),
      sym3({1, 0, -1, 0, -1, -1, -1, -1, 0}),
      sym3({0, 1, -1, 1, 0, 1, -1, 1, 0}),
      sym3({1, 0, 0, 0, 1, 0, 0, 0, -2}),
  };
  for (size_t i = 0; i < frame.size(); ++i)
    for (size_t j = i; j < frame.size(); ++j) {
      Rational ip = trace_product(frame[i], frame[j]);
      require(ip == (i == j ? Rational(6) : Rational(0)), "cubic frame: not orthogonal");
    }
  return frame;
}

DefiningTensor defining_tensor(ModelName m) {
  DefiningTensor t;
  t.name = m;
  switch (m) {
    case ModelName::SO3Cubic:
      t.n = 5;
      t.cubic = so3_cubic();
      break;
    case ModelName::KaehlerForm: {
      t.n = 6;
      Multivector w(6, 2);
      w.add_term({1, 2}, 1);
      w.add_term({3, 4}, 1);
      w.add_term({5, 6}, 1);
      t.form = std::move(w);
      break;
    }
    case ModelName::G2Form:
      t.n = 7;
      t.form = g2_three_form();
      break;
    case ModelName::CayleyForm:
      t.n = 8;
      t.form = cayley_four_form();
      break;
  }
  return t;
}

long tensor_space_dim(const DefiningTensor& t) {
  if (t.form) return static_cast<long>(monomial_keys(t.n, t.form->k).size());
  return static_cast<long>(sym_keys(t.n).size());
}

QVec act_coords(const DefiningTensor& t, const SkewEndo& w) {
  if (t.form) return mv_coords(so_act(w, *t.form), monomial_keys(t.n, t.form->k));
  return sym_coords(so_act(w, *t.cubic), sym_keys(t.n));
}

StabilizerModel build_model(ModelName m) {
  DefiningTensor dt = defining_tensor(m);
  const int n = dt.n;
  auto pairs = so_basis_pairs(n);
  std::vector<QVec> cols;
  cols.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    SkewEndo w(n);
    w.set(i, j, 1);
    cols.push_back(act_coords(dt, w));
  }
  std::vector<QVec> ker = exact_kernel(Mat::from_columns(cols));
  require(static_cast<int>(ker.size()) == expected_stabilizer_dim(m),
          "stabilizer dimension mismatch for " + model_label(m));
  StabilizerModel sm;
  sm.tensor = std::move(dt);
  sm.n = n;
  sm.g_basis = gram_schmidt(ker);
  // monomial coordinates are orthonormal, so the complement of span(g) is
  // the kernel of the matrix whose rows are the g vectors
  sm.m_basis = gram_schmidt(exact_kernel(Mat::from_rows(ker)));
  require(sm.g_basis.size() + sm.m_basis.size() == pairs.size(), "g + m does not fill so(n)");
  return sm;
}

SkewEndo basis_element(const StabilizerModel& sm, const OrthoVec& v) {
  return skew_from_coords(sm.n, v.v);
}

ThetaMaps theta_maps(const StabilizerModel& sm) {
  ThetaMaps t;
  t.theta1 = theta_matrix(sm, sm.m_basis);
  t.theta2 = theta_matrix(sm, sm.g_basis);
  t.rank1 = exact_rank(t.theta1);
  return t;
}

TorsionSolution solve_torsion(const StabilizerModel& sm, const MValuedForm& gamma) {
  const int n = sm.n;
  if (gamma.n != n || static_cast<int>(gamma.comp.size()) != n)
    throw InputError("gamma must have one component per coordinate direction");
  const int dm = static_cast<int>(sm.m_basis.size());
  QVec rhs(static_cast<size_t>(n) * dm);
  for (int d = 1; d <= n; ++d) {
    const Multivector& g = gamma.comp[d - 1];
    if (g.n != n || g.k != 2) throw InputError("gamma components must be 2-forms on R^n");
    QVec gc = two_form_coords(g);
    for (const auto& ov : sm.g_basis)
      if (dot(gc, ov.v) != 0) throw InputError("gamma component is not m-valued");
    for (int i = 0; i < dm; ++i) rhs[(d - 1) * dm + i] = -2 * dot(gc, sm.m_basis[i].v) / sm.m_basis[i].norm2;
  }
  Mat theta1 = theta_matrix(sm, sm.m_basis);
  AffineSolution sol = solve_affine(theta1, rhs);
  TorsionSolution out;
  if (!sol.consistent) {
    out.kind = TorsionSolution::Kind::NoSolution;
    return out;
  }
  auto keys3 = monomial_keys(n, 3);
  out.t0 = mv_from_coords(n, 3, keys3, sol.particular);
  for (const QVec& x : sol.kernel) out.kernel.push_back(mv_from_coords(n, 3, keys3, x));
  out.kind = out.kernel.empty() ? TorsionSolution::Kind::Unique : TorsionSolution::Kind::Family;
  return out;
}

std::pair<SkewEndo, SkewEndo> split_gm(const StabilizerModel& sm, const SkewEndo& w) {
  require(w.n == sm.n, "split_gm: dimension mismatch");
  QVec c = skew_coords(w);
  QVec gc(c.size());
  for (const auto& ov : sm.g_basis) {
    Rational t = dot(c, ov.v) / ov.norm2;
    for (size_t i = 0; i < c.size(); ++i) gc[i] += t * ov.v[i];
  }
  QVec mc(c.size());
  for (size_t i = 0; i < c.size(); ++i) mc[i] = c[i] - gc[i];
  return {skew_from_coords(sm.n, gc), skew_from_coords(sm.n, mc)};
}

std::vector<SkewEndo> isotropy_algebra(const StabilizerModel& sm, const Multivector& t) {
  require(t.n == sm.n, "isotropy_algebra: dimension mismatch");
  auto keys = monomial_keys(t.n, t.k);
  std::vector<QVec> cols;
  cols.reserve(sm.g_basis.size());
  for (const auto& ov : sm.g_basis) cols.push_back(mv_coords(so_act(basis_element(sm, ov), t), keys));
  std::vector<SkewEndo> out;
  for (const QVec& x : exact_kernel(Mat::from_columns(cols))) {
    SkewEndo w(sm.n);
    for (size_t i = 0; i < x.size(); ++i) w += x[i] * basis_element(sm, sm.g_basis[i]);
    out.push_back(std::move(w));
  }
  return out;
}

Mat invariance_constraints(const StabilizerModel& sm, const std::vector<Mat>& ds) {
  const int n = sm.n;
  const int k = static_cast<int>(sm.g_basis.size());
  std::vector<SkewEndo> gen;
  gen.reserve(sm.g_basis.size());
  for (const auto& ov : sm.g_basis) gen.push_back(basis_element(sm, ov));
  Mat out(static_cast<int>(ds.size()) * n * n, k);
  int base = 0;
  for (const Mat& d : ds) {
    require(d.rows == n && d.cols == n, "invariance_constraints: matrix size");
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) require(d.at(r, c) == d.at(c, r), "invariance_constraints: not symmetric");
    for (int j = 0; j < k; ++j)
      for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
          Rational v = 0;
          for (int l = 1; l <= n; ++l)
            v += d.at(r - 1, l - 1) * gen[j].at(l, c) - gen[j].at(r, l) * d.at(l - 1, c - 1);
          out.at(base + (r - 1) * n + (c - 1), j) = v;
        }
    base += n * n;
  }
  return out;
}

long torsion_action_rank(const StabilizerModel& sm) {
  const int n = sm.n;
  const int dm = static_cast<int>(sm.m_basis.size());
  const long td = tensor_space_dim(sm.tensor);
  std::vector<QVec> acts;
  acts.reserve(sm.m_basis.size());
  for (const auto& ov : sm.m_basis) acts.push_back(act_coords(sm.tensor, basis_element(sm, ov)));
  Mat a(static_cast<int>(n * td), n * dm);
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < dm; ++i)
      for (long r = 0; r < td; ++r) a.at(static_cast<int>(d * td + r), d * dm + i) = acts[i][r];
  return exact_rank(a);
}

std::optional<MValuedForm> unreachable_form(const StabilizerModel& sm) {
  const int n = sm.n;
  const int dm = static_cast<int>(sm.m_basis.size());
  Mat theta1 = theta_matrix(sm, sm.m_basis);
  // orthogonality to the image, in the inner product where e_d (x) basis[i]
  // has squared length norm2[i]
  Mat b(theta1.cols, theta1.rows);
  for (int r = 0; r < theta1.rows; ++r) {
    const Rational& w = sm.m_basis[r % dm].norm2;
    for (int c = 0; c < theta1.cols; ++c) b.at(c, r) = theta1.at(r, c) * w;
  }
  std::vector<QVec> ker = exact_kernel(b);
  if (ker.empty()) return std::nullopt;
  auto keys2 = monomial_keys(n, 2);
  MValuedForm out;
  out.n = n;
  for (int d = 1; d <= n; ++d) {
    QVec c(keys2.size());
    for (int i = 0; i < dm; ++i) {
      const Rational& t = ker[0][(d - 1) * dm + i];
      if (t == 0) continue;
      for (size_t p = 0; p < c.size(); ++p) c[p] += t * sm.m_basis[i].v[p];
    }
    out.comp.push_back(mv_from_coords(n, 2, keys2, c));
  }
  return out;
}

HeisenbergReport heisenberg_report() {
  StabilizerModel sm = build_model(ModelName::G2Form);
  HeisenbergReport rep;
  rep.torsion = Multivector(7, 3);
  rep.torsion.add_term({1, 3, 5}, 1);
  rep.torsion.add_term({5, 6, 7}, -1);
  rep.torsion.add_term({3, 4, 7}, -1);
  rep.torsion.add_term({1, 4, 6}, -1);
  rep.square = torsion_square(rep.torsion);
  rep.ricci = diag_mat({-2, 0, -2, 0, 0, -2, -2});

  std::vector<QVec> fam = exact_kernel(invariance_constraints(sm, {rep.ricci, rep.square}));
  rep.family_dim = static_cast<int>(fam.size());
  std::vector<SkewEndo> raw;
  for (const QVec& x : fam) {
    SkewEndo w(7);
    for (size_t i = 0; i < x.size(); ++i) w += x[i] * basis_element(sm, sm.g_basis[i]);
    raw.push_back(std::move(w));
  }

  // renormalize the family on its free entries
  const std::vector<std::pair<int, int>> free_entries = {{1, 3}, {1, 6}, {1, 7}, {3, 6}};
  require(raw.size() == free_entries.size(), "constrained family has unexpected dimension");
  Mat f(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int v = 0; v < 4; ++v) f.at(i, v) = raw[v].at(free_entries[i].first, free_entries[i].second);
  for (int i = 0; i < 4; ++i) {
    QVec e(4);
    e[i] = 1;
    AffineSolution sol = solve_affine(f, e);
    require(sol.consistent && sol.kernel.empty(), "family entries 13, 16, 17, 36 are not free");
    rep.family.push_back(combine(raw, sol.particular));
  }

  rep.relations_hold = true;
  for (const SkewEndo& w : rep.family) {
    for (int a : {1, 3, 6, 7})
      for (int b : {2, 4, 5})
        if (w.at(a, b) != 0) rep.relations_hold = false;
    if (w.at(2, 4) != 0 || w.at(2, 5) != 0) rep.relations_hold = false;
    if (w.at(1, 3) != -w.at(6, 7) || w.at(1, 6) != w.at(3, 7)) rep.relations_hold = false;
    if (w.at(1, 7) + w.at(3, 6) + w.at(4, 5) != 0) rep.relations_hold = false;
  }

  auto keys3 = monomial_keys(7, 3);
  std::vector<QVec> lie_cols;
  for (const SkewEndo& w : rep.family) {
    rep.family_lie.push_back(lie_derivative(w, rep.torsion));
    lie_cols.push_back(mv_coords(rep.family_lie.back(), keys3));
  }
  for (const QVec& x : exact_kernel(Mat::from_columns(lie_cols))) rep.isotropy.push_back(combine(rep.family, x));
  rep.isotropy_dim = static_cast<int>(rep.isotropy.size());
  rep.isotropy_relation_holds = !rep.isotropy.empty();
  for (const SkewEndo& w : rep.isotropy)
    if (w.is_zero() || w.at(3, 6) + w.at(4, 5) != 0) rep.isotropy_relation_holds = false;

  rep.full_isotropy_dim = static_cast<int>(isotropy_algebra(sm, rep.torsion).size());
  rep.automorphism_bound = 7 + rep.isotropy_dim;
  return rep;
}

SolvableReport solvable_report() {
  StabilizerModel sm = build_model(ModelName::G2Form);
  SolvableReport rep;
  rep.torsion = Multivector(7, 3);
  rep.torsion.add_term({2, 5, 6}, 2);
  rep.torsion.add_term({2, 3, 4}, -2);
  rep.isotropy = isotropy_algebra(sm, rep.torsion);
  rep.isotropy_dim = static_cast<int>(rep.isotropy.size());

  rep.gen_a = SkewEndo(7);
  rep.gen_a.set(1, 7, -2);
  rep.gen_a.set(3, 6, 1);
  rep.gen_a.set(4, 5, 1);
  rep.gen_b = SkewEndo(7);
  rep.gen_b.set(3, 4, 1);
  rep.gen_b.set(5, 6, -1);
  rep.generators_stabilize =
      so_act(rep.gen_a, rep.torsion).is_zero() && so_act(rep.gen_b, rep.torsion).is_zero();

  std::vector<QVec> iso_rows, gen_rows, all_rows;
  for (const SkewEndo& w : rep.isotropy) {
    iso_rows.push_back(skew_coords(w));
    all_rows.push_back(skew_coords(w));
  }
  gen_rows.push_back(skew_coords(rep.gen_a));
  gen_rows.push_back(skew_coords(rep.gen_b));
  all_rows.insert(all_rows.end(), gen_rows.begin(), gen_rows.end());
  int ri = exact_rank(Mat::from_rows(iso_rows));
  int rg = exact_rank(Mat::from_rows(gen_rows));
  int ra = exact_rank(Mat::from_rows(all_rows));
  rep.generators_span = (ri == rg) && (rg == ra);

  rep.abelian = true;
  for (size_t i = 0; i < rep.isotropy.size(); ++i)
    for (size_t j = i + 1; j < rep.isotropy.size(); ++j)
      if (!commutator(rep.isotropy[i], rep.isotropy[j]).is_zero()) rep.abelian = false;

  rep.automorphism_bound = 7 + rep.isotropy_dim;
  return rep;
}

}  // namespace gstruct
