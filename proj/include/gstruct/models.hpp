#pragma once

#include <optional>
#include <utility>

#include "gstruct/symtensor.hpp"

namespace gstruct {

// Explicit stabilizer models: a structure tensor on R^n together with the
// orthogonal split so(n) = g + m it induces.
enum class ModelName { SO3Cubic, KaehlerForm, G2Form, CayleyForm };

std::string model_label(ModelName m);
std::optional<ModelName> parse_model(const std::string& s);
std::vector<ModelName> all_models();

// Exactly one of form / cubic is set.
struct DefiningTensor {
  ModelName name = ModelName::SO3Cubic;
  int n = 0;
  std::optional<Multivector> form;
  std::optional<SymTensor3> cubic;
};

DefiningTensor defining_tensor(ModelName m);

// Orthogonal basis of traceless symmetric 3x3 matrices behind the cubic
// model. Integer entries, every element of squared trace norm 6, so the
// cubic trace polynomial has integer coefficients.
std::vector<Mat> cubic_frame();

// Dimension of the ambient space of the structure tensor, and coordinates
// of so_act(w, tensor) in its monomial (resp. sorted-triple) basis.
long tensor_space_dim(const DefiningTensor& t);
QVec act_coords(const DefiningTensor& t, const SkewEndo& w);

struct StabilizerModel {
  DefiningTensor tensor;
  int n = 0;
  // Orthogonal bases of the stabilizer subalgebra g and of its orthogonal
  // complement m inside so(n); coordinates in the 2-form monomial basis.
  std::vector<OrthoVec> g_basis;
  std::vector<OrthoVec> m_basis;
};

// Computes the stabilizer as the exact kernel of w -> so_act(w, tensor).
// The dimension is checked against the known value for each model.
StabilizerModel build_model(ModelName m);

SkewEndo basis_element(const StabilizerModel& sm, const OrthoVec& v);

struct ThetaMaps {
  // Restrictions of T -> sum_d e_d* (x) pr(e_d -| T) to the m and g parts.
  // Row (d-1)*dim + i is the coefficient on e_d (x) basis[i], column order
  // is the 3-form monomial order.
  Mat theta1;
  Mat theta2;
  int rank1 = 0;
};

ThetaMaps theta_maps(const StabilizerModel& sm);

// One 2-form per coordinate direction, each lying in span(m_basis).
struct MValuedForm {
  int n = 0;
  std::vector<Multivector> comp;
};

struct TorsionSolution {
  enum class Kind { NoSolution, Unique, Family };
  Kind kind = Kind::NoSolution;
  Multivector t0;
  std::vector<Multivector> kernel;  // nonempty only for Family
};

// All exact solutions T of theta1(T) = -2 gamma. Throws InputError when a
// component of gamma fails to be m-valued.
TorsionSolution solve_torsion(const StabilizerModel& sm, const MValuedForm& gamma);

// Orthogonal projections onto span(g_basis) and span(m_basis).
std::pair<SkewEndo, SkewEndo> split_gm(const StabilizerModel& sm, const SkewEndo& w);

// Kernel of w -> so_act(w, t) restricted to span(g_basis).
std::vector<SkewEndo> isotropy_algebra(const StabilizerModel& sm, const Multivector& t);

// Linear conditions [D, w] = 0 on g coordinates, one row per matrix entry
// per D. D must be symmetric, so the conditions cut out the g elements
// commuting with every D.
Mat invariance_constraints(const StabilizerModel& sm, const std::vector<Mat>& ds);

// Exact rank of gamma -> sum_d e_d* (x) so_act(gamma_d, tensor) on m-valued
// forms; full rank n * dim(m) means a reduction with this stabilizer carries
// no torsion ambiguity.
long torsion_action_rank(const StabilizerModel& sm);

// An m-valued form outside the image of theta1, when the image is proper.
std::optional<MValuedForm> unreachable_form(const StabilizerModel& sm);

// Invariant 3-form of the 7-dimensional 2-step nilpotent example and the
// isotropy computation staged through its curvature constraints.
struct HeisenbergReport {
  Multivector torsion;
  Mat square;  // S_ij = sum_{m,n} T_imn T_jmn
  Mat ricci;   // fixed curvature input of the geometry
  int family_dim = 0;                   // solutions of [Ric,w] = [S,w] = 0 inside g
  std::vector<SkewEndo> family;         // basis normalized on the entries 13, 16, 17, 36
  std::vector<Multivector> family_lie;  // lie_derivative of torsion along family[i]
  bool relations_hold = false;          // w13 = -w67, w16 = w37, w17 + w36 + w45 = 0
  int isotropy_dim = 0;                 // family cut by the kernel of the lie derivative
  std::vector<SkewEndo> isotropy;
  bool isotropy_relation_holds = false;  // w36 + w45 = 0 on the cut
  int full_isotropy_dim = 0;             // kernel inside all of g, no curvature constraints
  long automorphism_bound = 0;           // n + isotropy_dim
};

HeisenbergReport heisenberg_report();

// Invariant 3-form of the 6-dimensional solvable example extended by a flat
// direction; its isotropy inside g is a 2-torus.
struct SolvableReport {
  Multivector torsion;
  int isotropy_dim = 0;
  std::vector<SkewEndo> isotropy;
  SkewEndo gen_a, gen_b;  // distinguished generators expected to span it
  bool generators_stabilize = false;
  bool generators_span = false;
  bool abelian = false;
  long automorphism_bound = 0;
};

SolvableReport solvable_report();

}  // namespace gstruct
