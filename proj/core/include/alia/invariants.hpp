#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alia/group_action.hpp"

namespace alia {

/// Element of g (x) O_X in Lie-basis coordinates: one function per basis
/// vector. Equivariant when gamma.a = a for every group element.
struct EquivariantElement {
  std::vector<RationalFunction> components;
};

EquivariantElement equivariant_zero(const GroupAction& action);
EquivariantElement equivariant_monomial(const GroupAction& action, long lie_index,
                                        const RationalFunction& f);
EquivariantElement equivariant_add(const EquivariantElement& a, const EquivariantElement& b);
EquivariantElement equivariant_scale(const CycScalar& c, const EquivariantElement& a);
EquivariantElement equivariant_bracket(const GroupAction& action, const EquivariantElement& a,
                                       const EquivariantElement& b);
/// gamma . a (Lie matrix on coordinates, pullback on functions).
EquivariantElement equivariant_apply(const GroupAction& action, long elem,
                                     const EquivariantElement& a);
bool equivariant_is_invariant(const GroupAction& action, const EquivariantElement& a);
/// Reynolds average over the group of b_i (x) f.
EquivariantElement reynolds_average(const GroupAction& action, long lie_index,
                                    const RationalFunction& f);

/// Evaluation of an equivariant element on a finite point multiset X off S.
/// Values are asserted to lie in the stabilizer-fixed subalgebra g^x.
std::vector<CycVector> point_evaluation(const GroupAction& action, const EquivariantElement& a,
                                        const std::vector<SpherePoint>& points);

/// The filtered automorphic Lie algebra truncation: a basis of all invariant
/// elements of g (x) F_d for d <= max_degree, where F_d is the space of
/// rational functions with pole order at most d at each point of S
/// (numerator degree <= d|S| over the fixed denominator). Elements are kept
/// both as equivariant elements and as coordinate vectors in g (x) F_D.
class InvariantFiltration {
public:
  static InvariantFiltration build(const GroupAction& action, long max_degree);

  const GroupAction& action() const { return *action_; }
  long max_degree() const { return max_degree_; }
  long size() const { return static_cast<long>(basis_.size()); }
  const std::vector<EquivariantElement>& basis() const { return basis_; }
  /// Minimal filtration degree at which each basis element appears.
  const std::vector<long>& degrees() const { return degrees_; }
  /// Coordinates of stored basis elements in g (x) F_D (b-major layout).
  const std::vector<CycVector>& coordinates() const { return coords_; }
  long coord_dim() const;

  /// Coordinates of an arbitrary element of g (x) F_D; throws
  /// PreconditionError when the element lies outside the truncation.
  CycVector coordinates_of(const EquivariantElement& e) const;
  /// Coordinate vector of a combination sum c_i basis_i.
  CycVector coordinates_of_combo(const CycVector& combo) const;

  /// Basis functions u_{d,j} = z^j / q_d of F_d.
  RationalFunction filtration_function(long d, long j) const;
  long functions_per_degree(long d) const;

private:
  const GroupAction* action_ = nullptr;
  long max_degree_ = 0;
  std::vector<EquivariantElement> basis_;
  std::vector<long> degrees_;
  std::vector<CycVector> coords_;
};

/// Chart and stabilizer data used by every jet computation at a point.
struct JetSetup {
  SpherePoint x0;
  GroupAction::StabilizerInfo stab;
  LinearChart chart;  // linearizing chart when nu0 > 1, plain shift otherwise
};
JetSetup make_jet_setup(const GroupAction& action, const SpherePoint& x0);

/// Jet image of an equivariant element at x0 in the linearizing chart:
/// vector of length dim_g * m, coefficient-major (k * dim_g + lie index).
CycVector equivariant_jet(const GroupAction& action, const EquivariantElement& a,
                          const JetSetup& setup, long m);

/// Kernel of the jet map on the filtration: the ideal I_{x0,m} intersected
/// with the degree-D truncation, as a subspace in g (x) F_D coordinates.
Subspace jet_ideal(const InvariantFiltration& filt, const SpherePoint& x0, long m);

struct IdealChainRow {
  long m;
  long codim;
  bool strict_drop;  // ideal strictly smaller than at m-1
};
std::vector<IdealChainRow> ideal_chain(const InvariantFiltration& filt, const SpherePoint& x0,
                                       long mmax);

/// I_{phi (+) psi} = I_phi  intersect  I_psi for jet representations phi, psi
/// (kernel of the stacked jet maps vs. intersection of the kernels). Returns
/// true on equality; a failure would be an implementation bug and carries a
/// counterexample report.
struct DirectSumCheck {
  bool equal;
  std::string report;
};
DirectSumCheck directsum_ideal_intersection_check(const InvariantFiltration& filt,
                                                  const SpherePoint& x1, long m1,
                                                  const SpherePoint& x2, long m2);

/// Finite-dimensional quotient of the automorphic Lie algebra by a jet
/// ideal, realized on the graded monomial basis w (x) z^k of the jet-image
/// space. Carries the data needed to express further jets in quotient
/// coordinates.
struct JetQuotient {
  StructLieAlgebra algebra;  // graded
  std::vector<long> exponents;
  std::vector<CycVector> eigvecs;  // g-coordinates of the w's
  JetSetup setup;
  long m = 0;
  long degree_used = 0;              // stabilized filtration degree
  std::vector<CycVector> span_jets;  // spanning jet images from the filtration

  /// Quotient coordinates of a jet vector (throws when outside the image).
  CycVector jet_to_coordinates(const CycVector& jet) const;
};

/// Computes the quotient with degree stabilization: the filtration degree is
/// raised until the jet-image dimension is unchanged for nu0 consecutive
/// degrees. Throws PreconditionError when degree_cap is hit first.
JetQuotient quotient_by_jet_ideal(const GroupAction& action, const SpherePoint& x0, long m,
                                  long degree_cap = 256);

/// Same quotient computed from an explicit filtration (no stabilization
/// search; the filtration degree must already be sufficient).
JetQuotient quotient_from_filtration(const InvariantFiltration& filt, const SpherePoint& x0,
                                     long m);

}  // namespace alia
