#pragma once

#include <string>
#include <vector>

#include "alia/invariants.hpp"
#include "alia/lie_algebra.hpp"

namespace alia {

/// The twisted truncated current algebra (g (x) C[z]/(z^m))^(gamma0),
/// realized on a basis of pairs (eigenvector of gamma0, exponent k) with
/// gamma0 w = zeta^k w and 0 <= k < m, graded by k.
struct TruncatedCurrentAlgebra {
  StructLieAlgebra algebra;
  std::vector<long> exponents;
  std::vector<CycVector> eigvecs;
  ExactMatrix gamma0;
  CycScalar zeta;
  long nu0 = 1;
  long m = 0;

  std::string bracket_table() const;
};

/// Builds the model from the eigenprojector eigenbasis of gamma0 (ties in
/// each eigenspace broken by echelon order). zeta must be a primitive
/// nu0-th root; gamma0 a Lie-algebra automorphism with gamma0^nu0 = id.
TruncatedCurrentAlgebra build_twisted_current(const StructLieAlgebra& g,
                                              const ExactMatrix& gamma0, const CycScalar& zeta,
                                              long nu0, long m);
/// Canonical-zeta overload (zeta_n^(n/nu0), nu0 = order of gamma0).
TruncatedCurrentAlgebra build_twisted_current(const StructLieAlgebra& g,
                                              const ExactMatrix& gamma0, long m);

/// Same model on a caller-supplied gamma0-eigenbasis (vector, exponent class
/// pairs); used to compare against bases produced elsewhere.
TruncatedCurrentAlgebra build_twisted_current_with_basis(
    const StructLieAlgebra& g, const ExactMatrix& gamma0, const CycScalar& zeta, long nu0, long m,
    const std::vector<std::pair<CycVector, long>>& eigenbasis,
    const std::vector<std::string>& vector_labels);

/// Executable certificate for the quotient isomorphism
/// A / I_{x0,m}  ~=  (g (x) C[z]/(z^m))^(gamma0):
/// the leading-Taylor-coefficient identification between the jet quotient
/// and the abstract model, checked by verify_isomorphism, together with the
/// per-layer surjectivity of leading coefficients onto each eigenspace.
struct LeadingCoeffIso {
  JetQuotient quotient;
  TruncatedCurrentAlgebra model;
  ExactMatrix map;  // quotient basis -> model basis
  bool verified = false;
  std::vector<long> layer_dims;  // composition factor dimensions, k = 0..m-1
};
LeadingCoeffIso leading_coefficient_iso(const GroupAction& action, const SpherePoint& x0, long m,
                                        long degree_cap = 256);

/// m = nu0 contraction: dim equals dim g and the bracket is the degree
/// truncation of g's bracket in the eigenbasis. Returns true when both
/// hold; the report lists any offending pair.
bool contraction_check(const TruncatedCurrentAlgebra& T, const StructLieAlgebra& g,
                       std::string* report = nullptr);

}  // namespace alia
