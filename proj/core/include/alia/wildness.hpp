#pragma once

#include <string>
#include <vector>

#include "alia/invariants.hpp"
#include "alia/lie_algebra.hpp"

namespace alia {

/// Makedonskii's trichotomy: a finite-dimensional Lie algebra over an
/// algebraically closed field is tame exactly when it is semisimple,
/// one-dimensional, or semisimple (+) line; everything else is wild.
enum class LieClass { Semisimple, OneDimensional, SemisimplePlusLine, Wild };

std::string lie_class_name(LieClass c);

struct Classification {
  LieClass kind = LieClass::Wild;
  long dim = 0;
  long radical_dim = 0;
  bool radical_central = false;
  long derived_series_length = 0;  // of the radical (solvability certificate)
  bool wild() const { return kind == LieClass::Wild; }
};

/// Decision recomputed from primitives: radical via the Killing form,
/// solvability via the derived series, the (+)-line shape via a central
/// 1-dimensional radical with a complementary semisimple derived ideal.
Classification makedonskii_classify(const StructLieAlgebra& g);

/// Growth table of the solvable ideals K_n = I_{x0,1} / I_{x0,n} inside the
/// quotients A / I_{x0,n}, with solvability certificates per row.
struct SolvableGrowthRow {
  long n = 0;
  long quotient_dim = 0;
  long solvable_ideal_dim = 0;
  long derived_series_length = 0;
  bool solvable = false;
  Classification quotient_class;
};
std::vector<SolvableGrowthRow> solvable_growth(const GroupAction& action, const SpherePoint& x0,
                                               long nmax, long degree_cap = 256);

/// Commutant of a Lie algebra representation, with a Burnside-type
/// irreducibility decision (the generated associative algebra is the full
/// matrix algebra iff the representation is irreducible) and, when
/// reducible, a best-effort invariant-subspace witness.
struct EndomorphismReport {
  long end_dim = 0;
  std::vector<ExactMatrix> commutant_basis;
  bool irreducibility_checked = false;
  bool irreducible = false;
  std::vector<CycVector> invariant_subspace;  // proper nonzero witness if found
};
EndomorphismReport endomorphism_algebra(const StructLieAlgebra& g,
                                        const std::vector<ExactMatrix>& rho,
                                        long irreducibility_cap = 16);

}  // namespace alia
