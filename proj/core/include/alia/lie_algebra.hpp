#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alia/matrix.hpp"

namespace alia {

class StructLieAlgebra;

/// Subspace of a structure-constant Lie algebra, stored as a reduced row
/// echelon basis so that equality of subspaces is equality of matrices.
class Subspace {
public:
  Subspace() : ambient_dim_(0), order_(1) {}
  Subspace(long ambient_dim, long order, const std::vector<CycVector>& spanning);

  static Subspace zero(long ambient_dim, long order) { return Subspace(ambient_dim, order, {}); }
  static Subspace full(long ambient_dim, long order);

  long ambient_dim() const { return ambient_dim_; }
  long order() const { return order_; }
  long dim() const { return static_cast<long>(basis_.size()); }
  const std::vector<CycVector>& basis() const { return basis_; }

  bool contains(const CycVector& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

private:
  long ambient_dim_;
  long order_;
  std::vector<CycVector> basis_;
};

/// Sparse structure-constant tensor: key (i, j) with i < j holds the
/// coordinates of [b_i, b_j]; antisymmetry is by construction.
using StructureConstants = std::map<std::pair<long, long>, std::vector<std::pair<long, CycScalar>>>;

class StructLieAlgebra {
public:
  StructLieAlgebra() : dim_(0), order_(1) {}
  StructLieAlgebra(long dim, long order, std::vector<std::string> labels, StructureConstants sc,
                   std::optional<std::vector<long>> grading = std::nullopt, bool validate = true);

  /// Builds structure constants from a faithful matrix realization: the basis
  /// matrices must be linearly independent and closed under commutators.
  static StructLieAlgebra from_matrix_basis(const std::vector<ExactMatrix>& basis,
                                            std::vector<std::string> labels, long order);

  long dim() const { return dim_; }
  long order() const { return order_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureConstants& structure_constants() const { return sc_; }
  const std::optional<std::vector<long>>& grading() const { return grading_; }

  /// Checks antisymmetry bookkeeping, the Jacobi identity on all basis
  /// triples, and grading compatibility. Throws InternalError on failure.
  void validate() const;

  CycVector bracket(const CycVector& x, const CycVector& y) const;
  /// Matrix of ad(x): y -> [x, y].
  ExactMatrix ad(const CycVector& x) const;

  CycVector basis_vector(long i) const;

  ExactMatrix killing_form() const;
  /// Maximal solvable ideal via Cartan's criterion:
  /// rad = { x : kappa(x, [g, g]) = 0 } (characteristic zero).
  Subspace radical() const;
  Subspace derived_subalgebra() const;
  Subspace center() const;

  Subspace bracket_span(const Subspace& a, const Subspace& b) const;
  /// Smallest ideal containing s; monotone, idempotent, extensive.
  Subspace ideal_closure(const Subspace& s) const;
  bool is_ideal(const Subspace& s) const;

  /// Derived series of an ideal (or of the whole algebra when s is full),
  /// strictly decreasing until stable. Throws PreconditionError when the
  /// input subspace is not an ideal.
  std::vector<Subspace> derived_series(const Subspace& s) const;
  std::vector<Subspace> derived_series() const { return derived_series(Subspace::full(dim_, order_)); }
  bool is_solvable(const Subspace& s) const;
  bool is_solvable() const { return is_solvable(Subspace::full(dim_, order_)); }
  bool is_abelian(const Subspace& s) const;

  /// Quotient by an ideal. Complement basis comes from the non-pivot
  /// coordinates of the ideal's echelon basis; labels record coset
  /// representatives. Also returns the projection onto quotient coordinates.
  struct Quotient;
  Quotient quotient_by_ideal(const Subspace& ideal) const;

  /// True iff f is invertible and f[x,y]_1 = [fx, fy]_2 on all basis pairs.
  static bool verify_isomorphism(const ExactMatrix& f, const StructLieAlgebra& g1,
                                 const StructLieAlgebra& g2);

  StructLieAlgebra embed(long new_order) const;

private:
  long dim_;
  long order_;
  std::vector<std::string> labels_;
  StructureConstants sc_;
  std::optional<std::vector<long>> grading_;
};

struct StructLieAlgebra::Quotient {
  StructLieAlgebra algebra;
  ExactMatrix projection;  // quotient_dim x dim
};

}  // namespace alia
