#pragma once

#include <string>
#include <vector>

#include "alia/function_ring.hpp"
#include "alia/lie_algebra.hpp"

namespace alia {

/// One group element, realized simultaneously as a Lie-algebra automorphism
/// and a Moebius map on the sphere. Moebius matrices are kept in projective
/// normal form so element equality is pair equality.
struct GroupElement {
  ExactMatrix lie;     // dim_g x dim_g
  ExactMatrix mobius;  // 2 x 2, normalized
  std::string word;    // generator word, "id" for the identity
};

/// A finite group acting on (g, sphere), closed under composition, with a
/// Gamma-invariant pole set S. The scalar field is fixed at construction to
/// the lcm of all root orders the session needs (matrix entries, pole
/// coordinates, element orders).
class GroupAction {
public:
  /// Generators are closed into the full element list (BFS over right
  /// multiplications, identity first). Throws PreconditionError when the
  /// closure exceeds max_elements, when a generator is not a Lie-algebra
  /// automorphism, when either factor of the action is non-faithful, or when
  /// the pole set is not invariant.
  GroupAction(StructLieAlgebra lie, std::vector<GroupElement> generators,
              std::vector<std::string> generator_names, std::vector<SpherePoint> poles,
              long max_elements = 200);

  const StructLieAlgebra& lie() const { return lie_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  long size() const { return static_cast<long>(elements_.size()); }
  const std::vector<SpherePoint>& poles() const { return poles_; }
  long field_order() const { return order_; }

  long multiply(long a, long b) const { return mult_table_[a][b]; }
  long inverse(long a) const { return inverse_[a]; }
  long element_order(long a) const { return element_order_[a]; }

  /// Index of the element with the given generator word, e.g. "c*b".
  /// Throws ConfigError when the word does not parse or names are unknown.
  long element_by_word(const std::string& word) const;

  SpherePoint apply_sphere(long elem, const SpherePoint& x) const;
  CycVector apply_lie(long elem, const CycVector& v) const;
  RationalFunction apply_function(long elem, const RationalFunction& f) const;

  struct StabilizerInfo {
    std::vector<long> members;  // element indices fixing the point
    long generator;             // index of a cyclic generator
    long nu0;                   // its order = |members|
  };
  /// Full stabilizer of a point off the pole set; cyclic by construction
  /// (verified, InternalError otherwise).
  StabilizerInfo stabilizer(const SpherePoint& x0) const;

private:
  void close_(std::vector<GroupElement> generators, long max_elements);
  void validate_();

  StructLieAlgebra lie_;
  std::vector<GroupElement> elements_;
  std::vector<std::string> generator_names_;
  std::vector<long> generator_indices_;
  std::vector<SpherePoint> poles_;
  long order_;  // field order
  std::vector<std::vector<long>> mult_table_;
  std::vector<long> inverse_;
  std::vector<long> element_order_;
};

}  // namespace alia
