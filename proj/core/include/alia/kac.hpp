#pragma once

#include <string>
#include <vector>

#include "alia/lie_algebra.hpp"
#include "alia/truncated_current.hpp"

namespace alia {

/// Root decomposition of a simple Lie algebra with respect to the
/// centralizer of a regular element x' whose ad-eigenvalues are integers.
struct RootDatum {
  std::string type_label;  // "A1", "A2", or "X?" (experimental)
  long rank = 0;
  CycVector regular;            // x'
  std::vector<CycVector> csa;   // echelon basis of ker ad(x'), rank vectors
  struct Root {
    std::vector<CycScalar> tags;  // ad eigenvalues on the csa basis
    long level = 0;               // alpha(x'), an integer
    CycVector vector;             // echelon-normalized root vector
    bool positive = false;
  };
  std::vector<Root> roots;
  std::vector<long> simple;  // indices into roots
  long lowest = -1;          // index of the lowest root
};

/// Deterministic search for a regular fixed element: small-integer
/// combinations of an echelon basis of g^(gamma0), rescaled by cyclotomic
/// units so that ad(x') has integer eigenvalues with gcd 1. Throws
/// PreconditionError with a diagnostic when the budget is exhausted.
CycVector regular_fixed_element(const StructLieAlgebra& g, const ExactMatrix& gamma0, long rank);

RootDatum csa_roots(const StructLieAlgebra& g, const CycVector& x_prime);

/// gamma0 = mu . g with mu induced by a diagram automorphism of order r and
/// g inner, diagonal on the root spaces. Affine generator nodes are built by
/// averaging each mu-orbit of simple root vectors (plus the lowest-root
/// vector); exponents are read against the supplied primitive root zeta.
struct TorsionFactorization {
  ExactMatrix gamma0;
  ExactMatrix mu;
  ExactMatrix inner;          // mu^-1 gamma0
  std::vector<long> mu_perm;  // on the simple roots
  long r = 1;
  long nu0 = 1;
  CycScalar zeta;
  std::string affine_type;  // "A1^(1)", "A2^(1)", "A2^(2)"

  struct AffineNode {
    CycVector e;  // generator E_i
    CycVector f;  // partner with [e, f] = h, alpha(h) = 2
    CycVector h;
    long s_raw = 0;                // gamma0 exponent
    long mu_class = 0;             // l with mu e = zeta_r^l e
    long level = 0;                // alpha(x')
    std::vector<CycScalar> h0_tags;  // ad eigenvalues on the h^0 basis
  };
  std::vector<AffineNode> nodes;      // r = 1: [lowest, simples...];
                                      // r = 2 (A2): [averaged pair, lowest]
  std::vector<CycVector> h0_basis;    // CSA of g^(mu) = gamma0-fixed part of the CSA
  std::vector<std::vector<long>> cartan;  // affine Cartan matrix A_ij
  std::vector<long> marks;                // delta = sum marks_i alpha_i
};

TorsionFactorization factor_torsion(const StructLieAlgebra& g, const RootDatum& datum,
                                    const ExactMatrix& gamma0, const CycScalar& zeta, long nu0);

struct KacCoordinates {
  std::vector<long> s;      // normalized (and canonicalized) coordinates
  std::vector<long> s_raw;  // exponents read from the affine nodes
  std::vector<long> marks;
  long r = 1;
  long nu0 = 1;
  std::vector<long> weyl_word;  // simple reflections in application order
  bool canonicalized = false;   // diagram symmetry applied to reach lex-min
  std::string affine_type;
};

KacCoordinates kac_coordinates(const TorsionFactorization& fact);

/// Replay helper: applies the affine reflections (mod nu0 alcove action) to
/// an exponent vector, in application order.
std::vector<long> apply_weyl_word(const std::vector<std::vector<long>>& cartan,
                                  const std::vector<long>& s, const std::vector<long>& word,
                                  long nu0);

/// Quotient root groupoid (Phi(X_N^(r)) union {0}) / r Z delta. Elements
/// carry canonical nonnegative coordinates over the affine base, a weight
/// profile and a multiplicity.
struct RootGroupoid {
  struct Element {
    std::vector<long> coords;        // canonical rep over the affine base
    std::vector<CycScalar> h0_tags;  // weight on the h^0 basis
    long mu_class = 0;
    bool imaginary = false;
    long multiplicity = 1;
    long level = 0;  // alpha(x'), used for display order
    std::string label;
  };
  std::vector<Element> elements;       // canonical display order
  std::vector<std::vector<long>> sum;  // index of alpha+beta, -1 if undefined
  long r = 1;
  long nu0 = 1;
};

/// Additive extension of exponent coordinates to the groupoid (values mod
/// nu0). Checks well-definedness: r * sum_i marks_i s_i = 0 mod nu0.
std::vector<long> omega1_values(const RootGroupoid& groupoid, const std::vector<long>& s,
                                const std::vector<long>& marks, long r, long nu0);

/// omega2(a, b) = (omega1(a) + omega1(b) - omega1(a+b)) / nu0 on composable
/// pairs, -1 elsewhere; values land in {0,1} and satisfy the cocycle
/// identity (both checked).
std::vector<std::vector<long>> omega2_values(const RootGroupoid& groupoid,
                                             const std::vector<long>& omega1, long nu0);

/// Graphviz text: vertices in display order, one undirected edge per
/// unordered composable pair with omega2 = 1.
std::string omega2_dot(const RootGroupoid& groupoid, const std::vector<std::vector<long>>& omega2);

/// Full local-structure bundle for a torsion of a simple Lie algebra.
struct LocalStructure {
  StructLieAlgebra lie;
  RootDatum datum;
  TorsionFactorization fact;
  KacCoordinates kc;
  RootGroupoid groupoid;
  std::vector<long> omega1_raw;
  std::vector<long> omega1_norm;
  std::vector<std::vector<long>> omega2;  // from omega1_raw
  // simultaneous eigenbasis diagonalizing mu, the inner part, and ad h^0
  std::vector<CycVector> basis;
  std::vector<long> basis_element;  // groupoid element per basis vector
  std::vector<long> basis_exponent; // gamma0 exponent (= omega1_raw of its element)
  CycScalar zeta;
  long nu0 = 1;
};

/// Runs the whole chain (regular element with deterministic orientation,
/// roots, factorization, Kac coordinates, groupoid, eigenbasis, cochains).
LocalStructure local_structure(const StructLieAlgebra& g, const ExactMatrix& gamma0,
                               const CycScalar& zeta, long nu0, long rank);

/// The algebra of the local structure theorem on the basis
/// A_(alpha,u) (x) z^(i nu0 + omega1(alpha)), bracket through the structure
/// constants of g and the omega2 exponent carry.
StructLieAlgebra local_structure_algebra(const LocalStructure& ls, long m);

/// The twisted truncated current model on the same eigenbasis, for
/// structure-constant comparison with local_structure_algebra.
TruncatedCurrentAlgebra local_structure_model(const LocalStructure& ls,
                                              const StructLieAlgebra& g,
                                              const ExactMatrix& gamma0, long m);

}  // namespace alia
