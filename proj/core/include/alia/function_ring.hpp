#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alia/matrix.hpp"

namespace alia {

/// Dense polynomial over a cyclotomic field, coefficients ascending in z.
class Poly {
public:
  explicit Poly(long order = 1) : order_(order), coeffs_(1, CycScalar::zero(order)) {}
  Poly(long order, std::vector<CycScalar> coeffs);

  static Poly constant(const CycScalar& c);
  static Poly z(long order);
  /// (z - root)
  static Poly linear_root(const CycScalar& root);

  long order() const { return order_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const;
  bool is_constant() const { return degree() == 0; }
  const std::vector<CycScalar>& coeffs() const { return coeffs_; }
  const CycScalar& coeff(long k) const { return coeffs_[k]; }
  const CycScalar& lead() const { return coeffs_.back(); }

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const CycScalar& c) const;
  Poly operator-() const;
  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  Poly divmod(const Poly& den, Poly& rem) const;
  /// Exact division; throws InternalError when the remainder is nonzero.
  Poly divide_exact(const Poly& den) const;
  static Poly gcd(const Poly& a, const Poly& b);  // monic

  Poly derivative() const;
  Poly pow(long e) const;
  Poly monic() const;
  /// Composition with z + c (Taylor shift).
  Poly shift(const CycScalar& c) const;
  CycScalar eval(const CycScalar& x) const;
  Poly embed(long new_order) const;

  /// p((a z + b)/(c z + d)) * (c z + d)^deg(p), the homogenized substitution
  /// used for pulling back along Moebius maps.
  Poly mobius_substitute(const CycScalar& a, const CycScalar& b, const CycScalar& c,
                         const CycScalar& d) const;

  std::string str() const;

private:
  void trim_();
  long order_;
  std::vector<CycScalar> coeffs_;
};

/// Point of the Riemann sphere: a finite cyclotomic value or infinity.
class SpherePoint {
public:
  SpherePoint() : finite_(true), value_(CycScalar::zero(1)) {}
  static SpherePoint infinity() {
    SpherePoint p;
    p.finite_ = false;
    return p;
  }
  static SpherePoint finite(const CycScalar& v) {
    SpherePoint p;
    p.finite_ = true;
    p.value_ = v;
    return p;
  }

  bool is_infinity() const { return !finite_; }
  const CycScalar& value() const;

  bool operator==(const SpherePoint& rhs) const;
  bool operator!=(const SpherePoint& rhs) const { return !(*this == rhs); }

  SpherePoint embed(long new_order) const;
  std::string str() const;

private:
  bool finite_;
  CycScalar value_;
};

/// Applies the Moebius map with matrix [[a,b],[c,d]] to a sphere point.
SpherePoint mobius_apply(const ExactMatrix& gamma, const SpherePoint& x);

/// Element of the function ring on the punctured sphere: a reduced rational
/// function all of whose poles lie in the ambient pole set S.
class RationalFunction {
public:
  RationalFunction() = default;

  /// Normalizes (monic denominator, coprime), then checks the pole-set
  /// invariant. Throws PreconditionError when a denominator root is not in S
  /// or when infinity is an unlisted pole.
  static RationalFunction make(Poly num, Poly den, std::vector<SpherePoint> pole_set);
  static RationalFunction polynomial(Poly p, std::vector<SpherePoint> pole_set);
  static RationalFunction constant(const CycScalar& c, std::vector<SpherePoint> pole_set);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const std::vector<SpherePoint>& pole_set() const { return pole_set_; }
  long order() const { return num_.order(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator*(const CycScalar& c) const;
  RationalFunction operator-() const;
  /// Division; the result must again have poles only in S (checked).
  RationalFunction operator/(const RationalFunction& rhs) const;
  bool operator==(const RationalFunction& rhs) const;
  bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }

  RationalFunction derivative() const;
  /// Value at a finite point off the poles.
  CycScalar eval(const SpherePoint& x) const;
  RationalFunction embed(long new_order) const;

  std::string str() const;

private:
  Poly num_{1};
  Poly den_{1};
  std::vector<SpherePoint> pole_set_;
};

/// Taylor data of a function at a finite base point: coeffs[i] = f^(i)(x0)/i!.
struct Jet {
  SpherePoint base;
  std::vector<CycScalar> coeffs;
};

/// First m Taylor coefficients at x0. Errors: x0 on a pole of f (pole error),
/// x0 = infinity (unsupported chart; apply a Moebius change first).
Jet taylor_jet(const RationalFunction& f, const SpherePoint& x0, long m);

/// Jet of f along the chart w: the Taylor expansion of f(chart^-1(w)) at w=0.
Jet taylor_jet_in_chart(const RationalFunction& f, const ExactMatrix& chart, long m);

/// f evaluated on the Jordan block J_{x,m}: the upper-triangular Toeplitz
/// matrix with (i, i+k) entry f^(k)(x)/k!. Ring homomorphism in f.
ExactMatrix jordan_eval(const RationalFunction& f, const SpherePoint& x, long m);

/// Toeplitz matrix of a jet (the matrix of multiplication by f on jets).
ExactMatrix jet_toeplitz(const Jet& jet, long m);

/// Dimension of the space of intertwiners between the indecomposable
/// representations rho_{x,i} and rho_{x2,j} of the function ring with pole
/// set S: zero for distinct base points, min(i, j) at equal ones.
long hom_dimension(const SpherePoint& x, long i, const SpherePoint& x2, long j,
                   const std::vector<SpherePoint>& pole_set, long order);
long hom_dimension(const SpherePoint& x, long i, const SpherePoint& x2, long j);

/// Polynomial f with f^(j)(z_i) = 0 for j < m and f^(m)(z_i) = c_i, for
/// pairwise distinct finite points. Requires infinity in the pole set.
RationalFunction hermite_interpolate(const std::vector<std::pair<SpherePoint, CycScalar>>& points,
                                     long m, const std::vector<SpherePoint>& pole_set);

/// (gamma . f)(x) = f(gamma^-1 x); the pole set is transported by gamma.
RationalFunction mobius_pullback(const RationalFunction& f, const ExactMatrix& gamma);

/// Local coordinate that linearizes a finite-order Moebius map fixing x0:
/// chart(x0) = 0 and chart . gamma0 . chart^-1 = multiplication by zeta,
/// zeta a primitive root of unity of order nu0 = ord(gamma0).
struct LinearChart {
  ExactMatrix mobius;  // the chart as a Moebius matrix
  CycScalar zeta;
  long nu0 = 1;
};
LinearChart linearizing_coordinate(const SpherePoint& x0, const ExactMatrix& gamma0);

/// Order of a Moebius matrix in PGL_2; throws PreconditionError beyond cap.
long mobius_order(const ExactMatrix& gamma, long cap = 512);

/// Moebius matrices are projective: scales so the first nonzero entry
/// (row-major) is 1, making equality testable.
ExactMatrix mobius_normalize(const ExactMatrix& gamma);

}  // namespace alia
