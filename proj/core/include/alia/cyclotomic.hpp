#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace alia {

using Rational = mpq_class;

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree,
/// as exact integers (degree = phi(n), monic).
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

/// An element of the cyclotomic field Q(zeta_n), stored on the power basis
/// 1, zeta, ..., zeta^(phi(n)-1) reduced modulo the n-th cyclotomic
/// polynomial. Canonical representatives, so equality is coefficient-wise.
class CycScalar {
public:
  CycScalar() : order_(1), coeffs_(1, Rational(0)) {}

  static CycScalar rational(const Rational& q, long order = 1);
  static CycScalar integer(long v, long order = 1) {
    return rational(Rational(v), order);
  }
  /// zeta_n as an element of Q(zeta_n).
  static CycScalar zeta(long order) { return zeta_pow(order, 1); }
  /// zeta_n^k as an element of Q(zeta_n).
  static CycScalar zeta_pow(long order, long k);
  static CycScalar zero(long order) { return rational(Rational(0), order); }
  static CycScalar one(long order) { return rational(Rational(1), order); }

  /// Raw constructor: coefficient vector on the power basis, already reduced.
  CycScalar(long order, std::vector<Rational> coeffs);

  long order() const { return order_; }
  long degree() const { return static_cast<long>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Rational part; throws PreconditionError when not rational.
  Rational to_rational() const;

  CycScalar operator-() const;
  CycScalar operator+(const CycScalar& rhs) const;
  CycScalar operator-(const CycScalar& rhs) const;
  CycScalar operator*(const CycScalar& rhs) const;
  CycScalar operator/(const CycScalar& rhs) const;
  CycScalar& operator+=(const CycScalar& rhs) { return *this = *this + rhs; }
  CycScalar& operator-=(const CycScalar& rhs) { return *this = *this - rhs; }
  CycScalar& operator*=(const CycScalar& rhs) { return *this = *this * rhs; }
  CycScalar& operator/=(const CycScalar& rhs) { return *this = *this / rhs; }

  CycScalar inverse() const;
  CycScalar pow(long e) const;

  bool operator==(const CycScalar& rhs) const;
  bool operator!=(const CycScalar& rhs) const { return !(*this == rhs); }

  /// Same element viewed in Q(zeta_new_order); order must divide new_order.
  CycScalar embed(long new_order) const;

  /// Size proxy used for pivot selection: total limb count of all
  /// numerators and denominators.
  size_t height() const;

  /// Canonical text form, e.g. "1/2*zeta5^3 - 1/3", parseable back.
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const CycScalar& s);

private:
  void reduce_();

  long order_;
  std::vector<Rational> coeffs_;
};

/// Promotes both scalars to lcm of their orders. Arithmetic requires equal
/// orders; sessions fix a common order up front, so this is used at module
/// boundaries only.
std::pair<CycScalar, CycScalar> align_orders(const CycScalar& a, const CycScalar& b);

}  // namespace alia
