#include "alia/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "alia/errors.hpp"

namespace alia {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long euler_phi(long n) {
  internal_check(n >= 1, "euler_phi: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using ZPoly = std::vector<mpz_class>;

// Exact division of integer polynomials, remainder must vanish.
ZPoly zpoly_divide(const ZPoly& num, const ZPoly& den) {
  internal_check(!den.empty() && den.back() != 0, "zpoly_divide: bad divisor");
  ZPoly rem = num;
  ZPoly quo(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
  while (rem.size() >= den.size() && !(rem.size() == 1 && rem[0] == 0)) {
    size_t shift = rem.size() - den.size();
    mpz_class c = rem.back() / den.back();
    internal_check(c * den.back() == rem.back(), "zpoly_divide: not divisible");
    quo[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    while (rem.size() > 1 && rem.back() == 0) rem.pop_back();
    if (rem.size() == 1 && rem[0] == 0) break;
    if (rem.size() < den.size()) break;
  }
  bool rem_zero = true;
  for (const auto& c : rem)
    if (c != 0) rem_zero = false;
  internal_check(rem_zero, "zpoly_divide: nonzero remainder");
  return quo;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
  static std::map<long, ZPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  internal_check(n >= 1, "cyclotomic_polynomial: n must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  ZPoly num(n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) num = zpoly_divide(num, cyclotomic_polynomial(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

namespace {

using QPoly = std::vector<Rational>;

void qpoly_trim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Remainder of p modulo Phi_n, in place; result has degree < phi(n).
void reduce_mod_cyclotomic(QPoly& p, long n) {
  const ZPoly& phi = cyclotomic_polynomial(n);
  const size_t deg = phi.size() - 1;
  while (p.size() > deg) {
    Rational c = p.back();
    size_t shift = p.size() - 1 - deg;
    if (c != 0) {
      for (size_t i = 0; i < deg; ++i) p[shift + i] -= c * Rational(phi[i]);
    }
    p.pop_back();
  }
  p.resize(deg, Rational(0));
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Extended Euclid over Q[x]: returns (g, u, v) with u*a + v*b = g, g monic.
struct ExtGcd {
  QPoly g, u, v;
};

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  qpoly_trim(out);
  return out;
}

bool qpoly_is_zero(const QPoly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

// quotient of a by b (b nonzero), discarding remainder into rem.
QPoly qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& rem) {
  rem = a;
  qpoly_trim(rem);
  QPoly quo(1, Rational(0));
  if (rem.size() >= b.size()) quo.assign(rem.size() - b.size() + 1, Rational(0));
  while (!qpoly_is_zero(rem) && rem.size() >= b.size()) {
    Rational c = rem.back() / b.back();
    size_t shift = rem.size() - b.size();
    quo[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    qpoly_trim(rem);
    if (rem.size() == 1 && rem[0] == 0) break;
  }
  return quo;
}

ExtGcd qpoly_ext_gcd(QPoly a, QPoly b) {
  QPoly u0{Rational(1)}, v0{Rational(0)};
  QPoly u1{Rational(0)}, v1{Rational(1)};
  qpoly_trim(a);
  qpoly_trim(b);
  while (!qpoly_is_zero(b)) {
    QPoly rem;
    QPoly q = qpoly_divmod(a, b, rem);
    a = b;
    b = rem;
    QPoly u2 = qpoly_sub(u0, qpoly_mul(q, u1));
    QPoly v2 = qpoly_sub(v0, qpoly_mul(q, v1));
    u0 = u1;
    v0 = v1;
    u1 = u2;
    v1 = v2;
  }
  // normalize to monic gcd
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  for (auto& c : u0) c /= lead;
  for (auto& c : v0) c /= lead;
  return {a, u0, v0};
}

}  // namespace

CycScalar CycScalar::rational(const Rational& q, long order) {
  std::vector<Rational> coeffs(euler_phi(order), Rational(0));
  Rational qq = q;
  qq.canonicalize();
  coeffs[0] = qq;
  return CycScalar(order, std::move(coeffs));
}

CycScalar CycScalar::zeta_pow(long order, long k) {
  k %= order;
  if (k < 0) k += order;
  QPoly p(k + 1, Rational(0));
  p[k] = 1;
  reduce_mod_cyclotomic(p, order);
  return CycScalar(order, std::move(p));
}

CycScalar::CycScalar(long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  internal_check(static_cast<long>(coeffs_.size()) == euler_phi(order_),
                 "CycScalar: coefficient count must equal phi(order)");
  reduce_();
}

void CycScalar::reduce_() {
  for (auto& c : coeffs_) c.canonicalize();
}

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CycScalar::to_rational() const {
  if (!is_rational()) throw PreconditionError("CycScalar: value is not rational: " + str());
  return coeffs_[0];
}

CycScalar CycScalar::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return CycScalar(order_, std::move(out));
}

CycScalar CycScalar::operator+(const CycScalar& rhs) const {
  if (order_ != rhs.order_) {
    auto [a, b] = align_orders(*this, rhs);
    return a + b;
  }
  std::vector<Rational> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] + rhs.coeffs_[i];
  return CycScalar(order_, std::move(out));
}

CycScalar CycScalar::operator-(const CycScalar& rhs) const { return *this + (-rhs); }

CycScalar CycScalar::operator*(const CycScalar& rhs) const {
  if (order_ != rhs.order_) {
    auto [a, b] = align_orders(*this, rhs);
    return a * b;
  }
  QPoly prod = qpoly_mul(coeffs_, rhs.coeffs_);
  reduce_mod_cyclotomic(prod, order_);
  return CycScalar(order_, std::move(prod));
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw PreconditionError("CycScalar: division by zero");
  if (is_rational()) {
    return CycScalar::rational(Rational(coeffs_[0].get_den(), coeffs_[0].get_num()), order_);
  }
  const ZPoly& phiz = cyclotomic_polynomial(order_);
  QPoly phi(phiz.size());
  for (size_t i = 0; i < phiz.size(); ++i) phi[i] = Rational(phiz[i]);
  QPoly a = coeffs_;
  qpoly_trim(a);
  ExtGcd e = qpoly_ext_gcd(a, phi);
  internal_check(e.g.size() == 1 && e.g[0] == 1,
                 "CycScalar: element not invertible mod cyclotomic polynomial");
  QPoly inv = e.u;
  reduce_mod_cyclotomic(inv, order_);
  return CycScalar(order_, std::move(inv));
}

CycScalar CycScalar::operator/(const CycScalar& rhs) const { return *this * rhs.inverse(); }

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar base = *this;
  CycScalar acc = CycScalar::one(order_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool CycScalar::operator==(const CycScalar& rhs) const {
  if (order_ != rhs.order_) {
    auto [a, b] = align_orders(*this, rhs);
    return a == b;
  }
  return coeffs_ == rhs.coeffs_;
}

CycScalar CycScalar::embed(long new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw PreconditionError("CycScalar::embed: " + std::to_string(order_) +
                            " does not divide " + std::to_string(new_order));
  long step = new_order / order_;
  QPoly out(euler_phi(new_order) + static_cast<size_t>(step) * coeffs_.size(), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i * step] = coeffs_[i];
  reduce_mod_cyclotomic(out, new_order);
  return CycScalar(new_order, std::move(out));
}

size_t CycScalar::height() const {
  size_t h = 0;
  for (const auto& c : coeffs_) {
    h += mpz_size(c.get_num().get_mpz_t());
    h += mpz_size(c.get_den().get_mpz_t());
  }
  return h;
}

std::string CycScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (abs_c == 1);
    if (i == 0) {
      os << abs_c.get_str();
    } else {
      if (!unit) os << abs_c.get_str() << "*";
      os << "zeta" << order_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.str(); }

std::pair<CycScalar, CycScalar> align_orders(const CycScalar& a, const CycScalar& b) {
  long n = lcm_long(a.order(), b.order());
  return {a.embed(n), b.embed(n)};
}

}  // namespace alia
