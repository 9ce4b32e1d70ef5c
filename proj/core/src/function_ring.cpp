#include "alia/function_ring.hpp"

#include <algorithm>
#include <sstream>

#include "alia/errors.hpp"

namespace alia {

Poly::Poly(long order, std::vector<CycScalar> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, CycScalar::zero(order_));
  trim_();
}

void Poly::trim_() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const CycScalar& c) { return Poly(c.order(), {c}); }

Poly Poly::z(long order) {
  return Poly(order, {CycScalar::zero(order), CycScalar::one(order)});
}

Poly Poly::linear_root(const CycScalar& root) {
  return Poly(root.order(), {-root, CycScalar::one(root.order())});
}

bool Poly::is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

Poly Poly::operator+(const Poly& rhs) const {
  std::vector<CycScalar> out(std::max(coeffs_.size(), rhs.coeffs_.size()),
                             CycScalar::zero(order_));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] = out[i] + rhs.coeffs_[i];
  return Poly(order_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator-() const {
  std::vector<CycScalar> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Poly(order_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
  if (is_zero() || rhs.is_zero()) return Poly(order_);
  std::vector<CycScalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, CycScalar::zero(order_));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Poly(order_, std::move(out));
}

Poly Poly::operator*(const CycScalar& c) const {
  std::vector<CycScalar> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
  return Poly(order_, std::move(out));
}

bool Poly::operator==(const Poly& rhs) const {
  if (coeffs_.size() != rhs.coeffs_.size()) return false;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != rhs.coeffs_[i]) return false;
  return true;
}

Poly Poly::divmod(const Poly& den, Poly& rem) const {
  internal_check(!den.is_zero(), "Poly::divmod: division by zero polynomial");
  std::vector<CycScalar> r = coeffs_;
  long dd = den.degree();
  CycScalar lead_inv = den.lead().inverse();
  std::vector<CycScalar> q(std::max<long>(degree() - dd + 1, 1), CycScalar::zero(order_));
  for (long k = degree(); k >= dd; --k) {
    if (r[k].is_zero()) continue;
    CycScalar c = r[k] * lead_inv;
    q[k - dd] = c;
    for (long i = 0; i <= dd; ++i) r[k - dd + i] = r[k - dd + i] - c * den.coeffs()[i];
  }
  rem = Poly(order_, std::move(r));
  return Poly(order_, std::move(q));
}

Poly Poly::divide_exact(const Poly& den) const {
  Poly rem(order_);
  Poly q = divmod(den, rem);
  internal_check(rem.is_zero(), "Poly::divide_exact: nonzero remainder");
  return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly rem(x.order());
    x.divmod(y, rem);
    x = y;
    y = rem;
  }
  if (x.is_zero()) return x;
  return x.monic();
}

Poly Poly::derivative() const {
  if (degree() == 0) return Poly(order_);
  std::vector<CycScalar> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * CycScalar::integer(static_cast<long>(i), order_);
  return Poly(order_, std::move(out));
}

Poly Poly::pow(long e) const {
  internal_check(e >= 0, "Poly::pow: negative exponent");
  Poly acc = Poly::constant(CycScalar::one(order_));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::monic() const {
  internal_check(!is_zero(), "Poly::monic: zero polynomial");
  return *this * lead().inverse();
}

Poly Poly::shift(const CycScalar& c) const {
  // Horner: p(z + c)
  Poly acc(order_);
  Poly lin(order_, {c, CycScalar::one(order_)});
  for (long k = degree(); k >= 0; --k) {
    acc = acc * lin;
    acc = acc + Poly::constant(coeffs_[k]);
  }
  return acc;
}

CycScalar Poly::eval(const CycScalar& x) const {
  CycScalar acc = CycScalar::zero(order_);
  for (long k = degree(); k >= 0; --k) acc = acc * x + coeffs_[k];
  return acc;
}

Poly Poly::embed(long new_order) const {
  std::vector<CycScalar> out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].embed(new_order);
  return Poly(new_order, std::move(out));
}

Poly Poly::mobius_substitute(const CycScalar& a, const CycScalar& b, const CycScalar& c,
                             const CycScalar& d) const {
  Poly top(order_, {b, a});     // a z + b
  Poly bottom(order_, {d, c});  // c z + d
  Poly acc(order_);
  // sum p_k (az+b)^k (cz+d)^(deg-k)
  Poly top_pow = Poly::constant(CycScalar::one(order_));
  std::vector<Poly> bottom_pows;
  bottom_pows.push_back(Poly::constant(CycScalar::one(order_)));
  for (long k = 1; k <= degree(); ++k) bottom_pows.push_back(bottom_pows.back() * bottom);
  for (long k = 0; k <= degree(); ++k) {
    if (!coeffs_[k].is_zero()) acc = acc + top_pow * bottom_pows[degree() - k] * coeffs_[k];
    if (k < degree()) top_pow = top_pow * top;
  }
  return acc;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = 0; k <= degree(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[k].str() << ")";
    if (k == 1) os << "*z";
    if (k > 1) os << "*z^" << k;
  }
  return os.str();
}

const CycScalar& SpherePoint::value() const {
  if (!finite_) throw PreconditionError("SpherePoint: infinity has no finite value");
  return value_;
}

bool SpherePoint::operator==(const SpherePoint& rhs) const {
  if (finite_ != rhs.finite_) return false;
  if (!finite_) return true;
  return value_ == rhs.value_;
}

SpherePoint SpherePoint::embed(long new_order) const {
  if (!finite_) return *this;
  return SpherePoint::finite(value_.embed(new_order));
}

std::string SpherePoint::str() const { return finite_ ? value_.str() : "inf"; }

SpherePoint mobius_apply(const ExactMatrix& gamma, const SpherePoint& x) {
  internal_check(gamma.rows() == 2 && gamma.cols() == 2, "mobius_apply: 2x2 matrix required");
  long n = gamma.order();
  CycScalar p, q;  // homogeneous coordinates of x
  if (x.is_infinity()) {
    p = CycScalar::one(n);
    q = CycScalar::zero(n);
  } else {
    p = x.value().embed(n);
    q = CycScalar::one(n);
  }
  CycScalar top = gamma.at(0, 0) * p + gamma.at(0, 1) * q;
  CycScalar bottom = gamma.at(1, 0) * p + gamma.at(1, 1) * q;
  if (bottom.is_zero()) {
    if (top.is_zero()) throw PreconditionError("mobius_apply: singular matrix");
    return SpherePoint::infinity();
  }
  return SpherePoint::finite(top / bottom);
}

RationalFunction RationalFunction::make(Poly num, Poly den, std::vector<SpherePoint> pole_set) {
  if (den.is_zero()) throw PreconditionError("RationalFunction: zero denominator");
  long order = num.order();
  if (num.is_zero()) {
    RationalFunction f;
    f.num_ = Poly(order);
    f.den_ = Poly::constant(CycScalar::one(order));
    f.pole_set_ = std::move(pole_set);
    return f;
  }
  Poly g = Poly::gcd(num, den);
  if (g.degree() > 0) {
    num = num.divide_exact(g);
    den = den.divide_exact(g);
  }
  CycScalar lead = den.lead();
  den = den.monic();
  num = num * lead.inverse();

  // every root of den must lie in the pole set
  Poly rest = den;
  bool progressed = true;
  while (rest.degree() > 0 && progressed) {
    progressed = false;
    for (const auto& p : pole_set) {
      if (p.is_infinity()) continue;
      Poly lin = Poly::linear_root(p.value().embed(order));
      Poly rem(order);
      Poly q = rest.divmod(lin, rem);
      if (rem.is_zero()) {
        rest = q;
        progressed = true;
        break;
      }
    }
  }
  if (rest.degree() > 0)
    throw PreconditionError("RationalFunction: denominator has a root outside the pole set: " +
                            den.str());
  bool has_infinity = false;
  for (const auto& p : pole_set)
    if (p.is_infinity()) has_infinity = true;
  if (!has_infinity && num.degree() > den.degree())
    throw PreconditionError("RationalFunction: pole at infinity but infinity not in pole set");

  RationalFunction f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  f.pole_set_ = std::move(pole_set);
  return f;
}

RationalFunction RationalFunction::polynomial(Poly p, std::vector<SpherePoint> pole_set) {
  long order = p.order();
  return make(std::move(p), Poly::constant(CycScalar::one(order)), std::move(pole_set));
}

RationalFunction RationalFunction::constant(const CycScalar& c,
                                            std::vector<SpherePoint> pole_set) {
  return polynomial(Poly::constant(c), std::move(pole_set));
}

namespace {
std::vector<SpherePoint> merge_pole_sets(const std::vector<SpherePoint>& a,
                                         const std::vector<SpherePoint>& b) {
  std::vector<SpherePoint> out = a;
  for (const auto& p : b) {
    bool found = false;
    for (const auto& q : out)
      if (p == q) found = true;
    if (!found) out.push_back(p);
  }
  return out;
}
}  // namespace

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return make(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_,
              merge_pole_sets(pole_set_, rhs.pole_set_));
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
  return *this + (-rhs);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -f.num_;
  return f;
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return make(num_ * rhs.num_, den_ * rhs.den_, merge_pole_sets(pole_set_, rhs.pole_set_));
}

RationalFunction RationalFunction::operator*(const CycScalar& c) const {
  RationalFunction f = *this;
  f.num_ = f.num_ * c;
  return f;
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  if (rhs.is_zero()) throw PreconditionError("RationalFunction: division by zero");
  return make(num_ * rhs.den_, den_ * rhs.num_, merge_pole_sets(pole_set_, rhs.pole_set_));
}

bool RationalFunction::operator==(const RationalFunction& rhs) const {
  return num_ == rhs.num_ && den_ == rhs.den_;
}

RationalFunction RationalFunction::derivative() const {
  return make(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_, pole_set_);
}

CycScalar RationalFunction::eval(const SpherePoint& x) const {
  long order = num_.order();
  if (x.is_infinity()) {
    if (num_.degree() > den_.degree())
      throw PreconditionError("RationalFunction::eval: pole at infinity");
    if (num_.degree() < den_.degree()) return CycScalar::zero(order);
    return num_.lead() / den_.lead();
  }
  CycScalar xv = x.value().embed(order);
  CycScalar d = den_.eval(xv);
  if (d.is_zero()) throw PreconditionError("RationalFunction::eval: point is a pole");
  return num_.eval(xv) / d;
}

RationalFunction RationalFunction::embed(long new_order) const {
  RationalFunction f;
  f.num_ = num_.embed(new_order);
  f.den_ = den_.embed(new_order);
  for (const auto& p : pole_set_) f.pole_set_.push_back(p.embed(new_order));
  return f;
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Jet taylor_jet(const RationalFunction& f, const SpherePoint& x0, long m) {
  if (x0.is_infinity())
    throw PreconditionError("taylor_jet: base point at infinity; apply a Moebius change first");
  internal_check(m >= 1, "taylor_jet: need m >= 1");
  long order = f.order();
  CycScalar x = x0.value().embed(order);
  Poly p = f.num().shift(x);
  Poly q = f.den().shift(x);
  if (q.coeff(0).is_zero()) throw PreconditionError("taylor_jet: base point is a pole");
  // power series division p/q up to order m
  std::vector<CycScalar> c(m, CycScalar::zero(order));
  CycScalar q0_inv = q.coeff(0).inverse();
  for (long k = 0; k < m; ++k) {
    CycScalar acc = k <= p.degree() ? p.coeff(k) : CycScalar::zero(order);
    for (long i = 1; i <= std::min<long>(k, q.degree()); ++i) acc -= q.coeff(i) * c[k - i];
    c[k] = acc * q0_inv;
  }
  return Jet{x0, std::move(c)};
}

Jet taylor_jet_in_chart(const RationalFunction& f, const ExactMatrix& chart, long m) {
  RationalFunction g = mobius_pullback(f, chart);
  return taylor_jet(g, SpherePoint::finite(CycScalar::zero(g.order())), m);
}

ExactMatrix jet_toeplitz(const Jet& jet, long m) {
  long order = jet.coeffs.empty() ? 1 : jet.coeffs[0].order();
  ExactMatrix out(m, m, order);
  for (long i = 0; i < m; ++i)
    for (long k = 0; i + k < m; ++k)
      if (k < static_cast<long>(jet.coeffs.size())) out.at(i, i + k) = jet.coeffs[k];
  return out;
}

ExactMatrix jordan_eval(const RationalFunction& f, const SpherePoint& x, long m) {
  return jet_toeplitz(taylor_jet(f, x, m), m);
}

long hom_dimension(const SpherePoint& x, long i, const SpherePoint& x2, long j,
                   const std::vector<SpherePoint>& pole_set, long order) {
  internal_check(i >= 1 && j >= 1, "hom_dimension: dimensions must be positive");
  // generators of the ring: z when infinity is a pole, and (z-e)^-1 for the
  // finite poles e
  std::vector<RationalFunction> gens;
  bool has_inf = false;
  for (const auto& p : pole_set)
    if (p.is_infinity()) has_inf = true;
  if (has_inf)
    gens.push_back(RationalFunction::polynomial(Poly::z(order), pole_set));
  for (const auto& p : pole_set) {
    if (p.is_infinity()) continue;
    gens.push_back(RationalFunction::make(Poly::constant(CycScalar::one(order)),
                                          Poly::linear_root(p.value().embed(order)), pole_set));
  }
  internal_check(!gens.empty(), "hom_dimension: pole set generates no functions");
  // theta rho1(g) = rho2(g) theta, theta j x i
  std::vector<CycVector> rows;
  ExactMatrix stacked(static_cast<long>(gens.size()) * i * j, i * j, order);
  long r0 = 0;
  for (const auto& g : gens) {
    ExactMatrix m1 = jordan_eval(g, x, i);
    ExactMatrix m2 = jordan_eval(g, x2, j);
    ExactMatrix cond =
        m1.transpose().kron(ExactMatrix::identity(j, order)) -
        ExactMatrix::identity(i, order).kron(m2);
    for (long r = 0; r < cond.rows(); ++r)
      for (long c = 0; c < cond.cols(); ++c) stacked.at(r0 + r, c) = cond.at(r, c);
    r0 += cond.rows();
  }
  return static_cast<long>(stacked.kernel_basis().size());
}

long hom_dimension(const SpherePoint& x, long i, const SpherePoint& x2, long j) {
  long order = 1;
  if (!x.is_infinity()) order = lcm_long(order, x.value().order());
  if (!x2.is_infinity()) order = lcm_long(order, x2.value().order());
  return hom_dimension(x, i, x2, j, {SpherePoint::infinity()}, order);
}

RationalFunction hermite_interpolate(const std::vector<std::pair<SpherePoint, CycScalar>>& points,
                                     long m, const std::vector<SpherePoint>& pole_set) {
  internal_check(m >= 0, "hermite_interpolate: m >= 0");
  bool has_inf = false;
  for (const auto& p : pole_set)
    if (p.is_infinity()) has_inf = true;
  if (!has_inf)
    throw PreconditionError(
        "hermite_interpolate: infinity must be in the pole set (polynomial construction)");
  long order = 1;
  for (const auto& [p, c] : points) {
    if (p.is_infinity()) throw PreconditionError("hermite_interpolate: points must be finite");
    order = lcm_long(order, lcm_long(p.value().order(), c.order()));
  }
  for (size_t a = 0; a < points.size(); ++a)
    for (size_t b = a + 1; b < points.size(); ++b)
      if (points[a].first == points[b].first)
        throw PreconditionError("hermite_interpolate: duplicate interpolation points");

  // f = sum_i  c_i / (m! prod_{j != i} (z_i - z_j)^(m+1)) (z - z_i)^m prod_{j != i} (z - z_j)^(m+1)
  Rational mfact(1);
  for (long k = 2; k <= m; ++k) mfact *= k;
  Poly f(order);
  for (size_t a = 0; a < points.size(); ++a) {
    CycScalar za = points[a].first.value().embed(order);
    CycScalar ca = points[a].second.embed(order);
    Poly term = Poly::linear_root(za).pow(m);
    CycScalar denom = CycScalar::rational(mfact, order);
    for (size_t b = 0; b < points.size(); ++b) {
      if (b == a) continue;
      CycScalar zb = points[b].first.value().embed(order);
      term = term * Poly::linear_root(zb).pow(m + 1);
      denom *= (za - zb).pow(m + 1);
    }
    f = f + term * (ca / denom);
  }
  return RationalFunction::polynomial(f, pole_set);
}

RationalFunction mobius_pullback(const RationalFunction& f, const ExactMatrix& gamma) {
  internal_check(gamma.rows() == 2 && gamma.cols() == 2, "mobius_pullback: 2x2 matrix");
  long order = lcm_long(f.order(), gamma.order());
  ExactMatrix g = gamma.embed(order);
  if (g.det().is_zero()) throw PreconditionError("mobius_pullback: singular Moebius matrix");
  ExactMatrix gi = g.inverse();
  const CycScalar &a = gi.at(0, 0), &b = gi.at(0, 1), &c = gi.at(1, 0), &d = gi.at(1, 1);
  Poly num = f.num().embed(order);
  Poly den = f.den().embed(order);
  Poly top = num.mobius_substitute(a, b, c, d);
  Poly bottom = den.mobius_substitute(a, b, c, d);
  // homogenization balance: multiply by (cz+d)^(deg difference)
  Poly cz_d(order, {d, c});
  long dn = num.degree(), dd = den.degree();
  if (dn > dd)
    bottom = bottom * cz_d.pow(dn - dd);
  else if (dd > dn)
    top = top * cz_d.pow(dd - dn);
  std::vector<SpherePoint> new_poles;
  for (const auto& p : f.pole_set()) new_poles.push_back(mobius_apply(g, p.embed(order)));
  return RationalFunction::make(std::move(top), std::move(bottom), std::move(new_poles));
}

ExactMatrix mobius_normalize(const ExactMatrix& gamma) {
  internal_check(gamma.rows() == 2 && gamma.cols() == 2, "mobius_normalize: 2x2 matrix");
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) {
      if (!gamma.at(i, j).is_zero()) {
        return gamma * gamma.at(i, j).inverse();
      }
    }
  throw PreconditionError("mobius_normalize: zero matrix");
}

long mobius_order(const ExactMatrix& gamma, long cap) {
  ExactMatrix id = ExactMatrix::identity(2, gamma.order());
  ExactMatrix acc = mobius_normalize(gamma);
  for (long k = 1; k <= cap; ++k) {
    if (mobius_normalize(acc).is_identity()) return k;
    acc = acc * gamma;
  }
  throw PreconditionError("mobius_order: order exceeds cap (map may have infinite order)");
}

LinearChart linearizing_coordinate(const SpherePoint& x0, const ExactMatrix& gamma0) {
  if (x0.is_infinity())
    throw PreconditionError(
        "linearizing_coordinate: base point at infinity; apply a Moebius change first");
  long order = lcm_long(gamma0.order(), x0.value().order());
  ExactMatrix g = gamma0.embed(order);
  CycScalar x = x0.value().embed(order);
  if (mobius_apply(g, SpherePoint::finite(x)) != SpherePoint::finite(x))
    throw PreconditionError("linearizing_coordinate: gamma0 does not fix x0");
  long nu0 = mobius_order(g);
  if (nu0 == 1) {
    ExactMatrix chart = ExactMatrix::identity(2, order);
    chart.at(0, 1) = -x;
    return LinearChart{chart, CycScalar::one(order), 1};
  }
  // left eigenvectors of M = mat(gamma0^-1): r1 = (1, -x0) with eigenvalue
  // l1; the second eigenvector (a, b) has eigenvalue l2 = tr - l1, and the
  // chart z = (x - x0)/(a x + b) conjugates gamma0 to multiplication by
  // zeta = l2 / l1.
  ExactMatrix m = g.inverse();
  CycScalar l1 = m.at(0, 0) - x * m.at(1, 0);  // first component of r1 * M
  {
    // consistency: r1 M = l1 r1
    CycScalar second = m.at(0, 1) - x * m.at(1, 1);
    internal_check(second == l1 * (-x), "linearizing_coordinate: r1 is not a left eigenvector");
  }
  CycScalar l2 = m.trace() - l1;
  internal_check(l1 != l2, "linearizing_coordinate: defective multiplier (parabolic map?)");
  // (a, b) (M - l2) = 0  <=>  (M - l2)^T (a, b)^T = 0
  ExactMatrix mt = m.transpose();
  mt.at(0, 0) -= l2;
  mt.at(1, 1) -= l2;
  auto ker = mt.kernel_basis();
  internal_check(ker.size() == 1, "linearizing_coordinate: eigenvector solve failed");
  CycScalar a = ker[0][0], b = ker[0][1];
  internal_check(!(a * x + b).is_zero(), "linearizing_coordinate: chart degenerate at x0");
  CycScalar zeta = l2 / l1;
  // primitivity check
  CycScalar acc = zeta;
  for (long k = 1; k < nu0; ++k) {
    internal_check(!acc.is_one(), "linearizing_coordinate: multiplier not primitive");
    acc *= zeta;
  }
  internal_check(acc.is_one(), "linearizing_coordinate: multiplier order mismatch");
  ExactMatrix chart(2, 2, order);
  chart.at(0, 0) = CycScalar::one(order);
  chart.at(0, 1) = -x;
  chart.at(1, 0) = a;
  chart.at(1, 1) = b;
  return LinearChart{chart, zeta, nu0};
}

}  // namespace alia
