#include "alia/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "alia/errors.hpp"

namespace alia {

CycVector vec_add(const CycVector& a, const CycVector& b) {
  internal_check(a.size() == b.size(), "vec_add: size mismatch");
  CycVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

CycVector vec_sub(const CycVector& a, const CycVector& b) {
  internal_check(a.size() == b.size(), "vec_sub: size mismatch");
  CycVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

CycVector vec_scale(const CycScalar& c, const CycVector& v) {
  CycVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool vec_is_zero(const CycVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix::ExactMatrix(long rows, long cols, long order)
    : rows_(rows), cols_(cols), order_(order),
      data_(static_cast<size_t>(rows) * cols, CycScalar::zero(order)) {}

ExactMatrix ExactMatrix::identity(long n, long order) {
  ExactMatrix m(n, n, order);
  for (long i = 0; i < n; ++i) m.at(i, i) = CycScalar::one(order);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<CycVector>& rows, long order) {
  long r = static_cast<long>(rows.size());
  long c = r > 0 ? static_cast<long>(rows[0].size()) : 0;
  ExactMatrix m(r, c, order);
  for (long i = 0; i < r; ++i) {
    internal_check(static_cast<long>(rows[i].size()) == c, "from_rows: ragged rows");
    for (long j = 0; j < c; ++j) m.at(i, j) = rows[i][j].embed(order);
  }
  return m;
}

ExactMatrix ExactMatrix::column(const CycVector& v) {
  internal_check(!v.empty(), "column: empty vector");
  ExactMatrix m(static_cast<long>(v.size()), 1, v[0].order());
  for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<long>(i), 0) = v[i];
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  internal_check(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix add: shape mismatch");
  ExactMatrix out(rows_, cols_, order_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
  internal_check(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix sub: shape mismatch");
  ExactMatrix out(rows_, cols_, order_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  internal_check(cols_ == rhs.rows_, "matrix mul: shape mismatch");
  ExactMatrix out(rows_, rhs.cols_, order_);
  for (long i = 0; i < rows_; ++i) {
    for (long k = 0; k < cols_; ++k) {
      const CycScalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (long j = 0; j < rhs.cols_; ++j) {
        const CycScalar& b = rhs.at(k, j);
        if (b.is_zero()) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator*(const CycScalar& c) const {
  ExactMatrix out(rows_, cols_, order_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != rhs.data_[i]) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_, order_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

ExactMatrix ExactMatrix::pow(long e) const {
  internal_check(rows_ == cols_, "matrix pow: square only");
  if (e < 0) return inverse().pow(-e);
  ExactMatrix base = *this;
  ExactMatrix acc = identity(rows_, order_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

ExactMatrix ExactMatrix::embed(long new_order) const {
  ExactMatrix out(rows_, cols_, new_order);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).embed(new_order);
  return out;
}

CycScalar ExactMatrix::trace() const {
  internal_check(rows_ == cols_, "trace: square only");
  CycScalar t = CycScalar::zero(order_);
  for (long i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

CycVector ExactMatrix::apply(const CycVector& v) const {
  internal_check(static_cast<long>(v.size()) == cols_, "apply: size mismatch");
  CycVector out(rows_, CycScalar::zero(order_));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  return out;
}

CycVector ExactMatrix::row(long i) const {
  CycVector out(cols_, CycScalar::zero(order_));
  for (long j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

CycVector ExactMatrix::col(long j) const {
  CycVector out(rows_, CycScalar::zero(order_));
  for (long i = 0; i < rows_; ++i) out[i] = at(i, j);
  return out;
}

ExactMatrix ExactMatrix::rref(std::vector<long>* pivots) const {
  ExactMatrix m = *this;
  if (pivots) pivots->clear();
  long r = 0;
  for (long c = 0; c < cols_ && r < rows_; ++c) {
    // pick the nonzero entry of least height as pivot
    long best = -1;
    size_t best_h = 0;
    for (long i = r; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      size_t h = m.at(i, c).height();
      if (best < 0 || h < best_h) {
        best = i;
        best_h = h;
      }
    }
    if (best < 0) continue;
    if (best != r)
      for (long j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(best, j));
    CycScalar inv = m.at(r, c).inverse();
    for (long j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (long i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      CycScalar f = m.at(i, c);
      for (long j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

long ExactMatrix::rank() const {
  std::vector<long> pivots;
  rref(&pivots);
  return static_cast<long>(pivots.size());
}

CycScalar ExactMatrix::det() const {
  internal_check(rows_ == cols_, "det: square only");
  ExactMatrix m = *this;
  CycScalar d = CycScalar::one(order_);
  for (long c = 0; c < cols_; ++c) {
    long best = -1;
    size_t best_h = 0;
    for (long i = c; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      size_t h = m.at(i, c).height();
      if (best < 0 || h < best_h) {
        best = i;
        best_h = h;
      }
    }
    if (best < 0) return CycScalar::zero(order_);
    if (best != c) {
      for (long j = 0; j < cols_; ++j) std::swap(m.at(c, j), m.at(best, j));
      d = -d;
    }
    d *= m.at(c, c);
    CycScalar inv = m.at(c, c).inverse();
    for (long i = c + 1; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      CycScalar f = m.at(i, c) * inv;
      for (long j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
    }
  }
  return d;
}

ExactMatrix ExactMatrix::inverse() const {
  internal_check(rows_ == cols_, "inverse: square only");
  ExactMatrix aug(rows_, 2 * cols_, order_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = CycScalar::one(order_);
  }
  std::vector<long> pivots;
  ExactMatrix red = aug.rref(&pivots);
  if (static_cast<long>(pivots.size()) != rows_ || (rows_ > 0 && pivots.back() >= cols_))
    throw PreconditionError("ExactMatrix::inverse: singular matrix");
  ExactMatrix out(rows_, cols_, order_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) out.at(i, j) = red.at(i, cols_ + j);
  return out;
}

std::vector<CycVector> ExactMatrix::kernel_basis() const {
  std::vector<long> pivots;
  ExactMatrix red = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (long p : pivots) is_pivot[p] = true;
  std::vector<CycVector> basis;
  for (long c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    CycVector v(cols_, CycScalar::zero(order_));
    v[c] = CycScalar::one(order_);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(static_cast<long>(r), c);
    basis.push_back(std::move(v));
  }
  internal_check(static_cast<long>(pivots.size() + basis.size()) == cols_,
                 "kernel_basis: rank-nullity violated");
  return basis;
}

CycVector ExactMatrix::solve(const CycVector& b) const {
  internal_check(static_cast<long>(b.size()) == rows_, "solve: rhs size mismatch");
  ExactMatrix aug(rows_, cols_ + 1, order_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i].embed(order_);
  }
  std::vector<long> pivots;
  ExactMatrix red = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == cols_)
    throw PreconditionError("ExactMatrix::solve: inconsistent system");
  CycVector x(cols_, CycScalar::zero(order_));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red.at(static_cast<long>(r), cols_);
  return x;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& rhs) const {
  ExactMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_, order_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (long k = 0; k < rhs.rows_; ++k)
        for (long l = 0; l < rhs.cols_; ++l) {
          if (rhs.at(k, l).is_zero()) continue;
          out.at(i * rhs.rows_ + k, j * rhs.cols_ + l) = at(i, j) * rhs.at(k, l);
        }
    }
  return out;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  for (long i = 0; i < rows_; ++i) {
    os << "[";
    for (long j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]\n";
  }
  return os.str();
}

std::vector<ExactMatrix> eigenprojectors(const ExactMatrix& A, long nu) {
  long n = A.order();
  if (n % nu != 0)
    throw PreconditionError("eigenprojectors: field order " + std::to_string(n) +
                            " does not contain a primitive root of order " + std::to_string(nu));
  return eigenprojectors(A, nu, CycScalar::zeta_pow(n, n / nu));
}

std::vector<ExactMatrix> eigenprojectors(const ExactMatrix& A, long nu, const CycScalar& zeta) {
  internal_check(A.rows() == A.cols(), "eigenprojectors: square only");
  internal_check(nu >= 1, "eigenprojectors: order must be positive");
  std::vector<ExactMatrix> powers;
  powers.push_back(ExactMatrix::identity(A.rows(), A.order()));
  for (long k = 1; k < nu; ++k) powers.push_back(powers.back() * A);
  if (!(powers.back() * A).is_identity())
    throw PreconditionError("eigenprojectors: A^nu != id (operator not of finite order nu)");
  CycScalar inv_nu = CycScalar::rational(Rational(1, nu), A.order());
  std::vector<ExactMatrix> projectors;
  for (long m = 0; m < nu; ++m) {
    ExactMatrix P(A.rows(), A.cols(), A.order());
    for (long k = 0; k < nu; ++k) {
      CycScalar w = zeta.embed(A.order()).pow(-m * k);
      P = P + powers[k] * w;
    }
    projectors.push_back(P * inv_nu);
  }
  return projectors;
}

std::vector<CycVector> echelon_span(const std::vector<CycVector>& vectors, long dim, long order) {
  if (vectors.empty()) return {};
  ExactMatrix m = ExactMatrix::from_rows(vectors, order);
  internal_check(m.cols() == dim, "echelon_span: dimension mismatch");
  std::vector<long> pivots;
  ExactMatrix red = m.rref(&pivots);
  std::vector<CycVector> out;
  for (size_t r = 0; r < pivots.size(); ++r) out.push_back(red.row(static_cast<long>(r)));
  return out;
}

bool same_span(const std::vector<CycVector>& a, const std::vector<CycVector>& b, long dim,
               long order) {
  auto ea = echelon_span(a, dim, order);
  auto eb = echelon_span(b, dim, order);
  if (ea.size() != eb.size()) return false;
  for (size_t i = 0; i < ea.size(); ++i)
    for (long j = 0; j < dim; ++j)
      if (ea[i][j] != eb[i][j]) return false;
  return true;
}

bool in_span(const std::vector<CycVector>& echelon_basis, const CycVector& v, long order) {
  CycVector r = v;
  for (const auto& e : echelon_basis) {
    long pivot = -1;
    for (size_t j = 0; j < e.size(); ++j)
      if (!e[j].is_zero()) {
        pivot = static_cast<long>(j);
        break;
      }
    if (pivot < 0) continue;
    if (!r[pivot].is_zero()) {
      CycScalar f = r[pivot] / e[pivot];
      for (size_t j = 0; j < r.size(); ++j) r[j] = r[j] - f * e[j].embed(order);
    }
  }
  return vec_is_zero(r);
}

std::vector<CycVector> span_intersection(const std::vector<CycVector>& a,
                                         const std::vector<CycVector>& b, long dim, long order) {
  if (a.empty() || b.empty()) return {};
  // Null-space trick: rows of [A; B], intersection vectors are x = u A = -v B
  // for (u, v) in the kernel of [A^T B^T].
  ExactMatrix A = ExactMatrix::from_rows(a, order);
  ExactMatrix B = ExactMatrix::from_rows(b, order);
  long ra = A.rows(), rb = B.rows();
  ExactMatrix stacked(dim, ra + rb, order);
  for (long j = 0; j < dim; ++j) {
    for (long i = 0; i < ra; ++i) stacked.at(j, i) = A.at(i, j);
    for (long i = 0; i < rb; ++i) stacked.at(j, ra + i) = B.at(i, j);
  }
  std::vector<CycVector> combos = stacked.kernel_basis();
  std::vector<CycVector> inter;
  for (const auto& c : combos) {
    CycVector v(dim, CycScalar::zero(order));
    for (long i = 0; i < ra; ++i)
      if (!c[i].is_zero()) v = vec_add(v, vec_scale(c[i], A.row(i)));
    if (!vec_is_zero(v)) inter.push_back(std::move(v));
  }
  return echelon_span(inter, dim, order);
}

}  // namespace alia
