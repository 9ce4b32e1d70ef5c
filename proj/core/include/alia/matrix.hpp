#pragma once

#include <vector>

#include "alia/cyclotomic.hpp"

namespace alia {

using CycVector = std::vector<CycScalar>;

CycVector vec_add(const CycVector& a, const CycVector& b);
CycVector vec_sub(const CycVector& a, const CycVector& b);
CycVector vec_scale(const CycScalar& c, const CycVector& v);
bool vec_is_zero(const CycVector& v);

/// Dense matrix over a cyclotomic field. All entries share one field order.
class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0), order_(1) {}
  ExactMatrix(long rows, long cols, long order);

  static ExactMatrix identity(long n, long order);
  static ExactMatrix zero(long rows, long cols, long order) {
    return ExactMatrix(rows, cols, order);
  }
  static ExactMatrix from_rows(const std::vector<CycVector>& rows, long order);
  static ExactMatrix column(const CycVector& v);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long order() const { return order_; }

  const CycScalar& at(long i, long j) const { return data_[i * cols_ + j]; }
  CycScalar& at(long i, long j) { return data_[i * cols_ + j]; }

  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix operator-(const ExactMatrix& rhs) const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator*(const CycScalar& c) const;
  bool operator==(const ExactMatrix& rhs) const;
  bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

  ExactMatrix transpose() const;
  ExactMatrix pow(long e) const;
  ExactMatrix embed(long new_order) const;
  CycScalar trace() const;
  bool is_zero() const;
  bool is_identity() const;

  CycVector apply(const CycVector& v) const;
  CycVector row(long i) const;
  CycVector col(long j) const;

  /// Reduced row echelon form; returns pivot column indices.
  /// Pivot choice within a column prefers the entry of least height.
  ExactMatrix rref(std::vector<long>* pivots = nullptr) const;
  long rank() const;
  CycScalar det() const;
  ExactMatrix inverse() const;

  /// Basis of the right kernel; rank-nullity is checked on every call.
  std::vector<CycVector> kernel_basis() const;

  /// One solution x of A x = b; throws PreconditionError when inconsistent.
  CycVector solve(const CycVector& b) const;

  /// Kronecker product (matches tensor-product conventions of id (x) phi).
  ExactMatrix kron(const ExactMatrix& rhs) const;

  std::string str() const;

private:
  long rows_, cols_, order_;
  std::vector<CycScalar> data_;
};

/// Spectral projectors of a finite-order operator: given A with A^nu = id and
/// a primitive nu-th root zeta (in A's field), returns
///   P_m = (1/nu) sum_k zeta^(-m k) A^k,   m = 0..nu-1,
/// so that A P_m = zeta^m P_m, sum P_m = id, P_m P_m' = delta P_m.
/// Default zeta is zeta_n^(n/nu) for field order n (requires nu | n).
std::vector<ExactMatrix> eigenprojectors(const ExactMatrix& A, long nu);
std::vector<ExactMatrix> eigenprojectors(const ExactMatrix& A, long nu, const CycScalar& zeta);

/// Row-space basis in reduced echelon form (canonical for span comparison).
std::vector<CycVector> echelon_span(const std::vector<CycVector>& vectors, long dim, long order);

bool same_span(const std::vector<CycVector>& a, const std::vector<CycVector>& b, long dim,
               long order);

/// True when v lies in the span of the given echelon basis.
bool in_span(const std::vector<CycVector>& echelon_basis, const CycVector& v, long order);

/// Intersection of two spans, as an echelon basis.
std::vector<CycVector> span_intersection(const std::vector<CycVector>& a,
                                         const std::vector<CycVector>& b, long dim, long order);

}  // namespace alia
