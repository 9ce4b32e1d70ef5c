#include "alia/lie_algebra.hpp"

#include <algorithm>

#include "alia/errors.hpp"

namespace alia {

Subspace::Subspace(long ambient_dim, long order, const std::vector<CycVector>& spanning)
    : ambient_dim_(ambient_dim), order_(order) {
  basis_ = echelon_span(spanning, ambient_dim, order);
}

Subspace Subspace::full(long ambient_dim, long order) {
  std::vector<CycVector> rows;
  for (long i = 0; i < ambient_dim; ++i) {
    CycVector v(ambient_dim, CycScalar::zero(order));
    v[i] = CycScalar::one(order);
    rows.push_back(std::move(v));
  }
  return Subspace(ambient_dim, order, rows);
}

bool Subspace::contains(const CycVector& v) const { return in_span(basis_, v, order_); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_ || basis_.size() != other.basis_.size()) return false;
  for (size_t i = 0; i < basis_.size(); ++i)
    for (long j = 0; j < ambient_dim_; ++j)
      if (basis_[i][j] != other.basis_[i][j]) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<CycVector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(ambient_dim_, order_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  Subspace out;
  out.ambient_dim_ = ambient_dim_;
  out.order_ = order_;
  out.basis_ = span_intersection(basis_, other.basis_, ambient_dim_, order_);
  return out;
}

StructLieAlgebra::StructLieAlgebra(long dim, long order, std::vector<std::string> labels,
                                   StructureConstants sc, std::optional<std::vector<long>> grading,
                                   bool do_validate)
    : dim_(dim), order_(order), labels_(std::move(labels)), sc_(std::move(sc)),
      grading_(std::move(grading)) {
  internal_check(static_cast<long>(labels_.size()) == dim_, "StructLieAlgebra: label count");
  if (do_validate) validate();
}

StructLieAlgebra StructLieAlgebra::from_matrix_basis(const std::vector<ExactMatrix>& basis,
                                                     std::vector<std::string> labels, long order) {
  internal_check(!basis.empty(), "from_matrix_basis: empty basis");
  long d = static_cast<long>(basis.size());
  long n = basis[0].rows();
  // coordinates: flatten matrices, solve for commutator coefficients
  ExactMatrix flat(n * n, d, order);
  for (long b = 0; b < d; ++b)
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) flat.at(i * n + j, b) = basis[b].at(i, j).embed(order);
  internal_check(flat.rank() == d, "from_matrix_basis: basis matrices not independent");
  StructureConstants sc;
  for (long i = 0; i < d; ++i) {
    for (long j = i + 1; j < d; ++j) {
      ExactMatrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      CycVector rhs(n * n, CycScalar::zero(order));
      for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) rhs[r * n + c] = comm.at(r, c).embed(order);
      CycVector coeffs = flat.solve(rhs);
      std::vector<std::pair<long, CycScalar>> entry;
      for (long k = 0; k < d; ++k)
        if (!coeffs[k].is_zero()) entry.emplace_back(k, coeffs[k]);
      if (!entry.empty()) sc[{i, j}] = std::move(entry);
    }
  }
  return StructLieAlgebra(d, order, std::move(labels), std::move(sc));
}

void StructLieAlgebra::validate() const {
  for (const auto& [key, entry] : sc_) {
    internal_check(key.first < key.second, "structure constants must be keyed with i < j");
    internal_check(key.first >= 0 && key.second < dim_, "structure constant index range");
    for (const auto& [k, c] : entry) {
      internal_check(k >= 0 && k < dim_, "structure constant target range");
      internal_check(!c.is_zero(), "structure constants must omit zero entries");
      if (grading_) {
        internal_check((*grading_)[k] == (*grading_)[key.first] + (*grading_)[key.second],
                       "grading: [A_i, A_j] must land in degree i + j");
      }
    }
  }
  // Jacobi on all basis triples, via a dense pair table
  std::vector<std::vector<std::vector<std::pair<long, CycScalar>>>> table(
      dim_, std::vector<std::vector<std::pair<long, CycScalar>>>(dim_));
  for (const auto& [key, entry] : sc_) {
    auto [i, j] = key;
    table[i][j] = entry;
    for (const auto& [k, c] : entry) table[j][i].emplace_back(k, -c);
  }
  auto accumulate = [&](CycVector& acc, const std::vector<std::pair<long, CycScalar>>& left,
                        long k) {
    for (const auto& [t, c] : left)
      for (const auto& [u, d] : table[t][k]) acc[u] += c * d;
  };
  for (long i = 0; i < dim_; ++i)
    for (long j = i + 1; j < dim_; ++j)
      for (long k = j + 1; k < dim_; ++k) {
        CycVector s(dim_, CycScalar::zero(order_));
        accumulate(s, table[i][j], k);
        accumulate(s, table[j][k], i);
        accumulate(s, table[k][i], j);
        internal_check(vec_is_zero(s), "Jacobi identity fails on basis triple (" +
                                           std::to_string(i) + "," + std::to_string(j) + "," +
                                           std::to_string(k) + ")");
      }
}

CycVector StructLieAlgebra::basis_vector(long i) const {
  CycVector v(dim_, CycScalar::zero(order_));
  v[i] = CycScalar::one(order_);
  return v;
}

CycVector StructLieAlgebra::bracket(const CycVector& x, const CycVector& y) const {
  internal_check(static_cast<long>(x.size()) == dim_ && static_cast<long>(y.size()) == dim_,
                 "bracket: coordinate length mismatch");
  CycVector out(dim_, CycScalar::zero(order_));
  for (const auto& [key, entry] : sc_) {
    auto [i, j] = key;
    // coefficient of [b_i, b_j] in [x, y]: x_i y_j - x_j y_i
    CycScalar c = x[i] * y[j] - x[j] * y[i];
    if (c.is_zero()) continue;
    for (const auto& [k, v] : entry) out[k] += c * v;
  }
  return out;
}

ExactMatrix StructLieAlgebra::ad(const CycVector& x) const {
  ExactMatrix m(dim_, dim_, order_);
  for (long j = 0; j < dim_; ++j) {
    CycVector col = bracket(x, basis_vector(j));
    for (long i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

ExactMatrix StructLieAlgebra::killing_form() const {
  std::vector<ExactMatrix> ads;
  ads.reserve(dim_);
  for (long i = 0; i < dim_; ++i) ads.push_back(ad(basis_vector(i)));
  ExactMatrix k(dim_, dim_, order_);
  for (long i = 0; i < dim_; ++i)
    for (long j = i; j < dim_; ++j) {
      CycScalar t = (ads[i] * ads[j]).trace();
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return k;
}

Subspace StructLieAlgebra::derived_subalgebra() const {
  return bracket_span(Subspace::full(dim_, order_), Subspace::full(dim_, order_));
}

Subspace StructLieAlgebra::radical() const {
  ExactMatrix kappa = killing_form();
  Subspace derived = derived_subalgebra();
  if (derived.dim() == 0) return Subspace::full(dim_, order_);
  ExactMatrix d = ExactMatrix::from_rows(derived.basis(), order_);
  ExactMatrix cond = d * kappa;  // rows: x -> kappa(d_r, x)
  return Subspace(dim_, order_, cond.kernel_basis());
}

Subspace StructLieAlgebra::center() const {
  std::vector<CycVector> rows;
  ExactMatrix stacked(dim_ * dim_, dim_, order_);
  for (long j = 0; j < dim_; ++j) {
    ExactMatrix adj = ad(basis_vector(j));
    // x central iff [b_j, x] = 0 for all j
    for (long r = 0; r < dim_; ++r)
      for (long c = 0; c < dim_; ++c) stacked.at(j * dim_ + r, c) = adj.at(r, c);
  }
  return Subspace(dim_, order_, stacked.kernel_basis());
}

Subspace StructLieAlgebra::bracket_span(const Subspace& a, const Subspace& b) const {
  std::vector<CycVector> rows;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      CycVector z = bracket(x, y);
      if (!vec_is_zero(z)) rows.push_back(std::move(z));
    }
  return Subspace(dim_, order_, rows);
}

Subspace StructLieAlgebra::ideal_closure(const Subspace& s) const {
  Subspace cur = s;
  while (true) {
    Subspace next = cur.sum(bracket_span(Subspace::full(dim_, order_), cur));
    if (next.dim() == cur.dim()) return cur;
    cur = next;
  }
}

bool StructLieAlgebra::is_ideal(const Subspace& s) const { return ideal_closure(s) == s; }

std::vector<Subspace> StructLieAlgebra::derived_series(const Subspace& s) const {
  if (!is_ideal(s)) throw PreconditionError("derived_series: input subspace is not an ideal");
  std::vector<Subspace> chain{s};
  while (true) {
    const Subspace& cur = chain.back();
    Subspace next = bracket_span(cur, cur);
    if (next.dim() == cur.dim()) break;
    chain.push_back(next);
    if (next.dim() == 0) break;
  }
  return chain;
}

bool StructLieAlgebra::is_solvable(const Subspace& s) const {
  return derived_series(s).back().dim() == 0;
}

bool StructLieAlgebra::is_abelian(const Subspace& s) const {
  return bracket_span(s, s).dim() == 0;
}

StructLieAlgebra::Quotient StructLieAlgebra::quotient_by_ideal(const Subspace& ideal) const {
  if (!is_ideal(ideal)) throw PreconditionError("quotient_by_ideal: subspace is not an ideal");
  // pivot coordinates of the ideal get eliminated; the rest represent cosets
  std::vector<long> pivots;
  if (ideal.dim() > 0) {
    ExactMatrix m = ExactMatrix::from_rows(ideal.basis(), order_);
    m.rref(&pivots);
  }
  std::vector<bool> is_pivot(dim_, false);
  for (long p : pivots) is_pivot[p] = true;
  std::vector<long> reps;
  for (long i = 0; i < dim_; ++i)
    if (!is_pivot[i]) reps.push_back(i);
  long qdim = static_cast<long>(reps.size());

  // projection: reduce v modulo the ideal basis, then read rep coordinates
  auto project = [&](const CycVector& v) {
    CycVector r = v;
    for (size_t row = 0; row < ideal.basis().size(); ++row) {
      long p = pivots[row];
      if (!r[p].is_zero()) {
        CycScalar f = r[p];  // echelon pivots are 1
        for (long j = 0; j < dim_; ++j) r[j] = r[j] - f * ideal.basis()[row][j];
      }
    }
    CycVector out(qdim, CycScalar::zero(order_));
    for (long k = 0; k < qdim; ++k) out[k] = r[reps[k]];
    return out;
  };

  StructureConstants sc;
  for (long a = 0; a < qdim; ++a)
    for (long b = a + 1; b < qdim; ++b) {
      CycVector br = bracket(basis_vector(reps[a]), basis_vector(reps[b]));
      CycVector q = project(br);
      std::vector<std::pair<long, CycScalar>> entry;
      for (long k = 0; k < qdim; ++k)
        if (!q[k].is_zero()) entry.emplace_back(k, q[k]);
      if (!entry.empty()) sc[{a, b}] = std::move(entry);
    }
  std::vector<std::string> labels;
  for (long k = 0; k < qdim; ++k) labels.push_back(labels_[reps[k]] + "+I");
  ExactMatrix proj(qdim, dim_, order_);
  for (long j = 0; j < dim_; ++j) {
    CycVector pj = project(basis_vector(j));
    for (long i = 0; i < qdim; ++i) proj.at(i, j) = pj[i];
  }
  return Quotient{StructLieAlgebra(qdim, order_, std::move(labels), std::move(sc)), proj};
}

bool StructLieAlgebra::verify_isomorphism(const ExactMatrix& f, const StructLieAlgebra& g1,
                                          const StructLieAlgebra& g2) {
  if (g1.dim() != g2.dim()) throw PreconditionError("verify_isomorphism: dimension mismatch");
  if (f.rows() != g1.dim() || f.cols() != g1.dim())
    throw PreconditionError("verify_isomorphism: map shape mismatch");
  if (f.rank() != f.rows()) return false;
  for (long i = 0; i < g1.dim(); ++i)
    for (long j = i + 1; j < g1.dim(); ++j) {
      CycVector lhs = f.apply(g1.bracket(g1.basis_vector(i), g1.basis_vector(j)));
      CycVector rhs = g2.bracket(f.col(i), f.col(j));
      if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
    }
  return true;
}

StructLieAlgebra StructLieAlgebra::embed(long new_order) const {
  StructureConstants sc;
  for (const auto& [key, entry] : sc_) {
    std::vector<std::pair<long, CycScalar>> e;
    for (const auto& [k, c] : entry) e.emplace_back(k, c.embed(new_order));
    sc[key] = std::move(e);
  }
  return StructLieAlgebra(dim_, new_order, labels_, std::move(sc), grading_, false);
}

}  // namespace alia
