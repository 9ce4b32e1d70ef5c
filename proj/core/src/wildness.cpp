#include "alia/wildness.hpp"

#include "alia/errors.hpp"

namespace alia {

std::string lie_class_name(LieClass c) {
  switch (c) {
    case LieClass::Semisimple: return "semisimple";
    case LieClass::OneDimensional: return "one-dimensional";
    case LieClass::SemisimplePlusLine: return "ss-plus-line";
    case LieClass::Wild: return "wild";
  }
  return "?";
}

Classification makedonskii_classify(const StructLieAlgebra& g) {
  Classification out;
  out.dim = g.dim();
  Subspace rad = g.radical();
  out.radical_dim = rad.dim();
  auto chain = g.derived_series(rad);
  out.derived_series_length = static_cast<long>(chain.size());
  internal_check(chain.back().dim() == 0, "makedonskii_classify: radical is not solvable");
  out.radical_central = g.bracket_span(Subspace::full(g.dim(), g.order()), rad).dim() == 0;

  if (g.dim() == 1) {
    out.kind = LieClass::OneDimensional;
    return out;
  }
  if (out.radical_dim == 0) {
    out.kind = LieClass::Semisimple;
    return out;
  }
  if (out.radical_dim == 1 && out.radical_central) {
    // complement: the derived ideal; the shape requires g = rad (+) [g, g]
    // with the complement semisimple
    Subspace derived = g.derived_subalgebra();
    if (derived.dim() == g.dim() - 1 && rad.intersect(derived).dim() == 0) {
      auto quotient = g.quotient_by_ideal(rad);
      if (quotient.algebra.radical().dim() == 0) {
        out.kind = LieClass::SemisimplePlusLine;
        return out;
      }
    }
  }
  out.kind = LieClass::Wild;
  return out;
}

std::vector<SolvableGrowthRow> solvable_growth(const GroupAction& action, const SpherePoint& x0,
                                               long nmax, long degree_cap) {
  internal_check(nmax >= 1, "solvable_growth: nmax >= 1");
  long order = action.field_order();
  long dim = action.lie().dim();
  std::vector<SolvableGrowthRow> rows;
  for (long n = 1; n <= nmax; ++n) {
    JetQuotient q = quotient_by_jet_ideal(action, x0, n, degree_cap);
    SolvableGrowthRow row;
    row.n = n;
    row.quotient_dim = q.algebra.dim();
    // K_n: the image of I_{x0,1}, i.e. the jet-image vectors with vanishing
    // constant coefficient block
    std::vector<CycVector> k_vectors;
    {
      const auto& span = q.span_jets;
      long rank = static_cast<long>(span.size());
      ExactMatrix first_block(dim, rank, order);
      for (long i = 0; i < rank; ++i)
        for (long r = 0; r < dim; ++r) first_block.at(r, i) = span[i][r];
      for (const auto& combo : first_block.kernel_basis()) {
        CycVector jet(dim * n, CycScalar::zero(order));
        for (long i = 0; i < rank; ++i) {
          if (combo[i].is_zero()) continue;
          for (size_t t = 0; t < jet.size(); ++t) jet[t] += combo[i] * span[i][t];
        }
        if (!vec_is_zero(jet)) k_vectors.push_back(q.jet_to_coordinates(jet));
      }
    }
    Subspace K(q.algebra.dim(), order, k_vectors);
    row.solvable_ideal_dim = K.dim();
    auto chain = q.algebra.derived_series(K);
    row.derived_series_length = static_cast<long>(chain.size());
    row.solvable = chain.back().dim() == 0;
    row.quotient_class = makedonskii_classify(q.algebra);
    rows.push_back(std::move(row));
  }
  return rows;
}

EndomorphismReport endomorphism_algebra(const StructLieAlgebra& g,
                                        const std::vector<ExactMatrix>& rho,
                                        long irreducibility_cap) {
  internal_check(static_cast<long>(rho.size()) == g.dim(),
                 "endomorphism_algebra: one matrix per basis vector required");
  long order = g.order();
  long d = rho.empty() ? 0 : rho[0].rows();
  for (const auto& m : rho)
    internal_check(m.rows() == d && m.cols() == d, "endomorphism_algebra: square matrices");

  // representation property: [rho_i, rho_j] = rho([b_i, b_j])
  for (long i = 0; i < g.dim(); ++i)
    for (long j = i + 1; j < g.dim(); ++j) {
      ExactMatrix lhs = rho[i] * rho[j] - rho[j] * rho[i];
      CycVector br = g.bracket(g.basis_vector(i), g.basis_vector(j));
      ExactMatrix rhs(d, d, order);
      for (long k = 0; k < g.dim(); ++k)
        if (!br[k].is_zero()) rhs = rhs + rho[k] * br[k];
      if (!(lhs == rhs))
        throw PreconditionError("endomorphism_algebra: matrices do not form a representation");
    }

  EndomorphismReport report;
  // commutant: T rho_i = rho_i T for all i
  ExactMatrix stacked(static_cast<long>(rho.size()) * d * d, d * d, order);
  long r0 = 0;
  ExactMatrix id = ExactMatrix::identity(d, order);
  for (const auto& m : rho) {
    ExactMatrix cond = m.transpose().kron(id) - id.kron(m);
    for (long r = 0; r < cond.rows(); ++r)
      for (long c = 0; c < cond.cols(); ++c) stacked.at(r0 + r, c) = cond.at(r, c);
    r0 += cond.rows();
  }
  auto kernel = stacked.kernel_basis();
  report.end_dim = static_cast<long>(kernel.size());
  for (const auto& v : kernel) {
    ExactMatrix T(d, d, order);
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j) T.at(i, j) = v[i * d + j];
    report.commutant_basis.push_back(std::move(T));
  }

  if (d > irreducibility_cap) {
    report.irreducibility_checked = false;
    return report;
  }
  report.irreducibility_checked = true;
  // Burnside: irreducible iff the unital algebra generated by the image is
  // the full matrix algebra
  std::vector<CycVector> span_rows;
  std::vector<ExactMatrix> gens{id};
  for (const auto& m : rho) gens.push_back(m);
  auto flatten = [&](const ExactMatrix& m) {
    CycVector v(d * d, CycScalar::zero(order));
    for (long i = 0; i < d; ++i)
      for (long j = 0; j < d; ++j) v[i * d + j] = m.at(i, j);
    return v;
  };
  std::vector<ExactMatrix> basis;
  std::vector<CycVector> echelon;
  auto try_add = [&](const ExactMatrix& m) {
    CycVector v = flatten(m);
    if (in_span(echelon, v, order)) return false;
    span_rows.push_back(v);
    echelon = echelon_span(span_rows, d * d, order);
    basis.push_back(m);
    return true;
  };
  for (const auto& m : gens) try_add(m);
  bool grew = true;
  while (grew && static_cast<long>(basis.size()) < d * d) {
    grew = false;
    size_t n = basis.size();
    for (size_t a = 0; a < n; ++a)
      for (const auto& m : rho) {
        if (try_add(basis[a] * m)) grew = true;
        if (static_cast<long>(basis.size()) == d * d) break;
      }
  }
  report.irreducible = static_cast<long>(basis.size()) == d * d;

  if (!report.irreducible) {
    // witness: a proper cyclic submodule generated from a standard vector or
    // a sum of two of them
    std::vector<CycVector> seeds;
    for (long i = 0; i < d; ++i) {
      CycVector v(d, CycScalar::zero(order));
      v[i] = CycScalar::one(order);
      seeds.push_back(v);
    }
    for (long i = 0; i < d; ++i)
      for (long j = i + 1; j < d; ++j) {
        CycVector v(d, CycScalar::zero(order));
        v[i] = CycScalar::one(order);
        v[j] = CycScalar::one(order);
        seeds.push_back(v);
      }
    for (const auto& seed : seeds) {
      std::vector<CycVector> rows{seed};
      auto sub = echelon_span(rows, d, order);
      bool growing = true;
      while (growing) {
        growing = false;
        for (const auto& b : sub)
          for (const auto& m : rho) {
            CycVector w = m.apply(b);
            if (!in_span(sub, w, order)) {
              rows.push_back(w);
              sub = echelon_span(rows, d, order);
              growing = true;
            }
          }
      }
      if (static_cast<long>(sub.size()) < d) {
        report.invariant_subspace = sub;
        break;
      }
    }
  }
  return report;
}

}  // namespace alia
