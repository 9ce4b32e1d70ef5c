#include "alia/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "alia/errors.hpp"

namespace alia {

namespace {

// Incremental row echelon with back-substitution; rows stay canonical.
class EchelonCollector {
public:
  explicit EchelonCollector(long order) : order_(order) {}

  // reduces v against the current rows; returns true when v was new (rank grew)
  bool add(CycVector v) {
    reduce(v);
    long pivot = pivot_of(v);
    if (pivot < 0) return false;
    CycScalar inv = v[pivot].inverse();
    for (auto& x : v) x *= inv;
    // back-substitute into existing rows
    for (auto& row : rows_) {
      if (!row[pivot].is_zero()) {
        CycScalar f = row[pivot];
        for (size_t j = 0; j < row.size(); ++j) row[j] = row[j] - f * v[j];
      }
    }
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(CycVector v) const {
    reduce(v);
    return pivot_of(v) < 0;
  }

  long rank() const { return static_cast<long>(rows_.size()); }
  const std::vector<CycVector>& rows() const { return rows_; }

private:
  void reduce(CycVector& v) const {
    for (const auto& row : rows_) {
      long p = pivot_of(row);
      if (p >= 0 && !v[p].is_zero()) {
        CycScalar f = v[p] / row[p];
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * row[j];
      }
    }
  }
  static long pivot_of(const CycVector& v) {
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) return static_cast<long>(j);
    return -1;
  }

  long order_;
  std::vector<CycVector> rows_;
};

long count_finite_poles(const GroupAction& action) {
  long n = 0;
  for (const auto& p : action.poles())
    if (!p.is_infinity()) ++n;
  return n;
}

bool has_infinite_pole(const GroupAction& action) {
  for (const auto& p : action.poles())
    if (p.is_infinity()) return true;
  return false;
}

// q_d = prod over finite poles of (z - eps)^d
Poly pole_denominator(const GroupAction& action, long d) {
  long order = action.field_order();
  Poly q = Poly::constant(CycScalar::one(order));
  for (const auto& p : action.poles()) {
    if (p.is_infinity()) continue;
    q = q * Poly::linear_root(p.value().embed(order)).pow(d);
  }
  return q;
}

}  // namespace

EquivariantElement equivariant_zero(const GroupAction& action) {
  EquivariantElement e;
  long order = action.field_order();
  for (long i = 0; i < action.lie().dim(); ++i)
    e.components.push_back(RationalFunction::constant(CycScalar::zero(order), action.poles()));
  return e;
}

EquivariantElement equivariant_monomial(const GroupAction& action, long lie_index,
                                        const RationalFunction& f) {
  EquivariantElement e = equivariant_zero(action);
  e.components[lie_index] = f.embed(action.field_order());
  return e;
}

EquivariantElement equivariant_add(const EquivariantElement& a, const EquivariantElement& b) {
  internal_check(a.components.size() == b.components.size(), "equivariant_add: size mismatch");
  EquivariantElement out;
  for (size_t i = 0; i < a.components.size(); ++i)
    out.components.push_back(a.components[i] + b.components[i]);
  return out;
}

EquivariantElement equivariant_scale(const CycScalar& c, const EquivariantElement& a) {
  EquivariantElement out;
  for (const auto& f : a.components) out.components.push_back(f * c);
  return out;
}

EquivariantElement equivariant_bracket(const GroupAction& action, const EquivariantElement& a,
                                       const EquivariantElement& b) {
  const StructLieAlgebra& g = action.lie();
  EquivariantElement out = equivariant_zero(action);
  for (const auto& [key, entry] : g.structure_constants()) {
    auto [i, j] = key;
    RationalFunction fij = a.components[i] * b.components[j] - a.components[j] * b.components[i];
    if (fij.is_zero()) continue;
    for (const auto& [k, c] : entry)
      out.components[k] = out.components[k] + fij * c;
  }
  return out;
}

EquivariantElement equivariant_apply(const GroupAction& action, long elem,
                                     const EquivariantElement& a) {
  const ExactMatrix& m = action.elements()[elem].lie;
  long d = action.lie().dim();
  std::vector<RationalFunction> pulled;
  pulled.reserve(d);
  for (long j = 0; j < d; ++j) pulled.push_back(action.apply_function(elem, a.components[j]));
  EquivariantElement out = equivariant_zero(action);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      if (m.at(i, j).is_zero() || pulled[j].is_zero()) continue;
      out.components[i] = out.components[i] + pulled[j] * m.at(i, j);
    }
  return out;
}

bool equivariant_is_invariant(const GroupAction& action, const EquivariantElement& a) {
  for (long e = 0; e < action.size(); ++e) {
    EquivariantElement b = equivariant_apply(action, e, a);
    for (size_t i = 0; i < a.components.size(); ++i)
      if (!(b.components[i] == a.components[i])) return false;
  }
  return true;
}

EquivariantElement reynolds_average(const GroupAction& action, long lie_index,
                                    const RationalFunction& f) {
  long n = action.size();
  EquivariantElement acc = equivariant_zero(action);
  for (long e = 0; e < n; ++e) {
    acc = equivariant_add(acc, equivariant_apply(action, e, equivariant_monomial(action, lie_index, f)));
  }
  CycScalar inv = CycScalar::rational(Rational(1, n), action.field_order());
  return equivariant_scale(inv, acc);
}

std::vector<CycVector> point_evaluation(const GroupAction& action, const EquivariantElement& a,
                                        const std::vector<SpherePoint>& points) {
  long order = action.field_order();
  long d = action.lie().dim();
  std::vector<CycVector> out;
  for (const auto& x : points) {
    for (const auto& p : action.poles())
      if (p == x.embed(order))
        throw PreconditionError("point_evaluation: point lies in the pole set");
    CycVector v(d, CycScalar::zero(order));
    for (long i = 0; i < d; ++i) v[i] = a.components[i].eval(x.embed(order));
    // value must land in the stabilizer-fixed subalgebra
    auto stab = action.stabilizer(x);
    const ExactMatrix& m = action.elements()[stab.generator].lie;
    internal_check(vec_is_zero(vec_sub(m.apply(v), v)),
                   "point_evaluation: value escapes g^x (element not equivariant?)");
    out.push_back(std::move(v));
  }
  return out;
}

long InvariantFiltration::functions_per_degree(long d) const {
  long s = static_cast<long>(action_->poles().size());
  return d * s + 1;
}

RationalFunction InvariantFiltration::filtration_function(long d, long j) const {
  long order = action_->field_order();
  Poly num = Poly::z(order).pow(j);
  return RationalFunction::make(num, pole_denominator(*action_, d), action_->poles());
}

long InvariantFiltration::coord_dim() const {
  return action_->lie().dim() * functions_per_degree(max_degree_);
}

CycVector InvariantFiltration::coordinates_of(const EquivariantElement& e) const {
  long order = action_->field_order();
  long fdim = functions_per_degree(max_degree_);
  Poly qD = pole_denominator(*action_, max_degree_);
  CycVector out(coord_dim(), CycScalar::zero(order));
  for (size_t b = 0; b < e.components.size(); ++b) {
    const RationalFunction& f = e.components[b];
    if (f.is_zero()) continue;
    Poly c(order);
    try {
      c = (f.num().embed(order) * qD).divide_exact(f.den().embed(order));
    } catch (const InternalError&) {
      throw PreconditionError("coordinates_of: element outside the degree-" +
                              std::to_string(max_degree_) + " truncation");
    }
    if (c.degree() >= fdim)
      throw PreconditionError("coordinates_of: numerator degree outside the truncation");
    for (long k = 0; k <= c.degree(); ++k) out[b * fdim + k] = c.coeff(k);
  }
  return out;
}

CycVector InvariantFiltration::coordinates_of_combo(const CycVector& combo) const {
  internal_check(combo.size() == coords_.size(), "coordinates_of_combo: size mismatch");
  long order = action_->field_order();
  CycVector out(coord_dim(), CycScalar::zero(order));
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (combo[i].is_zero()) continue;
    for (size_t j = 0; j < out.size(); ++j) out[j] += combo[i] * coords_[i][j];
  }
  return out;
}

InvariantFiltration InvariantFiltration::build(const GroupAction& action, long max_degree) {
  InvariantFiltration filt;
  filt.action_ = &action;
  filt.max_degree_ = max_degree;
  long order = action.field_order();
  long dim = action.lie().dim();

  EchelonCollector collector(order);
  Poly qprev = Poly::constant(CycScalar::one(order));
  for (long d = 0; d <= max_degree; ++d) {
    long nfun = filt.functions_per_degree(d);
    Poly qd = pole_denominator(action, d);
    for (long j = 0; j < nfun; ++j) {
      RationalFunction u = filt.filtration_function(d, j);
      // skip functions already present in F_{d-1}
      if (d > 0) {
        bool in_prev = false;
        Poly rem(order);
        Poly c = (u.num() * qprev).divmod(u.den(), rem);
        if (rem.is_zero() && c.degree() < filt.functions_per_degree(d - 1)) in_prev = true;
        if (in_prev) continue;
      }
      for (long i = 0; i < dim; ++i) {
        EquivariantElement cand = reynolds_average(action, i, u);
        bool zero = true;
        for (const auto& f : cand.components)
          if (!f.is_zero()) zero = false;
        if (zero) continue;
        CycVector coords = filt.coordinates_of(cand);
        // note: coordinates are taken in F_max_degree space up front
        if (collector.add(coords)) {
          filt.basis_.push_back(std::move(cand));
          filt.degrees_.push_back(d);
          filt.coords_.push_back(collector.rows().back());
        }
      }
    }
    qprev = qd;
  }
  // store canonical coordinates (the collector may have back-substituted)
  filt.coords_.clear();
  for (const auto& e : filt.basis_) filt.coords_.push_back(filt.coordinates_of(e));
  return filt;
}

JetSetup make_jet_setup(const GroupAction& action, const SpherePoint& x0) {
  JetSetup setup;
  setup.x0 = x0.embed(action.field_order());
  setup.stab = action.stabilizer(setup.x0);
  const ExactMatrix& mob = action.elements()[setup.stab.generator].mobius;
  setup.chart = linearizing_coordinate(setup.x0, mob);
  internal_check(setup.chart.nu0 == setup.stab.nu0,
                 "make_jet_setup: stabilizer order does not match multiplier order");
  return setup;
}

CycVector equivariant_jet(const GroupAction& action, const EquivariantElement& a,
                          const JetSetup& setup, long m) {
  long order = action.field_order();
  long dim = action.lie().dim();
  CycVector out(dim * m, CycScalar::zero(order));
  for (long b = 0; b < dim; ++b) {
    if (a.components[b].is_zero()) continue;
    Jet jet = taylor_jet_in_chart(a.components[b].embed(order), setup.chart.mobius, m);
    for (long k = 0; k < m; ++k) out[k * dim + b] = jet.coeffs[k];
  }
  return out;
}

Subspace jet_ideal(const InvariantFiltration& filt, const SpherePoint& x0, long m) {
  const GroupAction& action = filt.action();
  long order = action.field_order();
  JetSetup setup = make_jet_setup(action, x0);
  long n = filt.size();
  long jl = action.lie().dim() * m;
  ExactMatrix jets(jl, n, order);
  for (long i = 0; i < n; ++i) {
    CycVector v = equivariant_jet(action, filt.basis()[i], setup, m);
    for (long r = 0; r < jl; ++r) jets.at(r, i) = v[r];
  }
  std::vector<CycVector> ideal_vectors;
  for (const auto& combo : jets.kernel_basis())
    ideal_vectors.push_back(filt.coordinates_of_combo(combo));
  return Subspace(filt.coord_dim(), order, ideal_vectors);
}

std::vector<IdealChainRow> ideal_chain(const InvariantFiltration& filt, const SpherePoint& x0,
                                       long mmax) {
  const GroupAction& action = filt.action();
  long order = action.field_order();
  JetSetup setup = make_jet_setup(action, x0);
  long n = filt.size();
  long dim = action.lie().dim();
  // jets at the largest order; prefixes give the smaller ones
  std::vector<CycVector> jets;
  for (long i = 0; i < n; ++i)
    jets.push_back(equivariant_jet(action, filt.basis()[i], setup, mmax));
  std::vector<IdealChainRow> rows;
  long prev_rank = 0;
  for (long m = 1; m <= mmax; ++m) {
    ExactMatrix mat(dim * m, n, order);
    for (long i = 0; i < n; ++i)
      for (long r = 0; r < dim * m; ++r) mat.at(r, i) = jets[i][r];
    long rank = mat.rank();
    rows.push_back({m, rank, m == 1 ? true : rank > prev_rank});
    prev_rank = rank;
  }
  return rows;
}

DirectSumCheck directsum_ideal_intersection_check(const InvariantFiltration& filt,
                                                  const SpherePoint& x1, long m1,
                                                  const SpherePoint& x2, long m2) {
  const GroupAction& action = filt.action();
  long order = action.field_order();
  JetSetup s1 = make_jet_setup(action, x1);
  JetSetup s2 = make_jet_setup(action, x2);
  long n = filt.size();
  long dim = action.lie().dim();
  long l1 = dim * m1, l2 = dim * m2;
  ExactMatrix stacked(l1 + l2, n, order);
  for (long i = 0; i < n; ++i) {
    CycVector v1 = equivariant_jet(action, filt.basis()[i], s1, m1);
    CycVector v2 = equivariant_jet(action, filt.basis()[i], s2, m2);
    for (long r = 0; r < l1; ++r) stacked.at(r, i) = v1[r];
    for (long r = 0; r < l2; ++r) stacked.at(l1 + r, i) = v2[r];
  }
  std::vector<CycVector> direct_sum_vectors;
  for (const auto& combo : stacked.kernel_basis())
    direct_sum_vectors.push_back(filt.coordinates_of_combo(combo));
  Subspace direct_sum(filt.coord_dim(), order, direct_sum_vectors);
  Subspace inter = jet_ideal(filt, x1, m1).intersect(jet_ideal(filt, x2, m2));
  DirectSumCheck check;
  check.equal = direct_sum == inter;
  if (!check.equal) {
    std::ostringstream os;
    os << "I_{phi (+) psi} != I_phi intersect I_psi at (" << x1.str() << ", m=" << m1 << ") vs ("
       << x2.str() << ", m=" << m2 << "): dims " << direct_sum.dim() << " vs " << inter.dim();
    check.report = os.str();
  }
  return check;
}

namespace {

// Eigenbasis of the gamma0 Lie action per exponent class, using the chart
// multiplier zeta as the primitive root.
struct EigenData {
  std::vector<std::vector<CycVector>> class_basis;  // nu0 classes
  std::vector<long> class_dims;
};

EigenData gamma0_eigen_data(const GroupAction& action, const JetSetup& setup) {
  long order = action.field_order();
  long nu0 = setup.stab.nu0;
  const ExactMatrix& M = action.elements()[setup.stab.generator].lie;
  auto projectors = eigenprojectors(M, nu0, setup.chart.zeta.embed(order));
  EigenData data;
  for (long c = 0; c < nu0; ++c) {
    std::vector<CycVector> cols;
    for (long j = 0; j < projectors[c].cols(); ++j) {
      CycVector col = projectors[c].col(j);
      if (!vec_is_zero(col)) cols.push_back(col);
    }
    data.class_basis.push_back(echelon_span(cols, M.rows(), order));
    data.class_dims.push_back(static_cast<long>(data.class_basis.back().size()));
  }
  return data;
}

long expected_quotient_dim(const EigenData& eig, long m, long nu0) {
  long total = 0;
  for (long k = 0; k < m; ++k) total += eig.class_dims[k % nu0];
  return total;
}

std::string eigvec_label(const StructLieAlgebra& g, const CycVector& v, long class_idx, long j) {
  long nonzero = -1;
  for (long i = 0; i < g.dim(); ++i) {
    if (!v[i].is_zero()) {
      if (nonzero >= 0) return "v" + std::to_string(class_idx) + "_" + std::to_string(j);
      nonzero = i;
    }
  }
  return g.labels()[nonzero];
}

JetQuotient build_quotient_from_jets(const GroupAction& action, const JetSetup& setup, long m,
                                     const EchelonCollector& span, long degree_used) {
  long order = action.field_order();
  long dim = action.lie().dim();
  long nu0 = setup.stab.nu0;
  EigenData eig = gamma0_eigen_data(action, setup);

  JetQuotient q;
  q.setup = setup;
  q.m = m;
  q.degree_used = degree_used;
  q.span_jets = span.rows();

  // graded basis: w (x) z^k for each eigenbasis vector w of class k mod nu0
  std::vector<std::string> labels;
  std::vector<long> grading;
  for (long k = 0; k < m; ++k) {
    long cls = k % nu0;
    long j = 0;
    for (const auto& w : eig.class_basis[cls]) {
      CycVector jet(dim * m, CycScalar::zero(order));
      for (long i = 0; i < dim; ++i) jet[k * dim + i] = w[i];
      if (!span.contains(jet))
        throw PreconditionError(
            "quotient: graded monomial missing from the jet image; truncation degree too small");
      q.exponents.push_back(k);
      q.eigvecs.push_back(w);
      labels.push_back(eigvec_label(action.lie(), w, cls, j) + "@z^" + std::to_string(k));
      grading.push_back(k);
      ++j;
    }
  }
  long qdim = static_cast<long>(q.eigvecs.size());

  // structure constants: [w (x) z^k, w' (x) z^k'] = [w,w'] (x) z^(k+k')
  StructureConstants sc;
  const StructLieAlgebra& g = action.lie();
  for (long a = 0; a < qdim; ++a)
    for (long b = a + 1; b < qdim; ++b) {
      long k = q.exponents[a] + q.exponents[b];
      if (k >= m) continue;
      CycVector br = g.bracket(q.eigvecs[a], q.eigvecs[b]);
      if (vec_is_zero(br)) continue;
      // decompose over the eigenbasis with exponent k
      std::vector<long> targets;
      std::vector<CycVector> target_vecs;
      for (long t = 0; t < qdim; ++t)
        if (q.exponents[t] == k) {
          targets.push_back(t);
          target_vecs.push_back(q.eigvecs[t]);
        }
      internal_check(!targets.empty(), "quotient: bracket lands outside the graded basis");
      ExactMatrix basis_mat(dim, static_cast<long>(target_vecs.size()), order);
      for (size_t c = 0; c < target_vecs.size(); ++c)
        for (long r = 0; r < dim; ++r) basis_mat.at(r, static_cast<long>(c)) = target_vecs[c][r];
      CycVector coeffs = basis_mat.solve(br);
      // solve() is consistent only if [g_k1, g_k2] c g_(k1+k2); re-check
      CycVector recon(dim, CycScalar::zero(order));
      for (size_t c = 0; c < target_vecs.size(); ++c)
        recon = vec_add(recon, vec_scale(coeffs[c], target_vecs[c]));
      internal_check(vec_is_zero(vec_sub(recon, br)),
                     "quotient: bracket escapes the expected eigenspace");
      std::vector<std::pair<long, CycScalar>> entry;
      for (size_t c = 0; c < targets.size(); ++c)
        if (!coeffs[c].is_zero()) entry.emplace_back(targets[c], coeffs[c]);
      if (!entry.empty()) sc[{a, b}] = std::move(entry);
    }
  q.algebra = StructLieAlgebra(qdim, order, std::move(labels), std::move(sc), grading);
  return q;
}

}  // namespace

CycVector JetQuotient::jet_to_coordinates(const CycVector& jet) const {
  long qdim = algebra.dim();
  long order = algebra.order();
  long dim = eigvecs.empty() ? 0 : static_cast<long>(eigvecs[0].size());
  internal_check(dim > 0 && static_cast<long>(jet.size()) == dim * m,
                 "jet_to_coordinates: jet length mismatch");
  CycVector out(qdim, CycScalar::zero(order));
  for (long k = 0; k < m; ++k) {
    CycVector ck(dim, CycScalar::zero(order));
    bool zero = true;
    for (long i = 0; i < dim; ++i) {
      ck[i] = jet[k * dim + i];
      if (!ck[i].is_zero()) zero = false;
    }
    if (zero) continue;
    std::vector<long> targets;
    for (long t = 0; t < qdim; ++t)
      if (exponents[t] == k) targets.push_back(t);
    if (targets.empty())
      throw PreconditionError("jet_to_coordinates: nonzero coefficient outside the image grading");
    ExactMatrix basis_mat(dim, static_cast<long>(targets.size()), order);
    for (size_t c = 0; c < targets.size(); ++c)
      for (long r = 0; r < dim; ++r) basis_mat.at(r, static_cast<long>(c)) = eigvecs[targets[c]][r];
    CycVector coeffs = basis_mat.solve(ck);
    CycVector recon(dim, CycScalar::zero(order));
    for (size_t c = 0; c < targets.size(); ++c)
      recon = vec_add(recon, vec_scale(coeffs[c], eigvecs[targets[c]]));
    if (!vec_is_zero(vec_sub(recon, ck)))
      throw PreconditionError("jet_to_coordinates: jet lies outside the graded image");
    for (size_t c = 0; c < targets.size(); ++c) out[targets[c]] = coeffs[c];
  }
  return out;
}

JetQuotient quotient_from_filtration(const InvariantFiltration& filt, const SpherePoint& x0,
                                     long m) {
  const GroupAction& action = filt.action();
  JetSetup setup = make_jet_setup(action, x0);
  EchelonCollector span(action.field_order());
  for (const auto& e : filt.basis()) span.add(equivariant_jet(action, e, setup, m));
  EigenData eig = gamma0_eigen_data(action, setup);
  if (span.rank() != expected_quotient_dim(eig, m, setup.stab.nu0))
    throw PreconditionError(
        "quotient_from_filtration: filtration degree too small for this truncation (raise D)");
  return build_quotient_from_jets(action, setup, m, span, filt.max_degree());
}

JetQuotient quotient_by_jet_ideal(const GroupAction& action, const SpherePoint& x0, long m,
                                  long degree_cap) {
  long order = action.field_order();
  long dim = action.lie().dim();
  JetSetup setup = make_jet_setup(action, x0);
  long nu0 = setup.stab.nu0;
  EigenData eig = gamma0_eigen_data(action, setup);
  long expected = expected_quotient_dim(eig, m, nu0);

  // streamed Reynolds jets: for each group element gamma and filtration
  // function u, the jet of gamma(u) in the chart comes from the ratio jet
  // R = jet(T')/jet(B') of W = (chart . gamma)^-1 via jet(u_j) = jet0 * R^j.
  EchelonCollector span(order);
  long n_elems = action.size();
  long n_f = count_finite_poles(action);
  internal_check(has_infinite_pole(action),
                 "quotient_by_jet_ideal: pole set must contain infinity (polynomial filtration)");
  CycScalar inv_n = CycScalar::rational(Rational(1, n_elems), order);

  long quiet = 0;
  bool done = false;
  for (long d = 0; d <= degree_cap && !done; ++d) {
    long nfun = d * static_cast<long>(action.poles().size()) + 1;
    Poly qd = pole_denominator(action, d);
    // per-element jet tables for this degree
    std::vector<std::vector<std::vector<CycScalar>>> ujets(n_elems);
    for (long e = 0; e < n_elems; ++e) {
      ExactMatrix W = (setup.chart.mobius * action.elements()[e].mobius).inverse();
      // T'(w) = W00 w + W01, B'(w) = W10 w + W11; B'(0) != 0 since the orbit
      // of x0 avoids S
      internal_check(!W.at(1, 1).is_zero(), "quotient: chart composition sends 0 to infinity");
      auto series_mul = [&](const std::vector<CycScalar>& a, const std::vector<CycScalar>& b) {
        std::vector<CycScalar> out(m, CycScalar::zero(order));
        for (long i = 0; i < m; ++i) {
          if (a[i].is_zero()) continue;
          for (long j = 0; i + j < m; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
          }
        }
        return out;
      };
      auto series_inv = [&](const std::vector<CycScalar>& a) {
        internal_check(!a[0].is_zero(), "quotient: series inverse at zero constant term");
        std::vector<CycScalar> out(m, CycScalar::zero(order));
        CycScalar a0inv = a[0].inverse();
        out[0] = a0inv;
        for (long k = 1; k < m; ++k) {
          CycScalar acc = CycScalar::zero(order);
          for (long i = 1; i <= k; ++i) acc += a[i] * out[k - i];
          out[k] = -acc * a0inv;
        }
        return out;
      };
      std::vector<CycScalar> jT(m, CycScalar::zero(order)), jB(m, CycScalar::zero(order));
      jT[0] = W.at(0, 1);
      if (m > 1) jT[1] = W.at(0, 0);
      jB[0] = W.at(1, 1);
      if (m > 1) jB[1] = W.at(1, 0);
      std::vector<CycScalar> jB_inv = series_inv(jB);
      std::vector<CycScalar> R = series_mul(jT, jB_inv);
      // jet0 = B'^(deg qd) / (qd o W homogenized)
      Poly Q = qd.mobius_substitute(W.at(0, 0), W.at(0, 1), W.at(1, 0), W.at(1, 1));
      std::vector<CycScalar> jQ(m, CycScalar::zero(order));
      for (long k = 0; k < m && k <= Q.degree(); ++k) jQ[k] = Q.coeff(k);
      std::vector<CycScalar> jet0 = series_inv(jQ);
      std::vector<CycScalar> jBpow(m, CycScalar::zero(order));
      jBpow[0] = CycScalar::one(order);
      for (long k = 0; k < d * n_f; ++k) jBpow = series_mul(jBpow, jB);
      jet0 = series_mul(jet0, jBpow);
      ujets[e].resize(nfun);
      std::vector<CycScalar> cur = jet0;
      for (long j = 0; j < nfun; ++j) {
        ujets[e][j] = cur;
        if (j + 1 < nfun) cur = series_mul(cur, R);
      }
    }
    // assemble Reynolds jets for every (lie index, function) candidate
    bool grew = false;
    for (long j = 0; j < nfun; ++j) {
      for (long i = 0; i < dim; ++i) {
        CycVector v(dim * m, CycScalar::zero(order));
        for (long e = 0; e < n_elems; ++e) {
          const ExactMatrix& M = action.elements()[e].lie;
          for (long l = 0; l < dim; ++l) {
            CycScalar w = M.at(l, i);
            if (w.is_zero()) continue;
            w *= inv_n;
            for (long k = 0; k < m; ++k) {
              if (ujets[e][j][k].is_zero()) continue;
              v[k * dim + l] += w * ujets[e][j][k];
            }
          }
        }
        if (span.add(std::move(v))) grew = true;
      }
    }
    quiet = grew ? 0 : quiet + 1;
    if (span.rank() == expected && quiet >= nu0) {
      return build_quotient_from_jets(action, setup, m, span, d);
    }
    if (span.rank() > expected)
      throw InternalError("quotient: jet image exceeds the twisted current dimension");
  }
  throw PreconditionError(
      "quotient_by_jet_ideal: jet image did not stabilize below the degree cap (raise the cap)");
}

}  // namespace alia
