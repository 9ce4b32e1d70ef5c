#include "alia/truncated_current.hpp"

#include <sstream>

#include "alia/errors.hpp"

namespace alia {

namespace {

std::string eigvec_base_label(const StructLieAlgebra& g, const CycVector& v, long cls, long j) {
  long nonzero = -1;
  bool single = true;
  for (long i = 0; i < g.dim(); ++i)
    if (!v[i].is_zero()) {
      if (nonzero >= 0) single = false;
      nonzero = i;
    }
  return single ? g.labels()[nonzero] : ("v" + std::to_string(cls) + "_" + std::to_string(j));
}

TruncatedCurrentAlgebra assemble(const StructLieAlgebra& g, const ExactMatrix& gamma0,
                                 const CycScalar& zeta, long nu0, long m,
                                 const std::vector<std::pair<CycVector, long>>& eigenbasis,
                                 const std::vector<std::string>& labels) {
  long order = g.order();
  long dim = g.dim();
  TruncatedCurrentAlgebra T;
  T.gamma0 = gamma0;
  T.zeta = zeta;
  T.nu0 = nu0;
  T.m = m;

  // verify the supplied eigen data
  for (const auto& [v, k] : eigenbasis) {
    CycVector lhs = gamma0.apply(v);
    CycVector rhs = vec_scale(zeta.pow(k), v);
    internal_check(vec_is_zero(vec_sub(lhs, rhs)),
                   "twisted current: vector is not a gamma0 eigenvector of its class");
  }

  std::vector<std::string> blabels;
  std::vector<long> grading;
  for (size_t i = 0; i < eigenbasis.size(); ++i) {
    const auto& [v, cls] = eigenbasis[i];
    for (long k = cls; k < m; k += nu0) {
      T.eigvecs.push_back(v);
      T.exponents.push_back(k);
      blabels.push_back(labels[i] + "@z^" + std::to_string(k));
      grading.push_back(k);
    }
  }
  // canonical exponent-major order
  std::vector<size_t> perm(T.eigvecs.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::stable_sort(perm.begin(), perm.end(),
                   [&](size_t a, size_t b) { return T.exponents[a] < T.exponents[b]; });
  std::vector<CycVector> vecs;
  std::vector<long> exps;
  std::vector<std::string> labs;
  std::vector<long> grads;
  for (size_t i : perm) {
    vecs.push_back(T.eigvecs[i]);
    exps.push_back(T.exponents[i]);
    labs.push_back(blabels[i]);
    grads.push_back(grading[i]);
  }
  T.eigvecs = std::move(vecs);
  T.exponents = std::move(exps);

  long qdim = static_cast<long>(T.eigvecs.size());
  StructureConstants sc;
  for (long a = 0; a < qdim; ++a)
    for (long b = a + 1; b < qdim; ++b) {
      long k = T.exponents[a] + T.exponents[b];
      if (k >= m) continue;
      CycVector br = g.bracket(T.eigvecs[a], T.eigvecs[b]);
      if (vec_is_zero(br)) continue;
      std::vector<long> targets;
      for (long t = 0; t < qdim; ++t)
        if (T.exponents[t] == k) targets.push_back(t);
      internal_check(!targets.empty(), "twisted current: bracket exponent has no basis vectors");
      ExactMatrix basis_mat(dim, static_cast<long>(targets.size()), order);
      for (size_t c = 0; c < targets.size(); ++c)
        for (long r = 0; r < dim; ++r)
          basis_mat.at(r, static_cast<long>(c)) = T.eigvecs[targets[c]][r];
      CycVector coeffs = basis_mat.solve(br);
      CycVector recon(dim, CycScalar::zero(order));
      for (size_t c = 0; c < targets.size(); ++c)
        recon = vec_add(recon, vec_scale(coeffs[c], T.eigvecs[targets[c]]));
      internal_check(vec_is_zero(vec_sub(recon, br)),
                     "twisted current: bracket escapes its eigenspace");
      std::vector<std::pair<long, CycScalar>> entry;
      for (size_t c = 0; c < targets.size(); ++c)
        if (!coeffs[c].is_zero()) entry.emplace_back(targets[c], coeffs[c]);
      if (!entry.empty()) sc[{a, b}] = std::move(entry);
    }
  T.algebra = StructLieAlgebra(qdim, order, std::move(labs), std::move(sc), std::move(grads));
  return T;
}

}  // namespace

TruncatedCurrentAlgebra build_twisted_current(const StructLieAlgebra& g,
                                              const ExactMatrix& gamma0, const CycScalar& zeta,
                                              long nu0, long m) {
  internal_check(m >= 1, "build_twisted_current: m >= 1");
  long order = g.order();
  // automorphism check
  for (long i = 0; i < g.dim(); ++i)
    for (long j = i + 1; j < g.dim(); ++j) {
      CycVector lhs = gamma0.apply(g.bracket(g.basis_vector(i), g.basis_vector(j)));
      CycVector rhs = g.bracket(gamma0.col(i), gamma0.col(j));
      if (!vec_is_zero(vec_sub(lhs, rhs)))
        throw PreconditionError("build_twisted_current: gamma0 is not an automorphism");
    }
  auto projectors = eigenprojectors(gamma0, nu0, zeta.embed(order));
  std::vector<std::pair<CycVector, long>> eigenbasis;
  std::vector<std::string> labels;
  for (long cls = 0; cls < nu0; ++cls) {
    std::vector<CycVector> cols;
    for (long j = 0; j < projectors[cls].cols(); ++j) {
      CycVector col = projectors[cls].col(j);
      if (!vec_is_zero(col)) cols.push_back(col);
    }
    auto basis = echelon_span(cols, g.dim(), order);
    long j = 0;
    for (auto& v : basis) {
      eigenbasis.emplace_back(v, cls);
      labels.push_back(eigvec_base_label(g, v, cls, j));
      ++j;
    }
  }
  return assemble(g, gamma0, zeta, nu0, m, eigenbasis, labels);
}

TruncatedCurrentAlgebra build_twisted_current(const StructLieAlgebra& g,
                                              const ExactMatrix& gamma0, long m) {
  ExactMatrix acc = gamma0;
  long nu0 = 1;
  while (!acc.is_identity()) {
    acc = acc * gamma0;
    ++nu0;
    if (nu0 > 512)
      throw PreconditionError("build_twisted_current: gamma0 is not of finite order");
  }
  long n = g.order();
  if (n % nu0 != 0)
    throw PreconditionError("build_twisted_current: field lacks a primitive root of order " +
                            std::to_string(nu0));
  return build_twisted_current(g, gamma0, CycScalar::zeta_pow(n, n / nu0), nu0, m);
}

TruncatedCurrentAlgebra build_twisted_current_with_basis(
    const StructLieAlgebra& g, const ExactMatrix& gamma0, const CycScalar& zeta, long nu0, long m,
    const std::vector<std::pair<CycVector, long>>& eigenbasis,
    const std::vector<std::string>& vector_labels) {
  internal_check(eigenbasis.size() == vector_labels.size(),
                 "build_twisted_current_with_basis: label count");
  return assemble(g, gamma0, zeta, nu0, m, eigenbasis, vector_labels);
}

std::string TruncatedCurrentAlgebra::bracket_table() const {
  std::ostringstream os;
  long n = algebra.dim();
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      CycVector br = algebra.bracket(algebra.basis_vector(i), algebra.basis_vector(j));
      if (vec_is_zero(br)) continue;
      os << "[" << algebra.labels()[i] << ", " << algebra.labels()[j] << "] = ";
      bool first = true;
      for (long k = 0; k < n; ++k) {
        if (br[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << br[k].str() << ")*" << algebra.labels()[k];
      }
      os << "\n";
    }
  return os.str();
}

LeadingCoeffIso leading_coefficient_iso(const GroupAction& action, const SpherePoint& x0, long m,
                                        long degree_cap) {
  LeadingCoeffIso iso;
  iso.quotient = quotient_by_jet_ideal(action, x0, m, degree_cap);
  const JetSetup& setup = iso.quotient.setup;
  std::vector<std::pair<CycVector, long>> eigenbasis;
  std::vector<std::string> labels;
  // reuse the quotient's graded basis vectors of exponent < nu0 as the
  // eigenbasis of the abstract model, so the bijection is canonical
  for (size_t i = 0; i < iso.quotient.eigvecs.size(); ++i) {
    if (iso.quotient.exponents[i] >= setup.stab.nu0) continue;
    if (iso.quotient.exponents[i] >= m) continue;
    eigenbasis.emplace_back(iso.quotient.eigvecs[i], iso.quotient.exponents[i]);
    std::string l = iso.quotient.algebra.labels()[i];
    labels.push_back(l.substr(0, l.rfind("@z^")));
  }
  // classes that only appear at exponents >= nu0 do not arise (k mod nu0
  // ranges over all classes present below min(m, nu0)); for m < nu0 the
  // model truncates identically
  const ExactMatrix& gamma0 = action.elements()[setup.stab.generator].lie;
  iso.model = build_twisted_current_with_basis(action.lie(), gamma0, setup.chart.zeta,
                                               setup.stab.nu0, m, eigenbasis, labels);
  internal_check(iso.model.algebra.dim() == iso.quotient.algebra.dim(),
                 "leading_coefficient_iso: dimension mismatch between quotient and model");
  // leading-coefficient map: quotient basis (w, k) -> model basis (w, k)
  long qdim = iso.quotient.algebra.dim();
  long order = action.field_order();
  ExactMatrix f(qdim, qdim, order);
  for (long a = 0; a < qdim; ++a) {
    long target = -1;
    for (long b = 0; b < qdim; ++b) {
      if (iso.model.exponents[b] != iso.quotient.exponents[a]) continue;
      if (vec_is_zero(vec_sub(iso.model.eigvecs[b], iso.quotient.eigvecs[a]))) {
        target = b;
        break;
      }
    }
    internal_check(target >= 0, "leading_coefficient_iso: basis bijection failed");
    f.at(target, a) = CycScalar::one(order);
  }
  iso.map = f;
  iso.verified = StructLieAlgebra::verify_isomorphism(f, iso.quotient.algebra, iso.model.algebra);
  // composition-factor layer dimensions (leading coefficients span each
  // eigenspace layer)
  for (long k = 0; k < m; ++k) {
    long layer = 0;
    for (long a = 0; a < qdim; ++a)
      if (iso.quotient.exponents[a] == k) ++layer;
    iso.layer_dims.push_back(layer);
  }
  return iso;
}

bool contraction_check(const TruncatedCurrentAlgebra& T, const StructLieAlgebra& g,
                       std::string* report) {
  std::ostringstream os;
  bool ok = true;
  if (T.m != T.nu0) throw PreconditionError("contraction_check: requires m == nu0");
  if (T.algebra.dim() != g.dim()) {
    ok = false;
    os << "dimension mismatch: " << T.algebra.dim() << " vs " << g.dim() << "\n";
  }
  long n = T.algebra.dim();
  long order = g.order();
  for (long i = 0; i < n && ok; ++i)
    for (long j = i + 1; j < n; ++j) {
      CycVector full = g.bracket(T.eigvecs[i], T.eigvecs[j]);
      long k = T.exponents[i] + T.exponents[j];
      // contracted bracket: keep the degree-k eigencomponent when k < nu0
      CycVector expect(g.dim(), CycScalar::zero(order));
      if (k < T.nu0) expect = full;  // brackets stay within one eigenclass
      CycVector got(g.dim(), CycScalar::zero(order));
      CycVector brq = T.algebra.bracket(T.algebra.basis_vector(i), T.algebra.basis_vector(j));
      for (long t = 0; t < n; ++t)
        if (!brq[t].is_zero()) got = vec_add(got, vec_scale(brq[t], T.eigvecs[t]));
      if (!vec_is_zero(vec_sub(got, expect))) {
        ok = false;
        os << "bracket mismatch at basis pair (" << T.algebra.labels()[i] << ", "
           << T.algebra.labels()[j] << ")\n";
      }
    }
  if (report) *report = os.str();
  return ok;
}

}  // namespace alia
