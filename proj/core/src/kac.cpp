#include "alia/kac.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "alia/errors.hpp"

namespace alia {

namespace {

// Units used to rescale candidates so that spectra become rational: roots of
// unity and sums/differences of two roots of unity.
std::vector<CycScalar> scaling_units(long order) {
  std::vector<CycScalar> units;
  units.push_back(CycScalar::one(order));
  for (long k = 1; k < order; ++k) units.push_back(CycScalar::zeta_pow(order, k));
  for (long a = 0; a < order; ++a)
    for (long b = a + 1; b < order; ++b) {
      CycScalar p = CycScalar::zeta_pow(order, a) + CycScalar::zeta_pow(order, b);
      if (!p.is_zero()) units.push_back(p);
      CycScalar q = CycScalar::zeta_pow(order, a) - CycScalar::zeta_pow(order, b);
      if (!q.is_zero()) units.push_back(q);
    }
  return units;
}

long rational_sqrt_bound(const Rational& q) {
  mpz_class approx = q.get_num() / q.get_den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), approx.get_mpz_t());
  return root.get_si() + 1;
}

// coordinates c -> ambient vector over a basis
CycVector combo_vector(const std::vector<CycVector>& basis, const CycVector& c, long dim,
                       long order) {
  CycVector out(dim, CycScalar::zero(order));
  for (size_t i = 0; i < basis.size(); ++i)
    if (!c[i].is_zero()) out = vec_add(out, vec_scale(c[i], basis[i]));
  return out;
}

// matrix of M restricted to span(basis); requires invariance
ExactMatrix restrict_operator(const ExactMatrix& M, const std::vector<CycVector>& basis,
                              long order) {
  long k = static_cast<long>(basis.size());
  long n = M.cols();
  ExactMatrix B(n, k, order);
  for (long j = 0; j < k; ++j)
    for (long i = 0; i < n; ++i) B.at(i, j) = basis[j][i];
  ExactMatrix R(k, k, order);
  for (long j = 0; j < k; ++j) {
    CycVector img = M.apply(basis[j]);
    CycVector c = B.solve(img);
    CycVector recon = combo_vector(basis, c, n, order);
    internal_check(vec_is_zero(vec_sub(recon, img)),
                   "restrict_operator: subspace not invariant");
    for (long i = 0; i < k; ++i) R.at(i, j) = c[i];
  }
  return R;
}

// integer eigen decomposition of M within a bound; returns (lambda, ambient
// eigenvectors); the zero eigenvalue is included
std::vector<std::pair<long, std::vector<CycVector>>> integer_eigenspaces(const ExactMatrix& M,
                                                                         long bound) {
  std::vector<std::pair<long, std::vector<CycVector>>> out;
  long order = M.order();
  for (long lam = -bound; lam <= bound; ++lam) {
    ExactMatrix shifted = M;
    for (long i = 0; i < M.rows(); ++i)
      shifted.at(i, i) = shifted.at(i, i) - CycScalar::integer(lam, order);
    auto ker = shifted.kernel_basis();
    if (!ker.empty()) out.emplace_back(lam, echelon_span(ker, M.rows(), order));
  }
  return out;
}

long dlog(const CycScalar& lambda, const CycScalar& zeta, long nu0) {
  CycScalar acc = CycScalar::one(zeta.order());
  for (long k = 0; k < nu0; ++k) {
    if (acc == lambda.embed(zeta.order())) return k;
    acc *= zeta;
  }
  throw InternalError("dlog: value is not a power of the primitive root: " + lambda.str());
}

// eigenvalue tag of an operator on a 1-dimensional invariant space
CycScalar eigen_tag(const ExactMatrix& M, const CycVector& v) {
  CycVector img = M.apply(v);
  long order = M.order();
  long lead = -1;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      lead = static_cast<long>(i);
      break;
    }
  internal_check(lead >= 0, "eigen_tag: zero vector");
  CycScalar t = img[lead] / v[lead];
  internal_check(vec_is_zero(vec_sub(img, vec_scale(t, v))),
                 "eigen_tag: vector is not an eigenvector");
  return t;
}

}  // namespace

CycVector regular_fixed_element(const StructLieAlgebra& g, const ExactMatrix& gamma0, long rank) {
  long order = g.order();
  long dim = g.dim();
  ExactMatrix fixed_cond = gamma0 - ExactMatrix::identity(dim, order);
  auto fixed = echelon_span(fixed_cond.kernel_basis(), dim, order);
  if (fixed.empty())
    throw PreconditionError("regular_fixed_element: gamma0 has no fixed vectors");
  long k = static_cast<long>(fixed.size());
  auto units = scaling_units(order);

  long tried = 0;
  const long budget = 4000;
  for (long maxabs = 1; maxabs <= 2; ++maxabs) {
    std::vector<long> c(k, -maxabs);
    bool running = true;
    while (running) {
      // filters: attain maxabs, first nonzero positive, gcd one
      long top = 0, first = 0, gc = 0;
      for (long i = 0; i < k; ++i) {
        top = std::max(top, std::abs(c[i]));
        if (first == 0 && c[i] != 0) first = c[i] > 0 ? 1 : -1;
        gc = gcd_long(gc, std::abs(c[i]));
      }
      if (top == maxabs && first > 0 && gc == 1) {
        ++tried;
        if (tried > budget)
          throw PreconditionError(
              "regular_fixed_element: no regular element with integral spectrum within the "
              "search budget (" +
              std::to_string(budget) + " candidates)");
        CycVector x(dim, CycScalar::zero(order));
        for (long i = 0; i < k; ++i)
          if (c[i] != 0) x = vec_add(x, vec_scale(CycScalar::integer(c[i], order), fixed[i]));
        ExactMatrix adx = g.ad(x);
        long cent = static_cast<long>(adx.kernel_basis().size());
        if (cent == rank) {
          CycScalar tr2 = (adx * adx).trace();
          if (!tr2.is_zero()) {
            for (const auto& u : units) {
              CycScalar t = u * u * tr2;
              if (!t.is_rational()) continue;
              Rational q = t.to_rational();
              if (q <= 0) continue;
              ExactMatrix ady = adx * u;
              long bound = rational_sqrt_bound(q);
              // probe rational eigenvalues with small denominators
              std::vector<Rational> lambdas;
              long total = cent;
              for (long dd : {1L, 2L, 3L, 4L, 6L}) {
                for (long p = 1; p <= bound * dd; ++p) {
                  if (gcd_long(p, dd) != 1) continue;
                  for (long sign : {1L, -1L}) {
                    Rational lam(sign * p, dd);
                    ExactMatrix shifted = ady;
                    CycScalar ls = CycScalar::rational(lam, order);
                    for (long i = 0; i < dim; ++i) shifted.at(i, i) = shifted.at(i, i) - ls;
                    long d = dim - shifted.rank();
                    if (d > 0) {
                      lambdas.push_back(lam);
                      total += d;
                    }
                  }
                }
                if (total == dim) break;
              }
              if (total == dim && !lambdas.empty()) {
                // scale eigenvalues to coprime integers
                mpz_class den_lcm(1), num_gcd(0);
                for (const auto& lam : lambdas) {
                  mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), lam.get_den().get_mpz_t());
                  mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), lam.get_num().get_mpz_t());
                }
                Rational scale(den_lcm, num_gcd);
                scale.canonicalize();
                return vec_scale(u * CycScalar::rational(scale, order), x);
              }
            }
          }
        }
      }
      // odometer
      long pos = k - 1;
      while (pos >= 0) {
        if (c[pos] < maxabs) {
          ++c[pos];
          break;
        }
        c[pos] = -maxabs;
        --pos;
      }
      if (pos < 0) running = false;
    }
  }
  throw PreconditionError("regular_fixed_element: search exhausted after " +
                          std::to_string(tried) + " candidates");
}

namespace {

// splits an ad(h)-invariant space into 1-dimensional simultaneous
// eigenspaces by probing restricted operators
std::vector<CycVector> split_to_lines(const StructLieAlgebra& g,
                                      const std::vector<CycVector>& space,
                                      const std::vector<CycVector>& csa,
                                      const std::vector<CycScalar>& units) {
  long order = g.order();
  long dim = g.dim();
  if (space.size() == 1) return space;
  for (const auto& h : csa) {
    ExactMatrix R = restrict_operator(g.ad(h), space, order);
    long kk = R.rows();
    // skip scalar action
    bool scalar = true;
    for (long i = 0; i < kk && scalar; ++i)
      for (long j = 0; j < kk; ++j) {
        if (i == j && R.at(i, i) != R.at(0, 0)) scalar = false;
        if (i != j && !R.at(i, j).is_zero()) scalar = false;
      }
    if (scalar) continue;
    // candidate eigenvalues: lambda with det(R - lambda) = 0, built from
    // trace shifts by unit * small rational
    CycScalar tr = R.trace();
    CycScalar inv_k = CycScalar::rational(Rational(1, kk), order);
    std::vector<CycScalar> candidates;
    for (const auto& u : units) {
      for (long dd : {1L, 2L, 3L}) {
        for (long p = 0; p <= 12; ++p) {
          CycScalar off = u * CycScalar::rational(Rational(p, dd), order);
          candidates.push_back((tr + off) * inv_k);
          if (p > 0) candidates.push_back((tr - off) * inv_k);
          if (p > 0) candidates.push_back(off);
          if (p > 0) candidates.push_back(-off);
        }
      }
    }
    std::vector<std::vector<CycVector>> pieces;
    long found = 0;
    std::vector<CycScalar> seen;
    for (const auto& lam : candidates) {
      bool dup = false;
      for (const auto& s : seen)
        if (s == lam) dup = true;
      if (dup) continue;
      ExactMatrix shifted = R;
      for (long i = 0; i < kk; ++i) shifted.at(i, i) = shifted.at(i, i) - lam;
      if (!shifted.det().is_zero()) continue;
      seen.push_back(lam);
      auto ker = shifted.kernel_basis();
      std::vector<CycVector> ambient;
      for (const auto& c : ker) ambient.push_back(combo_vector(space, c, dim, order));
      pieces.push_back(echelon_span(ambient, dim, order));
      found += static_cast<long>(ker.size());
      if (found == kk) break;
    }
    if (found == kk && pieces.size() > 1) {
      std::vector<CycVector> out;
      for (const auto& p : pieces) {
        auto lines = split_to_lines(g, p, csa, units);
        out.insert(out.end(), lines.begin(), lines.end());
      }
      return out;
    }
  }
  throw InternalError(
      "csa_roots: simultaneous diagonalization failed (weight space did not split to lines)");
}

}  // namespace

RootDatum csa_roots(const StructLieAlgebra& g, const CycVector& x_prime) {
  long order = g.order();
  long dim = g.dim();
  RootDatum datum;
  datum.regular = x_prime;
  ExactMatrix adx = g.ad(x_prime);
  datum.csa = echelon_span(adx.kernel_basis(), dim, order);
  datum.rank = static_cast<long>(datum.csa.size());

  CycScalar tr2 = (adx * adx).trace();
  if (!tr2.is_rational() || tr2.to_rational() <= 0)
    throw PreconditionError("csa_roots: ad(x') does not have an integral spectrum");
  long bound = rational_sqrt_bound(tr2.to_rational());
  auto eigen = integer_eigenspaces(adx, bound);
  long total = 0;
  for (const auto& [lam, vecs] : eigen) total += static_cast<long>(vecs.size());
  if (total != dim)
    throw PreconditionError("csa_roots: ad(x') spectrum is not integral (found dimension " +
                            std::to_string(total) + " of " + std::to_string(dim) + ")");

  auto units = scaling_units(order);
  for (const auto& [lam, vecs] : eigen) {
    if (lam == 0) {
      internal_check(static_cast<long>(vecs.size()) == datum.rank,
                     "csa_roots: zero eigenspace is not the centralizer (x' not regular)");
      continue;
    }
    for (const auto& line : split_to_lines(g, vecs, datum.csa, units)) {
      RootDatum::Root root;
      root.vector = line;
      root.level = lam;
      root.positive = lam > 0;
      for (const auto& h : datum.csa) root.tags.push_back(eigen_tag(g.ad(h), line));
      datum.roots.push_back(std::move(root));
    }
  }
  internal_check(static_cast<long>(datum.roots.size()) == dim - datum.rank,
                 "csa_roots: root count mismatch");

  // simple roots: positive and not a sum of two positive roots
  auto tags_equal = [](const std::vector<CycScalar>& a, const std::vector<CycScalar>& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  };
  for (size_t i = 0; i < datum.roots.size(); ++i) {
    if (!datum.roots[i].positive) continue;
    bool is_sum = false;
    for (size_t a = 0; a < datum.roots.size() && !is_sum; ++a) {
      if (!datum.roots[a].positive) continue;
      for (size_t b = 0; b < datum.roots.size(); ++b) {
        if (!datum.roots[b].positive) continue;
        std::vector<CycScalar> sum;
        for (size_t t = 0; t < datum.roots[a].tags.size(); ++t)
          sum.push_back(datum.roots[a].tags[t] + datum.roots[b].tags[t]);
        if (tags_equal(sum, datum.roots[i].tags)) {
          is_sum = true;
          break;
        }
      }
    }
    if (!is_sum) datum.simple.push_back(static_cast<long>(i));
  }
  internal_check(static_cast<long>(datum.simple.size()) == datum.rank,
                 "csa_roots: simple root count does not match the rank");

  long min_level = 0;
  for (size_t i = 0; i < datum.roots.size(); ++i)
    if (datum.roots[i].level < min_level) {
      min_level = datum.roots[i].level;
      datum.lowest = static_cast<long>(i);
    }
  long lowest_count = 0;
  for (const auto& r : datum.roots)
    if (r.level == min_level) ++lowest_count;
  internal_check(datum.lowest >= 0 && lowest_count == 1, "csa_roots: lowest root not unique");

  if (datum.rank == 1 && datum.roots.size() == 2)
    datum.type_label = "A1";
  else if (datum.rank == 2 && datum.roots.size() == 6)
    datum.type_label = "A2";
  else
    datum.type_label = "X?";
  return datum;
}

namespace {

// scalar c with w = c * v (throws when not proportional)
CycScalar proportionality(const CycVector& w, const CycVector& v, long order) {
  long lead = -1;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      lead = static_cast<long>(i);
      break;
    }
  internal_check(lead >= 0, "proportionality: zero reference vector");
  CycScalar c = w[lead] / v[lead];
  internal_check(vec_is_zero(vec_sub(w, vec_scale(c, v))), "proportionality: vectors not parallel");
  return c;
}

// Chevalley pair: rescales f so that with h = [e, f], ad(h) e = 2 e
void normalize_pair(const StructLieAlgebra& g, const CycVector& e, CycVector& f, CycVector& h) {
  h = g.bracket(e, f);
  internal_check(!vec_is_zero(h), "normalize_pair: [e, f] = 0");
  CycScalar c = eigen_tag(g.ad(h), e);
  internal_check(!c.is_zero(), "normalize_pair: alpha(h) = 0");
  CycScalar factor = CycScalar::integer(2, g.order()) / c;
  f = vec_scale(factor, f);
  h = g.bracket(e, f);
}

}  // namespace

TorsionFactorization factor_torsion(const StructLieAlgebra& g, const RootDatum& datum,
                                    const ExactMatrix& gamma0, const CycScalar& zeta, long nu0) {
  long order = g.order();
  long dim = g.dim();
  TorsionFactorization fact;
  fact.gamma0 = gamma0;
  fact.zeta = zeta.embed(order);
  fact.nu0 = nu0;

  // gamma0 permutes the simple root spaces
  long ns = static_cast<long>(datum.simple.size());
  fact.mu_perm.assign(ns, -1);
  std::vector<CycScalar> coeffs(ns, CycScalar::zero(order));
  for (long i = 0; i < ns; ++i) {
    CycVector img = gamma0.apply(datum.roots[datum.simple[i]].vector);
    for (long j = 0; j < ns; ++j) {
      const CycVector& target = datum.roots[datum.simple[j]].vector;
      long lead = -1;
      for (size_t t = 0; t < target.size(); ++t)
        if (!target[t].is_zero()) {
          lead = static_cast<long>(t);
          break;
        }
      CycScalar c = img[lead] / target[lead];
      if (c.is_zero()) continue;
      if (vec_is_zero(vec_sub(img, vec_scale(c, target)))) {
        fact.mu_perm[i] = j;
        coeffs[i] = c;
        break;
      }
    }
    if (fact.mu_perm[i] < 0)
      throw InternalError("factor_torsion: gamma0 does not permute the simple root spaces");
  }
  // order of the induced permutation
  fact.r = 1;
  {
    std::vector<long> p(ns);
    for (long i = 0; i < ns; ++i) p[i] = i;
    for (long step = 1; step <= ns; ++step) {
      bool id = true;
      std::vector<long> np(ns);
      for (long i = 0; i < ns; ++i) np[i] = fact.mu_perm[p[i]];
      p = np;
      for (long i = 0; i < ns; ++i)
        if (p[i] != i) id = false;
      if (id) {
        fact.r = step;
        break;
      }
    }
  }
  internal_check(fact.r == 1 || fact.r == 2 || fact.r == 3,
                 "factor_torsion: diagram symmetry order out of range");

  // Chevalley data of the simple roots and of the lowest root
  auto opposite_root = [&](long root_idx) {
    for (size_t j = 0; j < datum.roots.size(); ++j) {
      bool neg = true;
      for (size_t t = 0; t < datum.roots[root_idx].tags.size(); ++t)
        if (datum.roots[j].tags[t] != -datum.roots[root_idx].tags[t]) neg = false;
      if (neg) return static_cast<long>(j);
    }
    throw InternalError("factor_torsion: opposite root missing");
  };

  // affine nodes
  if (fact.r == 1) {
    // node 0: lowest root, then the simple roots
    std::vector<long> node_roots{datum.lowest};
    for (long i = 0; i < ns; ++i) node_roots.push_back(datum.simple[i]);
    for (long idx : node_roots) {
      TorsionFactorization::AffineNode node;
      node.e = datum.roots[idx].vector;
      node.f = datum.roots[opposite_root(idx)].vector;
      normalize_pair(g, node.e, node.f, node.h);
      node.s_raw = dlog(proportionality(gamma0.apply(node.e), node.e, order), fact.zeta, nu0);
      node.level = datum.roots[idx].level;
      node.mu_class = 0;
      fact.nodes.push_back(std::move(node));
    }
    fact.mu = ExactMatrix::identity(dim, order);
  } else {
    // Chevalley-normalize the simple pairs up front so that averaged nodes
    // bracket to symmetric coroots
    std::vector<CycVector> se(ns), sf(ns), sh(ns);
    for (long i = 0; i < ns; ++i) {
      se[i] = datum.roots[datum.simple[i]].vector;
      sf[i] = datum.roots[opposite_root(datum.simple[i])].vector;
      normalize_pair(g, se[i], sf[i], sh[i]);
    }
    // mu-orbits of the simple roots; only the A2 double orbit is validated
    std::vector<bool> used(ns, false);
    std::vector<std::pair<CycVector, CycVector>> mu_pairs;  // (x, mu x)
    for (long i = 0; i < ns; ++i) {
      if (used[i]) continue;
      long j = fact.mu_perm[i];
      TorsionFactorization::AffineNode node;
      if (j == i) {
        used[i] = true;
        node.e = se[i];
        node.f = sf[i];
        node.s_raw = dlog(coeffs[i], fact.zeta, nu0);
        node.mu_class = 0;
        node.level = datum.roots[datum.simple[i]].level;
        mu_pairs.emplace_back(node.e, node.e);
        mu_pairs.emplace_back(node.f, node.f);
      } else {
        internal_check(fact.mu_perm[j] == i, "factor_torsion: orbit longer than 2 unsupported");
        used[i] = used[j] = true;
        const CycVector& ei = se[i];
        const CycVector& ej = se[j];
        CycVector fi = sf[i];
        CycVector fj = sf[j];
        CycScalar c1 = coeffs[i];  // gamma0 e_i = c1 e_j
        CycScalar c2 = coeffs[j];  // gamma0 e_j = c2 e_i
        long kprod = dlog(c1 * c2, fact.zeta, nu0);
        // 2 s = kprod mod nu0, branch fixed by s = 0 mod r
        std::vector<long> s_options;
        for (long s = 0; s < nu0; ++s)
          if ((2 * s) % nu0 == kprod) s_options.push_back(s);
        internal_check(!s_options.empty(), "factor_torsion: no exponent solves 2s = k");
        long s = -1;
        for (long cand : s_options)
          if (cand % fact.r == 0) {
            internal_check(s < 0, "factor_torsion: exponent branch not unique");
            s = cand;
          }
        internal_check(s >= 0, "factor_torsion: no exponent branch with s = 0 mod r");
        CycScalar tau = c1 * fact.zeta.pow(-s);
        CycVector ejp = vec_scale(tau, ej);
        CycVector fjp = vec_scale(tau.inverse(), fj);
        node.e = vec_add(ei, ejp);
        node.f = vec_add(fi, fjp);
        node.s_raw = s;
        node.mu_class = 0;
        node.level = datum.roots[datum.simple[i]].level;
        mu_pairs.emplace_back(ei, ejp);
        mu_pairs.emplace_back(ejp, ei);
        mu_pairs.emplace_back(fi, fjp);
        mu_pairs.emplace_back(fjp, fi);
      }
      normalize_pair(g, node.e, node.f, node.h);
      fact.nodes.push_back(std::move(node));
    }
    // the added generator: the lowest-root vector
    TorsionFactorization::AffineNode node;
    node.e = datum.roots[datum.lowest].vector;
    node.f = datum.roots[opposite_root(datum.lowest)].vector;
    normalize_pair(g, node.e, node.f, node.h);
    node.s_raw = dlog(proportionality(gamma0.apply(node.e), node.e, order), fact.zeta, nu0);
    node.level = datum.roots[datum.lowest].level;
    fact.nodes.push_back(node);
    mu_pairs.emplace_back(node.e, node.e);  // adjusted below via gamma0 on the CSA
    mu_pairs.pop_back();

    // mu on the CSA agrees with gamma0 (the inner part is trivial there)
    for (const auto& h : datum.csa) mu_pairs.emplace_back(h, gamma0.apply(h));
    // close the pairs under brackets until they span g
    {
      std::vector<CycVector> span_rows;
      for (const auto& [x, y] : mu_pairs) span_rows.push_back(x);
      auto echelon = echelon_span(span_rows, dim, order);
      size_t head = 0;
      std::vector<std::pair<CycVector, CycVector>> pairs = mu_pairs;
      while (echelon.size() < static_cast<size_t>(dim)) {
        bool grew = false;
        size_t n = pairs.size();
        for (size_t a = 0; a < n && echelon.size() < static_cast<size_t>(dim); ++a)
          for (size_t b = a + 1; b < n && echelon.size() < static_cast<size_t>(dim); ++b) {
            CycVector x = g.bracket(pairs[a].first, pairs[b].first);
            if (vec_is_zero(x) || in_span(echelon, x, order)) continue;
            CycVector y = g.bracket(pairs[a].second, pairs[b].second);
            pairs.emplace_back(x, y);
            span_rows.push_back(x);
            echelon = echelon_span(span_rows, dim, order);
            grew = true;
          }
        internal_check(grew || echelon.size() == static_cast<size_t>(dim),
                       "factor_torsion: mu generators do not span the algebra");
        (void)head;
      }
      // solve mu X = Y
      ExactMatrix X(dim, static_cast<long>(pairs.size()), order);
      ExactMatrix Y(dim, static_cast<long>(pairs.size()), order);
      for (size_t c = 0; c < pairs.size(); ++c)
        for (long rrow = 0; rrow < dim; ++rrow) {
          X.at(rrow, static_cast<long>(c)) = pairs[c].first[rrow];
          Y.at(rrow, static_cast<long>(c)) = pairs[c].second[rrow];
        }
      // mu = Y X^+ : solve column by column on a full-rank square subsystem
      ExactMatrix mu(dim, dim, order);
      // pick dim independent columns of X
      std::vector<long> cols;
      {
        ExactMatrix Xt = X.transpose();
        std::vector<long> pivots;
        Xt.rref(&pivots);
        // pivots of X^T rows correspond to independent columns of X... use
        // simple greedy instead
        std::vector<CycVector> chosen;
        for (long c = 0; c < X.cols() && static_cast<long>(cols.size()) < dim; ++c) {
          CycVector col = X.col(c);
          std::vector<CycVector> trial = chosen;
          trial.push_back(col);
          if (static_cast<long>(echelon_span(trial, dim, order).size()) >
              static_cast<long>(chosen.size())) {
            chosen.push_back(col);
            cols.push_back(c);
          }
        }
        internal_check(static_cast<long>(cols.size()) == dim,
                       "factor_torsion: generator matrix is rank-deficient");
      }
      ExactMatrix Xs(dim, dim, order), Ys(dim, dim, order);
      for (long c = 0; c < dim; ++c)
        for (long rrow = 0; rrow < dim; ++rrow) {
          Xs.at(rrow, c) = X.at(rrow, cols[c]);
          Ys.at(rrow, c) = Y.at(rrow, cols[c]);
        }
      mu = Ys * Xs.inverse();
      fact.mu = mu;
    }
  }

  fact.inner = fact.mu.inverse() * gamma0;
  // verifications
  internal_check(fact.mu.pow(fact.r).is_identity(), "factor_torsion: mu^r != id");
  internal_check(fact.mu * gamma0 == gamma0 * fact.mu, "factor_torsion: mu does not commute");
  for (const auto& root : datum.roots) {
    CycVector img = fact.inner.apply(root.vector);
    proportionality(img, root.vector, order);  // throws when not diagonal
  }

  // CSA of g^mu: the gamma0-fixed part of the CSA
  {
    ExactMatrix R = restrict_operator(gamma0, datum.csa, order);
    ExactMatrix shifted = R - ExactMatrix::identity(R.rows(), order);
    std::vector<CycVector> ambient;
    for (const auto& c : shifted.kernel_basis())
      ambient.push_back(combo_vector(datum.csa, c, dim, order));
    fact.h0_basis = echelon_span(ambient, dim, order);
  }
  for (auto& node : fact.nodes) {
    for (const auto& h : fact.h0_basis) node.h0_tags.push_back(eigen_tag(g.ad(h), node.e));
    if (fact.r > 1) {
      CycScalar zr = CycScalar::zeta_pow(order, order / fact.r);
      node.mu_class = dlog(proportionality(fact.mu.apply(node.e), node.e, order), zr, fact.r);
    }
  }

  // affine Cartan matrix from the node triples
  long nn = static_cast<long>(fact.nodes.size());
  fact.cartan.assign(nn, std::vector<long>(nn, 0));
  for (long i = 0; i < nn; ++i)
    for (long j = 0; j < nn; ++j) {
      CycScalar t = eigen_tag(g.ad(fact.nodes[i].h), fact.nodes[j].e);
      Rational q = t.to_rational();
      internal_check(q.get_den() == 1, "factor_torsion: Cartan integer is not an integer");
      fact.cartan[i][j] = q.get_num().get_si();
    }
  // marks: positive integer kernel of the Cartan matrix
  {
    ExactMatrix A(nn, nn, 1);
    for (long i = 0; i < nn; ++i)
      for (long j = 0; j < nn; ++j) A.at(i, j) = CycScalar::integer(fact.cartan[i][j], 1);
    auto ker = A.kernel_basis();
    internal_check(ker.size() == 1, "factor_torsion: affine Cartan matrix has wrong corank");
    // clear denominators, make positive, gcd one
    mpz_class den(1);
    for (const auto& c : ker[0])
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.to_rational().get_den().get_mpz_t());
    std::vector<long> marks;
    mpz_class gc(0);
    for (const auto& c : ker[0]) {
      Rational v = c.to_rational() * Rational(den);
      marks.push_back(v.get_num().get_si());
      mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), v.get_num().get_mpz_t());
    }
    long gcl = std::abs(gc.get_si());
    bool neg = false;
    for (long& mval : marks) {
      mval /= gcl;
      if (mval < 0) neg = true;
    }
    if (neg)
      for (long& mval : marks) mval = -mval;
    for (long mval : marks) internal_check(mval > 0, "factor_torsion: marks must be positive");
    fact.marks = marks;
  }
  fact.affine_type = datum.type_label + "^(" + std::to_string(fact.r) + ")";
  return fact;
}

std::vector<long> apply_weyl_word(const std::vector<std::vector<long>>& cartan,
                                  const std::vector<long>& s, const std::vector<long>& word,
                                  long nu0) {
  std::vector<long> cur = s;
  long n = static_cast<long>(cur.size());
  for (long j : word) {
    std::vector<long> next(n);
    for (long i = 0; i < n; ++i) {
      long v = (i == j) ? -cur[j] : cur[i] - cartan[j][i] * cur[j];
      v %= nu0;
      if (v < 0) v += nu0;
      next[i] = v;
    }
    cur = next;
  }
  return cur;
}

KacCoordinates kac_coordinates(const TorsionFactorization& fact) {
  KacCoordinates kc;
  kc.r = fact.r;
  kc.nu0 = fact.nu0;
  kc.marks = fact.marks;
  kc.affine_type = fact.affine_type;
  long nn = static_cast<long>(fact.nodes.size());
  for (const auto& node : fact.nodes) kc.s_raw.push_back(node.s_raw);

  auto height = [&](const std::vector<long>& s) {
    long h = 0;
    for (long i = 0; i < nn; ++i) h += kc.marks[i] * s[i];
    return kc.r * h;
  };
  auto gcd_all = [&](const std::vector<long>& s) {
    long gk = 0;
    for (long v : s) gk = gcd_long(gk, std::abs(v));
    return gk;
  };

  if (fact.nu0 == 1) {
    // the identity torsion: canonical coordinates put 1 on a node of mark 1
    kc.s.assign(nn, 0);
    long node = 0;
    for (long i = 0; i < nn; ++i)
      if (kc.marks[i] == 1) {
        node = i;
        break;
      }
    internal_check(kc.marks[node] == 1, "kac_coordinates: no mark-1 node for the identity");
    kc.s[node] = 1;
    return kc;
  }

  internal_check(height(kc.s_raw) % fact.nu0 == 0,
                 "kac_coordinates: raw exponents are inconsistent (height != 0 mod nu0)");

  // BFS over the affine alcove action until r sum a_i s_i = nu0, gcd 1
  std::map<std::vector<long>, std::vector<long>> visited;  // state -> word
  std::queue<std::vector<long>> queue;
  visited[kc.s_raw] = {};
  queue.push(kc.s_raw);
  const size_t word_cap = static_cast<size_t>(10 * fact.nu0 * nn);
  bool found = false;
  while (!queue.empty() && !found) {
    std::vector<long> cur = queue.front();
    queue.pop();
    const std::vector<long>& word = visited[cur];
    if (height(cur) == fact.nu0 && gcd_all(cur) == 1) {
      kc.s = cur;
      kc.weyl_word = word;
      found = true;
      break;
    }
    if (word.size() >= word_cap) continue;
    for (long j = 0; j < nn; ++j) {
      std::vector<long> next = apply_weyl_word(fact.cartan, cur, {j}, fact.nu0);
      if (visited.count(next)) continue;
      std::vector<long> nw = word;
      nw.push_back(j);
      visited[next] = nw;
      queue.push(next);
    }
  }
  if (!found)
    throw PreconditionError(
        "kac_coordinates: affine Weyl normalization did not terminate within the bound; raw "
        "coordinates kept");
  // canonicalize over diagram symmetries (lexicographic minimum)
  {
    std::vector<long> perm(nn);
    for (long i = 0; i < nn; ++i) perm[i] = i;
    std::vector<long> best = kc.s;
    std::sort(perm.begin(), perm.end());
    do {
      bool symmetric = true;
      for (long i = 0; i < nn && symmetric; ++i)
        for (long j = 0; j < nn; ++j)
          if (fact.cartan[perm[i]][perm[j]] != fact.cartan[i][j]) {
            symmetric = false;
            break;
          }
      if (!symmetric) continue;
      std::vector<long> image(nn);
      for (long i = 0; i < nn; ++i) image[perm[i]] = kc.s[i];
      if (image < best) best = image;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best != kc.s) {
      kc.s = best;
      kc.canonicalized = true;
    }
  }
  return kc;
}

std::vector<long> omega1_values(const RootGroupoid& groupoid, const std::vector<long>& s,
                                const std::vector<long>& marks, long r, long nu0) {
  long h = 0;
  for (size_t i = 0; i < s.size(); ++i) h += marks[i] * s[i];
  internal_check((r * h) % nu0 == 0,
                 "omega1_values: coordinates do not define a function on the groupoid");
  std::vector<long> out;
  for (const auto& e : groupoid.elements) {
    long v = 0;
    for (size_t i = 0; i < s.size(); ++i) v += e.coords[i] * s[i];
    v %= nu0;
    if (v < 0) v += nu0;
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<long>> omega2_values(const RootGroupoid& groupoid,
                                             const std::vector<long>& omega1, long nu0) {
  long n = static_cast<long>(groupoid.elements.size());
  std::vector<std::vector<long>> out(n, std::vector<long>(n, -1));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long k = groupoid.sum[i][j];
      if (k < 0) continue;
      long num = omega1[i] + omega1[j] - omega1[k];
      internal_check(num % nu0 == 0, "omega2_values: omega1 is not additive mod nu0");
      long v = num / nu0;
      internal_check(v == 0 || v == 1, "omega2_values: value outside {0,1}");
      out[i][j] = v;
    }
  // cocycle identity on composable triples
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      if (groupoid.sum[a][b] < 0) continue;
      for (long c = 0; c < n; ++c) {
        long ab = groupoid.sum[a][b];
        if (groupoid.sum[ab][c] < 0 || groupoid.sum[b][c] < 0) continue;
        long bc = groupoid.sum[b][c];
        if (groupoid.sum[a][bc] < 0) continue;
        internal_check(out[a][b] + out[ab][c] == out[b][c] + out[a][bc],
                       "omega2_values: cocycle identity fails");
      }
    }
  return out;
}

std::string omega2_dot(const RootGroupoid& groupoid,
                       const std::vector<std::vector<long>>& omega2) {
  std::ostringstream os;
  os << "graph omega2 {\n";
  long n = static_cast<long>(groupoid.elements.size());
  for (long i = 0; i < n; ++i)
    os << "  n" << i << " [label=\"" << groupoid.elements[i].label << "\"];\n";
  for (long i = 0; i < n; ++i)
    for (long j = i; j < n; ++j)
      if (omega2[i][j] == 1) os << "  n" << i << " -- n" << j << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

std::string coords_label(const std::vector<long>& coords) {
  bool zero = true;
  for (long c : coords)
    if (c != 0) zero = false;
  if (zero) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (coords[i] != 1) os << coords[i];
    os << "a" << i;
  }
  return os.str();
}

}  // namespace

LocalStructure local_structure(const StructLieAlgebra& g, const ExactMatrix& gamma0,
                               const CycScalar& zeta, long nu0, long rank) {
  long order = g.order();
  long dim = g.dim();
  LocalStructure ls;
  ls.lie = g;
  ls.zeta = zeta.embed(order);
  ls.nu0 = nu0;

  CycVector x_prime = regular_fixed_element(g, gamma0, rank);
  ls.datum = csa_roots(g, x_prime);
  ls.fact = factor_torsion(g, ls.datum, gamma0, ls.zeta, nu0);
  // orientation rule: the affine node's raw exponent stays in [0, nu0/2];
  // otherwise flip x' (swapping the positive system) and redo
  {
    long added = (ls.fact.r == 1) ? 0 : static_cast<long>(ls.fact.nodes.size()) - 1;
    if (2 * ls.fact.nodes[added].s_raw > nu0) {
      CycVector flipped = vec_scale(-CycScalar::one(order), x_prime);
      ls.datum = csa_roots(g, flipped);
      ls.fact = factor_torsion(g, ls.datum, gamma0, ls.zeta, nu0);
    }
  }
  ls.kc = kac_coordinates(ls.fact);

  // simultaneous eigenspaces of (mu, ad h^0): start from mu classes
  std::vector<std::pair<long, std::vector<CycVector>>> pieces;  // (mu class, basis)
  if (ls.fact.r == 1) {
    pieces.emplace_back(0, Subspace::full(dim, order).basis());
  } else {
    CycScalar zr = CycScalar::zeta_pow(order, order / ls.fact.r);
    for (long l = 0; l < ls.fact.r; ++l) {
      ExactMatrix shifted = ls.fact.mu;
      CycScalar lam = zr.pow(l);
      for (long i = 0; i < dim; ++i) shifted.at(i, i) = shifted.at(i, i) - lam;
      auto ker = shifted.kernel_basis();
      if (!ker.empty()) pieces.emplace_back(l, echelon_span(ker, dim, order));
    }
  }
  // refine by each h^0 basis element using the known root tags as candidates
  for (size_t hi = 0; hi < ls.fact.h0_basis.size(); ++hi) {
    const CycVector& h = ls.fact.h0_basis[hi];
    ExactMatrix adh = g.ad(h);
    std::vector<CycScalar> candidates{CycScalar::zero(order)};
    for (const auto& root : ls.datum.roots) {
      CycScalar t = eigen_tag(adh, root.vector);
      bool dup = false;
      for (const auto& c : candidates)
        if (c == t) dup = true;
      if (!dup) candidates.push_back(t);
    }
    std::vector<std::pair<long, std::vector<CycVector>>> next;
    for (const auto& [l, basis] : pieces) {
      ExactMatrix R = restrict_operator(adh, basis, order);
      long found = 0;
      for (const auto& lam : candidates) {
        ExactMatrix shifted = R;
        for (long i = 0; i < R.rows(); ++i) shifted.at(i, i) = shifted.at(i, i) - lam;
        auto ker = shifted.kernel_basis();
        if (ker.empty()) continue;
        std::vector<CycVector> ambient;
        for (const auto& c : ker) ambient.push_back(combo_vector(basis, c, dim, order));
        next.emplace_back(l, echelon_span(ambient, dim, order));
        found += static_cast<long>(ker.size());
      }
      internal_check(found == static_cast<long>(basis.size()),
                     "local_structure: weight refinement lost dimensions");
    }
    pieces = std::move(next);
  }

  // groupoid elements from the pieces
  struct PieceInfo {
    long mu_class;
    std::vector<CycVector> basis;
    std::vector<CycScalar> tags;
    long exponent;
    bool imaginary;
    long level;
    std::vector<long> coords;
  };
  std::vector<PieceInfo> infos;
  long nn = static_cast<long>(ls.fact.nodes.size());
  // x' coordinates over h^0 (to compute display levels)
  CycVector xp_coords;
  {
    ExactMatrix B(dim, static_cast<long>(ls.fact.h0_basis.size()), order);
    for (size_t j = 0; j < ls.fact.h0_basis.size(); ++j)
      for (long i = 0; i < dim; ++i) B.at(i, static_cast<long>(j)) = ls.fact.h0_basis[j][i];
    xp_coords = B.solve(ls.datum.regular);
  }
  for (auto& [l, basis] : pieces) {
    PieceInfo info;
    info.mu_class = l;
    info.basis = basis;
    info.imaginary = true;
    for (const auto& h : ls.fact.h0_basis) {
      // all basis vectors share the tag (assert via eigen_tag on each)
      CycScalar t = eigen_tag(g.ad(h), basis[0]);
      for (size_t b = 1; b < basis.size(); ++b)
        internal_check(eigen_tag(g.ad(h), basis[b]) == t,
                       "local_structure: tag not constant on a weight space");
      info.tags.push_back(t);
      if (!t.is_zero()) info.imaginary = false;
    }
    // gamma0 exponent
    {
      CycScalar lam = proportionality(gamma0.apply(basis[0]), basis[0], order);
      info.exponent = dlog(lam, ls.zeta, nu0);
      for (size_t b = 1; b < basis.size(); ++b)
        internal_check(proportionality(gamma0.apply(basis[b]), basis[b], order) == lam,
                       "local_structure: gamma0 exponent not constant on a weight space");
    }
    // display level: alpha(x') through the h^0 coordinates of x'
    {
      CycScalar lv = CycScalar::zero(order);
      for (size_t j = 0; j < info.tags.size(); ++j) lv += xp_coords[j] * info.tags[j];
      Rational q = lv.to_rational();
      internal_check(q.get_den() == 1, "local_structure: display level not an integer");
      info.level = q.get_num().get_si();
    }
    // canonical coordinates over the affine base: smallest nonnegative combo
    {
      bool found = false;
      std::vector<long> best;
      long best_sum = 0;
      std::vector<long> c(nn, 0);
      const long cap = 6;
      while (true) {
        // test c
        bool match = true;
        for (size_t t = 0; t < info.tags.size() && match; ++t) {
          CycScalar acc = CycScalar::zero(order);
          for (long i = 0; i < nn; ++i)
            acc += CycScalar::integer(c[i], order) * ls.fact.nodes[i].h0_tags[t];
          if (acc != info.tags[t]) match = false;
        }
        if (match) {
          long lsum = 0;
          for (long i = 0; i < nn; ++i) lsum += c[i] * ls.fact.nodes[i].mu_class;
          if (((lsum - info.mu_class) % ls.fact.r) != 0) match = false;
        }
        if (match) {
          long sum = 0;
          for (long v : c) sum += v;
          if (!found || sum < best_sum || (sum == best_sum && c < best)) {
            best = c;
            best_sum = sum;
            found = true;
          }
        }
        long pos = nn - 1;
        while (pos >= 0 && c[pos] == cap) {
          c[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++c[pos];
      }
      internal_check(found, "local_structure: no nonnegative base decomposition for a weight");
      info.coords = best;
    }
    infos.push_back(std::move(info));
  }

  // display order: mu class, the zero element first in class 0, then the
  // x'-level, then coordinates
  std::sort(infos.begin(), infos.end(), [](const PieceInfo& a, const PieceInfo& b) {
    if (a.mu_class != b.mu_class) return a.mu_class < b.mu_class;
    bool a0 = a.mu_class == 0 && a.imaginary;
    bool b0 = b.mu_class == 0 && b.imaginary;
    if (a0 != b0) return a0;
    if (a.level != b.level) return a.level < b.level;
    return a.coords < b.coords;
  });

  ls.groupoid.r = ls.fact.r;
  ls.groupoid.nu0 = nu0;
  for (const auto& info : infos) {
    RootGroupoid::Element e;
    e.coords = info.coords;
    e.h0_tags = info.tags;
    e.mu_class = info.mu_class;
    e.imaginary = info.imaginary;
    e.multiplicity = static_cast<long>(info.basis.size());
    e.level = info.level;
    e.label = coords_label(info.coords);
    ls.groupoid.elements.push_back(std::move(e));
  }
  // sum table by coordinate reduction modulo r * delta
  {
    long n = static_cast<long>(ls.groupoid.elements.size());
    ls.groupoid.sum.assign(n, std::vector<long>(n, -1));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        std::vector<long> target(nn);
        for (long t = 0; t < nn; ++t)
          target[t] = ls.groupoid.elements[i].coords[t] + ls.groupoid.elements[j].coords[t];
        for (long shift = -4; shift <= 4 && ls.groupoid.sum[i][j] < 0; ++shift) {
          std::vector<long> cand(nn);
          for (long t = 0; t < nn; ++t)
            cand[t] = target[t] + shift * ls.fact.r * ls.fact.marks[t];
          for (long e = 0; e < n; ++e)
            if (ls.groupoid.elements[e].coords == cand) {
              ls.groupoid.sum[i][j] = e;
              break;
            }
        }
      }
  }

  ls.omega1_raw = omega1_values(ls.groupoid, ls.kc.s_raw, ls.fact.marks, ls.fact.r, nu0);
  ls.omega1_norm = omega1_values(ls.groupoid, ls.kc.s, ls.fact.marks, ls.fact.r, nu0);
  ls.omega2 = omega2_values(ls.groupoid, ls.omega1_raw, nu0);

  // eigenbasis with groupoid labels; consistency of omega1 with the actual
  // gamma0 exponents is the executable content of the construction
  for (size_t p = 0; p < infos.size(); ++p) {
    internal_check(infos[p].exponent == ls.omega1_raw[p],
                   "local_structure: omega1 does not match the gamma0 exponent on " +
                       ls.groupoid.elements[p].label);
    for (const auto& v : infos[p].basis) {
      ls.basis.push_back(v);
      ls.basis_element.push_back(static_cast<long>(p));
      ls.basis_exponent.push_back(infos[p].exponent);
    }
  }
  return ls;
}

StructLieAlgebra local_structure_algebra(const LocalStructure& ls, long m) {
  internal_check(m >= 1, "local_structure_algebra: m >= 1");
  const StructLieAlgebra& g = ls.lie;
  long order = g.order();
  long gdim = g.dim();
  long dim = static_cast<long>(ls.basis.size());
  long nu0 = ls.nu0;

  // enumerate (basis vector, i) with exponent i nu0 + omega1 < m, then sort
  // stably by exponent (matching the twisted current model layout)
  struct Entry {
    long vec;
    long exponent;
  };
  std::vector<Entry> entries;
  for (long v = 0; v < dim; ++v)
    for (long e = ls.basis_exponent[v]; e < m; e += nu0) entries.push_back({v, e});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.exponent < b.exponent; });

  long qdim = static_cast<long>(entries.size());
  std::vector<std::string> labels;
  std::vector<long> grading;
  for (const auto& en : entries) {
    labels.push_back("A(" + ls.groupoid.elements[ls.basis_element[en.vec]].label + ")_" +
                     std::to_string(en.vec) + "@z^" + std::to_string(en.exponent));
    grading.push_back(en.exponent);
  }

  // bracket via the local structure formula: C coefficients from g, target
  // exponent (i + j + omega2) nu0 + omega1(alpha + beta), delta truncation
  StructureConstants sc;
  for (long a = 0; a < qdim; ++a)
    for (long b = a + 1; b < qdim; ++b) {
      long va = entries[a].vec, vb = entries[b].vec;
      long pa = ls.basis_element[va], pb = ls.basis_element[vb];
      long target = ls.groupoid.sum[pa][pb];
      CycVector br = g.bracket(ls.basis[va], ls.basis[vb]);
      if (target < 0) {
        internal_check(vec_is_zero(br),
                       "local_structure_algebra: nonzero bracket on a non-composable pair");
        continue;
      }
      if (vec_is_zero(br)) continue;
      long carry = ls.omega2[pa][pb];
      long ia = (entries[a].exponent - ls.basis_exponent[va]) / nu0;
      long ib = (entries[b].exponent - ls.basis_exponent[vb]) / nu0;
      long target_exp = (ia + ib + carry) * nu0 + ls.omega1_raw[target];
      internal_check(target_exp == entries[a].exponent + entries[b].exponent,
                     "local_structure_algebra: exponent bookkeeping mismatch");
      if (target_exp >= m) continue;  // delta truncation
      // decompose the g-bracket over the target element's eigenbasis
      std::vector<long> tvecs;
      for (long v = 0; v < dim; ++v)
        if (ls.basis_element[v] == target) tvecs.push_back(v);
      internal_check(!tvecs.empty(), "local_structure_algebra: empty target weight space");
      ExactMatrix B(gdim, static_cast<long>(tvecs.size()), order);
      for (size_t c = 0; c < tvecs.size(); ++c)
        for (long r = 0; r < gdim; ++r) B.at(r, static_cast<long>(c)) = ls.basis[tvecs[c]][r];
      CycVector cs = B.solve(br);
      CycVector recon(gdim, CycScalar::zero(order));
      for (size_t c = 0; c < tvecs.size(); ++c)
        recon = vec_add(recon, vec_scale(cs[c], ls.basis[tvecs[c]]));
      internal_check(vec_is_zero(vec_sub(recon, br)),
                     "local_structure_algebra: bracket escapes the target weight space");
      // locate the quotient basis entry (target vector, target_exp)
      std::vector<std::pair<long, CycScalar>> entry;
      for (size_t c = 0; c < tvecs.size(); ++c) {
        if (cs[c].is_zero()) continue;
        long idx = -1;
        for (long q = 0; q < qdim; ++q)
          if (entries[q].vec == tvecs[c] && entries[q].exponent == target_exp) idx = q;
        internal_check(idx >= 0, "local_structure_algebra: target basis entry missing");
        entry.emplace_back(idx, cs[c]);
      }
      std::sort(entry.begin(), entry.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      if (!entry.empty()) sc[{a, b}] = std::move(entry);
    }
  return StructLieAlgebra(qdim, order, std::move(labels), std::move(sc), std::move(grading));
}

TruncatedCurrentAlgebra local_structure_model(const LocalStructure& ls,
                                              const StructLieAlgebra& g,
                                              const ExactMatrix& gamma0, long m) {
  std::vector<std::pair<CycVector, long>> eigenbasis;
  std::vector<std::string> labels;
  for (size_t v = 0; v < ls.basis.size(); ++v) {
    eigenbasis.emplace_back(ls.basis[v], ls.basis_exponent[v]);
    labels.push_back("A(" + ls.groupoid.elements[ls.basis_element[v]].label + ")_" +
                     std::to_string(v));
  }
  return build_twisted_current_with_basis(g, gamma0, ls.zeta, ls.nu0, m, eigenbasis, labels);
}

}  // namespace alia
