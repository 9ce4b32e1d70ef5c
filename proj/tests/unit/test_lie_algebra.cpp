#include <doctest.h>

#include <random>

#include "alia/errors.hpp"
#include "alia/json_io.hpp"
#include "alia/presets.hpp"

using namespace alia;

namespace {

CycVector random_vec(std::mt19937& rng, long dim, long order) {
  std::uniform_int_distribution<int> coef(-4, 4);
  CycVector v(dim, CycScalar::zero(order));
  for (auto& x : v) x = CycScalar::integer(coef(rng), order);
  return v;
}

}  // namespace

TEST_CASE("sl2 Chevalley conventions") {
  auto g = lie_preset("sl2", 1);
  // [e, f] = h
  CycVector ef = g.bracket(g.basis_vector(1), g.basis_vector(2));
  CHECK(ef[0].is_one());
  CHECK(ef[1].is_zero());
  CHECK(ef[2].is_zero());
  // [h, e] = 2e, [h, f] = -2f
  CHECK(g.bracket(g.basis_vector(0), g.basis_vector(1))[1] == CycScalar::integer(2));
  CHECK(g.bracket(g.basis_vector(0), g.basis_vector(2))[2] == CycScalar::integer(-2));
}

TEST_CASE("sl3 preset brackets follow the matrix realization") {
  auto g = lie_preset("sl3", 1);
  // F0 = [E1, E2], H1 = [E1, F1]
  CycVector f0 = g.bracket(g.basis_vector(1), g.basis_vector(2));
  CHECK(f0[3].is_one());
  CycVector h1 = g.bracket(g.basis_vector(1), g.basis_vector(4));
  CHECK(h1[6].is_one());
}

TEST_CASE("bracket is alternating on random vectors") {
  auto g = lie_preset("sl3", 1);
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    CycVector x = random_vec(rng, g.dim(), 1);
    CHECK(vec_is_zero(g.bracket(x, x)));
    CycVector y = random_vec(rng, g.dim(), 1);
    CHECK(vec_is_zero(vec_add(g.bracket(x, y), g.bracket(y, x))));
  }
}

TEST_CASE("constructor validation rejects Jacobi violations") {
  StructureConstants sc;
  sc[{0, 1}] = {{2, CycScalar::one(1)}};
  sc[{0, 2}] = {{1, CycScalar::one(1)}};
  sc[{1, 2}] = {{1, CycScalar::one(1)}};  // breaks Jacobi
  CHECK_THROWS_AS(StructLieAlgebra(3, 1, {"a", "b", "c"}, sc), InternalError);
}

TEST_CASE("ideal closure") {
  auto g = lie_preset("sl2", 1);
  Subspace full = Subspace::full(3, 1);
  CHECK(g.ideal_closure(full) == full);
  Subspace zero = Subspace::zero(3, 1);
  CHECK(g.ideal_closure(zero) == zero);
  // span{e}: [h,e] and [f,e] generate everything
  Subspace e(3, 1, {g.basis_vector(1)});
  CHECK(g.ideal_closure(e).dim() == 3);
  // monotone + idempotent + extensive
  Subspace closed = g.ideal_closure(e);
  CHECK(g.ideal_closure(closed) == closed);
  CHECK(closed.contains(e));
}

TEST_CASE("derived series and solvability") {
  // abelian
  StructLieAlgebra ab(2, 1, {"x", "y"}, {});
  auto chain = ab.derived_series();
  CHECK(chain.back().dim() == 0);
  CHECK(ab.is_solvable());
  // sl2 is perfect
  auto g = lie_preset("sl2", 1);
  auto chain2 = g.derived_series();
  CHECK(chain2.back().dim() == 3);
  CHECK(!g.is_solvable());
  // non-ideals are rejected
  Subspace e(3, 1, {g.basis_vector(1)});
  CHECK_THROWS_AS(g.derived_series(e), PreconditionError);
}

TEST_CASE("killing form and radical") {
  auto g = lie_preset("sl2", 1);
  ExactMatrix kappa = g.killing_form();
  CHECK(kappa == kappa.transpose());
  CHECK(!kappa.det().is_zero());
  CHECK(g.radical().dim() == 0);
  // invariance kappa([x,y],z) = kappa(x,[y,z]) spot check
  std::mt19937 rng(8);
  for (int t = 0; t < 5; ++t) {
    CycVector x = random_vec(rng, 3, 1), y = random_vec(rng, 3, 1), z = random_vec(rng, 3, 1);
    auto pair = [&](const CycVector& a, const CycVector& b) {
      CycScalar acc = CycScalar::zero(1);
      for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) acc += a[i] * kappa.at(i, j) * b[j];
      return acc;
    };
    CHECK(pair(g.bracket(x, y), z) == pair(x, g.bracket(y, z)));
  }

  // 2-dim nonabelian <h, x>, [h, x] = 2x: radical is everything
  StructureConstants sc;
  sc[{0, 1}] = {{1, CycScalar::integer(2)}};
  StructLieAlgebra b2(2, 1, {"h", "x"}, sc);
  CHECK(b2.radical().dim() == 2);
  CHECK(b2.is_solvable());  // oracle: derived series reaches zero
}

TEST_CASE("radical is solvable and the quotient has nondegenerate Killing form") {
  StructureConstants sc;
  sc[{0, 1}] = {{1, CycScalar::integer(2)}};
  StructLieAlgebra b2(2, 1, {"h", "x"}, sc);
  Subspace rad = b2.radical();
  CHECK(b2.is_solvable(rad));
  // gl2-like: sl2 + center
  auto g = lie_preset("sl2", 1);
  StructureConstants sc4 = g.structure_constants();
  StructLieAlgebra gl(4, 1, {"h", "e", "f", "z"}, sc4);
  Subspace rad4 = gl.radical();
  CHECK(rad4.dim() == 1);
  auto q = gl.quotient_by_ideal(rad4);
  CHECK(q.algebra.dim() == 3);
  CHECK(!q.algebra.killing_form().det().is_zero());
}

TEST_CASE("verify_isomorphism") {
  auto g = lie_preset("sl2", 1);
  CHECK(StructLieAlgebra::verify_isomorphism(ExactMatrix::identity(3, 1), g, g));
  // swap e <-> f, h -> -h (Chevalley involution)
  ExactMatrix f(3, 3, 1);
  f.at(0, 0) = -CycScalar::one(1);
  f.at(2, 1) = CycScalar::one(1);
  f.at(1, 2) = CycScalar::one(1);
  CHECK(StructLieAlgebra::verify_isomorphism(f, g, g));
  // a non-homomorphism
  ExactMatrix bad = ExactMatrix::identity(3, 1);
  bad.at(0, 0) = CycScalar::integer(2);
  CHECK(!StructLieAlgebra::verify_isomorphism(bad, g, g));
  // dimension mismatch is an error, not "false"
  StructLieAlgebra ab(2, 1, {"x", "y"}, {});
  CHECK_THROWS_AS(StructLieAlgebra::verify_isomorphism(ExactMatrix::identity(2, 1), ab, g),
                  PreconditionError);
}

TEST_CASE("JSON round trip is bit-exact") {
  auto g = lie_preset("sl3", 12);
  std::string once = lie_algebra_to_json(g);
  StructLieAlgebra back = lie_algebra_from_json(once);
  CHECK(lie_algebra_to_json(back) == once);
  CHECK(back.dim() == g.dim());
  // and with cyclotomic constants
  StructureConstants sc;
  sc[{0, 1}] = {{1, CycScalar::zeta(5) + CycScalar::rational(Rational(1, 3), 5)}};
  StructLieAlgebra h(2, 5, {"a", "b"}, sc);
  std::string text = lie_algebra_to_json(h);
  CHECK(lie_algebra_to_json(lie_algebra_from_json(text)) == text);
}
