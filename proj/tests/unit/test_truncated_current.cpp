#include <doctest.h>

#include "alia/errors.hpp"
#include "alia/json_io.hpp"
#include "alia/presets.hpp"
#include "alia/truncated_current.hpp"

using namespace alia;

namespace {

std::string preset(const char* name) { return std::string(ALIA_PRESET_DIR) + "/" + name; }

// gamma0 of the sl2/Z5 preset: h -> h, e -> zeta^3 e, f -> zeta^2 f
ExactMatrix z5_gamma0() {
  ExactMatrix m(3, 3, 5);
  m.at(0, 0) = CycScalar::one(5);
  m.at(1, 1) = CycScalar::zeta_pow(5, 3);
  m.at(2, 2) = CycScalar::zeta_pow(5, 2);
  return m;
}

// the torus local model: gamma0 h = h, gamma0 e = -e, gamma0 f = -f
ExactMatrix torus_gamma0() {
  ExactMatrix m(3, 3, 2);
  m.at(0, 0) = CycScalar::one(2);
  m.at(1, 1) = -CycScalar::one(2);
  m.at(2, 2) = -CycScalar::one(2);
  return m;
}

}  // namespace

TEST_CASE("untwisted truncation: dim = m dim(g)") {
  auto g = lie_preset("sl2", 1);
  for (long m : {1L, 2L, 4L}) {
    auto T = build_twisted_current(g, ExactMatrix::identity(3, 1), m);
    CHECK(T.algebra.dim() == 3 * m);
  }
}

TEST_CASE("sl2 with the order-5 torsion at m = 6: exponent census") {
  auto g = lie_preset("sl2", 5);
  auto T = build_twisted_current(g, z5_gamma0(), 6);
  // oracle: eigenspace dims are 1,0,1,1,0 for classes 0,1,2,3,4;
  // exponents below 6: h at 0 and 5, f at 2, e at 3
  REQUIRE(T.algebra.dim() == 4);
  std::vector<std::string> labels = T.algebra.labels();
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"e@z^3", "f@z^2", "h@z^0", "h@z^5"});
  // census identity
  long total = 0;
  auto projs = eigenprojectors(z5_gamma0(), 5);
  for (long k = 0; k < 6; ++k) total += projs[k % 5].rank();
  CHECK(total == T.algebra.dim());
}

TEST_CASE("torus local model: h even, e and f odd") {
  auto g = lie_preset("sl2", 2);
  auto T = build_twisted_current(g, torus_gamma0(), 6);
  for (long i = 0; i < T.algebra.dim(); ++i) {
    const std::string& l = T.algebra.labels()[i];
    bool h = l.rfind("h@", 0) == 0;
    CHECK((T.exponents[i] % 2 == 0) == h);
  }
  CHECK(T.algebra.dim() == 3 + 3 + 3);  // h: 0,2,4; e: 1,3,5; f: 1,3,5
}

TEST_CASE("non-automorphisms are rejected") {
  auto g = lie_preset("sl2", 5);
  ExactMatrix bad(3, 3, 5);
  bad.at(0, 0) = CycScalar::one(5);
  bad.at(1, 1) = CycScalar::zeta(5);
  bad.at(2, 2) = CycScalar::zeta(5);
  CHECK_THROWS_AS(build_twisted_current(g, bad, 3), PreconditionError);
}

TEST_CASE("contraction at m = nu0") {
  // nu0 = 1: the algebra itself
  auto g1 = lie_preset("sl2", 1);
  auto T1 = build_twisted_current(g1, ExactMatrix::identity(3, 1), 1);
  std::string report;
  CHECK(contraction_check(T1, g1, &report));

  // sl2/order-5 at m = 5: [e z^3, f z^2] dies, [h, e], [h, f] survive
  auto g5 = lie_preset("sl2", 5);
  auto T5 = build_twisted_current(g5, z5_gamma0(), 5);
  CHECK(T5.algebra.dim() == 3);
  CHECK(contraction_check(T5, g5, &report));
  long ie = -1, if_ = -1, ih = -1;
  for (long i = 0; i < 3; ++i) {
    if (T5.algebra.labels()[i] == "e@z^3") ie = i;
    if (T5.algebra.labels()[i] == "f@z^2") if_ = i;
    if (T5.algebra.labels()[i] == "h@z^0") ih = i;
  }
  CHECK(vec_is_zero(T5.algebra.bracket(T5.algebra.basis_vector(ie), T5.algebra.basis_vector(if_))));
  CHECK(!vec_is_zero(T5.algebra.bracket(T5.algebra.basis_vector(ih), T5.algebra.basis_vector(ie))));

  // order-2 torus model at m = 2: dim 3 and [e z, f z] = 0
  auto g2 = lie_preset("sl2", 2);
  auto T2 = build_twisted_current(g2, torus_gamma0(), 2);
  CHECK(T2.algebra.dim() == 3);
  CHECK(contraction_check(T2, g2, &report));
  // m != nu0 is rejected
  auto T3 = build_twisted_current(g2, torus_gamma0(), 3);
  CHECK_THROWS_AS(contraction_check(T3, g2, &report), PreconditionError);
}

TEST_CASE("leading coefficient isomorphism on small cases") {
  auto z5 = load_action_config(preset("sl2_z5.json"));
  for (long m : {1L, 3L, 5L}) {
    auto iso = leading_coefficient_iso(z5, SpherePoint::finite(CycScalar::zero(5)), m);
    CHECK(iso.verified);
    CHECK(iso.quotient.algebra.dim() == iso.model.algebra.dim());
    // composition factor layers match the eigenspace dims (Theorem's content)
    auto projs = eigenprojectors(z5_gamma0(), 5);
    for (long k = 0; k < m; ++k) CHECK(iso.layer_dims[k] == projs[k % 5].rank());
  }
  auto trivial = load_action_config(preset("sl2_trivial.json"));
  auto iso = leading_coefficient_iso(trivial, SpherePoint::finite(CycScalar::integer(2)), 2);
  CHECK(iso.verified);
  CHECK(iso.quotient.algebra.dim() == 6);
}

TEST_CASE("bracket tables are printable") {
  auto g = lie_preset("sl2", 5);
  auto T = build_twisted_current(g, z5_gamma0(), 6);
  std::string table = T.bracket_table();
  CHECK(table.find("[h@z^0, e@z^3]") != std::string::npos);
}
