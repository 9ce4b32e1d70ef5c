#include <doctest.h>

#include "alia/errors.hpp"
#include "alia/json_io.hpp"
#include "alia/presets.hpp"
#include "alia/rational_io.hpp"

using namespace alia;

namespace {
std::string preset(const char* name) { return std::string(ALIA_PRESET_DIR) + "/" + name; }
}  // namespace

TEST_CASE("sl2/Z5 preset closes to the cyclic group of order five") {
  auto action = load_action_config(preset("sl2_z5.json"));
  CHECK(action.size() == 5);
  CHECK(action.field_order() == 5);
  long r = action.element_by_word("r");
  CHECK(action.element_order(r) == 5);
  CHECK(action.multiply(r, action.inverse(r)) == 0);
  // stabilizers: full group at 0, trivial at a free point
  auto s0 = action.stabilizer(SpherePoint::finite(CycScalar::zero(5)));
  CHECK(s0.nu0 == 5);
  auto s1 = action.stabilizer(SpherePoint::finite(CycScalar::one(5)));
  CHECK(s1.nu0 == 1);
  CHECK(s1.generator == 0);
}

TEST_CASE("trivial preset is the one-element group") {
  auto action = load_action_config(preset("sl2_trivial.json"));
  CHECK(action.size() == 1);
  CHECK(action.stabilizer(SpherePoint::finite(CycScalar::integer(7))).nu0 == 1);
}

TEST_CASE("D6 preset: closure, element words, stabilizers") {
  auto action = load_action_config(preset("sl3_d6.json"));
  CHECK(action.size() == 12);
  long a = action.element_by_word("c*b");
  CHECK(action.element_order(a) == 6);
  CHECK(action.element_by_word("b*b") == 0);
  // relation a = c b <=> a b c = 1
  long b = action.element_by_word("b");
  long c = action.element_by_word("c");
  CHECK(action.multiply(action.multiply(a, b), c) == 0);

  // stabilizer orders via direct enumeration of the twelve Moebius maps
  auto check_stab = [&](const SpherePoint& x, long expected) {
    long count = 0;
    for (long e = 0; e < action.size(); ++e)
      if (action.apply_sphere(e, x) == x.embed(action.field_order())) ++count;
    CHECK(count == expected);  // oracle
    CHECK(action.stabilizer(x).nu0 == expected);
  };
  check_stab(SpherePoint::finite(-CycScalar::one(12)), 2);                      // b point
  check_stab(SpherePoint::finite(parse_scalar("1/(zeta12-2)", 12)), 2);         // c point
  check_stab(SpherePoint::finite(CycScalar::zero(12)), 6);                      // a point
  check_stab(SpherePoint::finite(parse_scalar("-1/2", 12)), 6);                 // other a point
  check_stab(SpherePoint::finite(CycScalar::integer(3, 12)), 1);                // free point
}

TEST_CASE("points of the pole set are rejected by stabilizer") {
  auto action = load_action_config(preset("sl2_z5.json"));
  CHECK_THROWS_AS(action.stabilizer(SpherePoint::infinity()), PreconditionError);
}

TEST_CASE("pole sets must be invariant") {
  // rotation action with a non-invariant pole set
  std::string bad = R"({
    "field_order": 5, "lie": "sl2",
    "poles": ["inf", "1"],
    "generators": [{"name": "r",
      "lie_matrix": [["1","0","0"],["0","zeta5^3","0"],["0","0","zeta5^2"]],
      "mobius": [["zeta5","0"],["0","1"]]}]
  })";
  CHECK_THROWS_AS(parse_action_config(bad), PreconditionError);
}

TEST_CASE("non-automorphism generators are rejected") {
  std::string bad = R"({
    "field_order": 5, "lie": "sl2",
    "poles": ["inf"],
    "generators": [{"name": "r",
      "lie_matrix": [["1","0","0"],["0","zeta5","0"],["0","0","zeta5^2"]],
      "mobius": [["zeta5","0"],["0","1"]]}]
  })";
  CHECK_THROWS_AS(parse_action_config(bad), PreconditionError);
}

TEST_CASE("non-faithful actions are rejected with a diagnostic") {
  // order-2 sphere action paired with the identity on the Lie algebra
  std::string bad = R"({
    "field_order": 2, "lie": "sl2",
    "poles": ["inf", "0"],
    "generators": [{"name": "t",
      "lie_matrix": [["1","0","0"],["0","1","0"],["0","0","1"]],
      "mobius": [["-1","0"],["0","1"]]}]
  })";
  try {
    parse_action_config(bad);
    CHECK(false);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("faithful") != std::string::npos);
  }
}

TEST_CASE("infinite input is caught by the closure cap") {
  // a Moebius translation has infinite order
  std::string bad = R"({
    "field_order": 1, "lie": "sl2",
    "poles": ["inf"],
    "generators": [{"name": "t",
      "lie_matrix": [["1","0","0"],["0","1","0"],["0","0","1"]],
      "mobius": [["1","1"],["0","1"]]}]
  })";
  CHECK_THROWS_AS(parse_action_config(bad), PreconditionError);
}

TEST_CASE("group elements act on functions by pullback") {
  auto action = load_action_config(preset("sl2_z5.json"));
  long r = action.element_by_word("r");
  auto f = parse_rational("z^5", {SpherePoint::infinity()}, 5);
  CHECK(action.apply_function(r, f) == f.embed(5));  // z^5 is invariant
  auto g = parse_rational("z^2", {SpherePoint::infinity()}, 5);
  CHECK(action.apply_function(r, g) == g.embed(5) * CycScalar::zeta_pow(5, 3));
}
