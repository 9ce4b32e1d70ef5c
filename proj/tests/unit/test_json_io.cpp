#include <doctest.h>

#include "alia/errors.hpp"
#include "alia/json_io.hpp"
#include "alia/presets.hpp"

using namespace alia;

namespace {
std::string preset(const char* name) { return std::string(ALIA_PRESET_DIR) + "/" + name; }
}  // namespace

TEST_CASE("configs parse and carry named elements") {
  auto names = file_named_elements(preset("sl3_d6.json"));
  REQUIRE(names.size() == 1);
  CHECK(names[0].first == "a");
  CHECK(names[0].second == "c*b");
}

TEST_CASE("malformed configs raise ConfigError") {
  CHECK_THROWS_AS(parse_action_config("{not json"), ConfigError);
  CHECK_THROWS_AS(parse_action_config("{}"), ConfigError);
  CHECK_THROWS_AS(parse_action_config(R"({"lie": "sl9", "poles": ["inf"]})"), ConfigError);
  CHECK_THROWS_AS(load_action_config("/nonexistent/path.json"), ConfigError);
  // ragged matrix
  std::string bad = R"({"lie": "sl2", "poles": ["inf"],
    "generators": [{"name": "g", "lie_matrix": [["1","0"],["0","1","0"]],
                    "mobius": [["1","0"],["0","1"]]}]})";
  CHECK_THROWS_AS(parse_action_config(bad), ConfigError);
}

TEST_CASE("inline structure constants load") {
  std::string cfg = R"({
    "lie": {"dim": 2, "field_order": 1, "labels": ["h", "x"],
            "entries": [[0, 1, 1, "2"]]},
    "poles": ["inf"],
    "generators": []
  })";
  auto action = parse_action_config(cfg);
  CHECK(action.lie().dim() == 2);
  CycVector br = action.lie().bracket(action.lie().basis_vector(0), action.lie().basis_vector(1));
  CHECK(br[1] == CycScalar::integer(2, action.field_order()));
}

TEST_CASE("lie algebra JSON needs consistent keys") {
  CHECK_THROWS_AS(lie_algebra_from_json("{}"), ConfigError);
  CHECK_THROWS_AS(lie_algebra_from_json(R"({"dim": 2, "labels": ["a","b"],
    "entries": [[1, 0, 0, "1"]]})"),
                  ConfigError);  // needs i < j
}

TEST_CASE("session field order is the lcm of everything in the config") {
  auto action = load_action_config(preset("sl3_d6.json"));
  CHECK(action.field_order() == 12);
  auto z5 = load_action_config(preset("sl2_z5.json"));
  CHECK(z5.field_order() == 5);
}
