#pragma once

#include <string>

#include "alia/group_action.hpp"
#include "alia/lie_algebra.hpp"

namespace alia {

/// Canonical JSON form of a structure-constant Lie algebra:
///   {"dim": n, "field_order": n, "labels": [...], "grading": [...],
///    "entries": [[i, j, k, "scalar"], ...]}
/// with exact scalar strings; the round trip is bit-exact.
std::string lie_algebra_to_json(const StructLieAlgebra& g);
StructLieAlgebra lie_algebra_from_json(const std::string& text);

/// Action config schema:
///   {"field_order": n?, "lie": "sl2"|"sl3"|{inline algebra},
///    "poles": ["inf", "<scalar expr>", ...],
///    "generators": [{"name": "b", "lie_matrix": [["expr",...],...],
///                    "mobius": [["expr","expr"],["expr","expr"]]}, ...],
///    "named_elements": {"a": "c*b"}?}
/// Scalar expressions use the shared cyclotomic syntax. Loading validates
/// automorphisms, closure, faithfulness and pole invariance.
GroupAction parse_action_config(const std::string& text);
GroupAction load_action_config(const std::string& path);

/// Named element words declared in a config ("a" -> "c*b").
std::vector<std::pair<std::string, std::string>> config_named_elements(const std::string& text);
std::vector<std::pair<std::string, std::string>> file_named_elements(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace alia
