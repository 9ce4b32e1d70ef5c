#pragma once

#include <string>

#include "alia/lie_algebra.hpp"

namespace alia {

/// Chevalley-basis presets wired from their defining matrix realizations:
///   "sl2": basis (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h;
///   "sl3": basis (E0, E1, E2, F0, F1, F2, H1, H2) where E1, E2 raise the
///          simple roots, E0 lowers the highest root, F_i = brackets of the
///          E's and H_i = [E_i, F_i].
/// Throws ConfigError for unknown names.
StructLieAlgebra lie_preset(const std::string& name, long order);

/// 3x3 matrix realization behind the "sl3" preset (index into the basis).
ExactMatrix sl3_basis_matrix(long index, long order);

}  // namespace alia
