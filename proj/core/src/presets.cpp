#include "alia/presets.hpp"

#include "alia/errors.hpp"

namespace alia {

namespace {

ExactMatrix unit_matrix(long n, long order, long i, long j, long sign = 1) {
  ExactMatrix m(n, n, order);
  m.at(i, j) = CycScalar::integer(sign, order);
  return m;
}

std::vector<ExactMatrix> sl2_matrices(long order) {
  ExactMatrix h(2, 2, order);
  h.at(0, 0) = CycScalar::one(order);
  h.at(1, 1) = -CycScalar::one(order);
  return {h, unit_matrix(2, order, 0, 1), unit_matrix(2, order, 1, 0)};
}

std::vector<ExactMatrix> sl3_matrices(long order) {
  ExactMatrix e0 = unit_matrix(3, order, 2, 0);  // lowers the highest root
  ExactMatrix e1 = unit_matrix(3, order, 0, 1);
  ExactMatrix e2 = unit_matrix(3, order, 1, 2);
  ExactMatrix f0 = unit_matrix(3, order, 0, 2);  // [e1, e2]
  ExactMatrix f1 = unit_matrix(3, order, 1, 0);  // [e2, e0]
  ExactMatrix f2 = unit_matrix(3, order, 2, 1);  // [e0, e1]
  ExactMatrix h1(3, 3, order), h2(3, 3, order);
  h1.at(0, 0) = CycScalar::one(order);
  h1.at(1, 1) = -CycScalar::one(order);
  h2.at(1, 1) = CycScalar::one(order);
  h2.at(2, 2) = -CycScalar::one(order);
  return {e0, e1, e2, f0, f1, f2, h1, h2};
}

}  // namespace

ExactMatrix sl3_basis_matrix(long index, long order) {
  auto ms = sl3_matrices(order);
  internal_check(index >= 0 && index < static_cast<long>(ms.size()), "sl3_basis_matrix: index");
  return ms[index];
}

StructLieAlgebra lie_preset(const std::string& name, long order) {
  if (name == "sl2")
    return StructLieAlgebra::from_matrix_basis(sl2_matrices(order), {"h", "e", "f"}, order);
  if (name == "sl3")
    return StructLieAlgebra::from_matrix_basis(
        sl3_matrices(order), {"E0", "E1", "E2", "F0", "F1", "F2", "H1", "H2"}, order);
  throw ConfigError("unknown Lie algebra preset '" + name + "' (expected sl2 or sl3)");
}

}  // namespace alia
