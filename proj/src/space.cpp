#include "cquat/space.hpp"

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace cquat {

namespace {

Eigen::Matrix<double, 4, 3> real_matrix(const GeneratorTriple& gen) {
  Eigen::Matrix<double, 4, 3> m;
  m << 1.0, gen.a1.real(), gen.b1.real(),  //
      0.0, gen.a1.imag(), gen.b1.imag(),   //
      1.0, gen.a2.real(), gen.b2.real(),   //
      0.0, gen.a2.imag(), gen.b2.imag();
  return m;
}

Eigen::Vector3d singular_values(const GeneratorTriple& gen) {
  Eigen::JacobiSVD<Eigen::Matrix<double, 4, 3>> svd(real_matrix(gen));
  return svd.singularValues();
}

}  // namespace

GeneratorTriple GeneratorTriple::standard() {
  return {Complex{0.0, 1.0}, Complex{0.0, 2.0}, Complex{1.0, 1.0},
          Complex{-1.0, 1.0}};
}

IndependenceCheck check_independence(const GeneratorTriple& gen) {
  const Eigen::Vector3d sv = singular_values(gen);
  const double smallest = sv.minCoeff();
  return {std::isfinite(smallest) && smallest > kIndependenceThreshold,
          smallest};
}

void require_independent(const GeneratorTriple& gen) {
  const auto check = check_independence(gen);
  if (!check.independent) {
    throw std::invalid_argument(
        "generators i1, i2, i3 are linearly dependent over R (smallest "
        "singular value " +
        std::to_string(check.smallest_singular_value) + ")");
  }
}

double component_bound_constant(const GeneratorTriple& gen) {
  require_independent(gen);
  return singular_values(gen).maxCoeff();
}

}  // namespace cquat
