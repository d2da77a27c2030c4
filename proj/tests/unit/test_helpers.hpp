#pragma once

#include <string>

#include "lambdak/algebra.hpp"
#include "lambdak/module.hpp"
#include "lambdak/quiver.hpp"

namespace lambdak::testing {

inline std::string fixture(const std::string& name) { return std::string(LAMBDAK_FIXTURE_DIR) + "/" + name; }

inline AlgebraPresentation load(const std::string& name) { return load_quiver_spec(fixture(name)); }

inline AlgebraPtr lambda_k(const std::string& name, std::size_t k) {
  return BoundQuiverAlgebra::build(build_lambda_k(load(name), k));
}

inline AlgebraPtr algebra(const std::string& name) { return BoundQuiverAlgebra::build(load(name)); }

}  // namespace lambdak::testing
