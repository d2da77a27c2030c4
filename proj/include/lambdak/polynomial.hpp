#pragma once

// Univariate polynomials over GF(p), just enough to find eigenvalues of
// endomorphisms during Krull-Schmidt splitting.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lambdak/matrix.hpp"

namespace lambdak {

/// Coefficients in increasing degree; no trailing zeros.
using Polynomial = std::vector<PrimeField::value_type>;

Polynomial characteristic_polynomial(const Matrix& m);

PrimeField::value_type evaluate(const PrimeField& f, const Polynomial& p, PrimeField::value_type x);

/// Some root of p in GF(p), if one exists.
std::optional<PrimeField::value_type> find_root(const PrimeField& f, const Polynomial& p, std::mt19937_64& rng);

}  // namespace lambdak
