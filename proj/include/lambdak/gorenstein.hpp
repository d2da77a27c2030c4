#pragma once

// Ext against the regular module, Gorenstein dimension, and the tests for
// Gorenstein projectivity.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lambdak/module.hpp"

namespace lambdak {

/// dim Ext^1(N, L) from the minimal cover 0 -> Omega N -> P -> N -> 0.
std::size_t ext1_dim(const Representation& n, const Representation& l);

/// dim Ext^i(M, A) for i = 1..bound.
struct ExtProfile {
  std::vector<std::size_t> dims;
  bool vanishes() const;
};
ExtProfile ext_dims(const Representation& m, std::size_t bound);

/// Injective dimensions of A_A (right) and of _A A (computed over the opposite
/// algebra). nullopt means "exceeds bound".
struct GorensteinCertificate {
  std::size_t bound = 0;
  std::optional<std::size_t> right;
  std::optional<std::size_t> left;
  std::optional<std::size_t> dimension() const;
  bool sides_agree() const { return right == left; }
};
GorensteinCertificate gorenstein_dimension(const AlgebraPtr& a, std::size_t bound = 16);
/// Cached Gorenstein dimension; throws when either side exceeds the bound.
std::size_t gorenstein_dimension_value(const AlgebraPtr& a);

/// Maximum projective dimension of the simples; nullopt beyond cap.
std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t cap = 32);

enum class GpMethod { ext, restriction, monic, all };
GpMethod parse_gp_method(const std::string& s);
std::string to_string(GpMethod m);

struct GpVerdict {
  bool gorenstein_projective = false;  // authoritative verdict (ext when run)
  std::optional<bool> ext;
  std::optional<bool> restriction;
  std::optional<bool> monic;
  ExtProfile profile;
  bool agree() const;
};

/// restriction needs a Lambda_k shaped algebra; monic needs in addition a
/// hereditary base. ext_bound defaults to the Gorenstein dimension; paranoid
/// raises it to 2d + 2.
GpVerdict is_gorenstein_projective(const Representation& m, GpMethod method = GpMethod::ext,
                                   bool paranoid = false);
bool restriction_test_applies(const AlgebraPtr& a);
bool monic_test_applies(const AlgebraPtr& a);
bool restriction_test(const Representation& m);
bool monic_test(const Representation& m);

/// 0 -> M -> P -> Sigma M -> 0 built from the minimal left add(A)
/// approximation of M. Throws when M is not torsionless.
struct CosyzygyData {
  Representation projective;
  ModuleMap embedding;  // M -> P
  Projection cosyzygy;  // P -> Sigma M
};
CosyzygyData gp_cosyzygy_data(const Representation& m);
Representation gp_cosyzygy(const Representation& m);
Representation gp_cosyzygy(const Representation& m, std::size_t times);

/// M* = Hom(M, A) as a right module over the opposite algebra.
struct StarDual {
  Representation module;
  // Per vertex i, the basis of Hom(M, P(i)) giving the coordinates of M* at i.
  std::vector<std::vector<ModuleMap>> basis;
};
StarDual star_dual(const Representation& m);

}  // namespace lambdak
