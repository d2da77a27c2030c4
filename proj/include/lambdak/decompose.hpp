#pragma once

// Krull-Schmidt decomposition and isomorphism certificates.

#include <optional>
#include <random>
#include <vector>

#include "lambdak/module.hpp"

namespace lambdak {

struct Summand {
  Representation module;
  ModuleMap inclusion;   // summand -> M
  ModuleMap projection;  // M -> summand
  std::size_t end_mod_rad = 1;  // dim End/rad End
  bool absolutely_indecomposable = true;
};

struct EndomorphismData {
  std::vector<ModuleMap> basis;
  std::vector<ModuleMap> radical;  // basis of rad End(M)
  std::size_t semisimple_dim = 0;  // dim End/rad
};

/// Radical via the trace form; needs characteristic > dim M.
EndomorphismData endomorphisms(const Representation& m);

std::vector<Summand> decompose(const Representation& m, std::mt19937_64& rng);
std::vector<Summand> decompose(const Representation& m, std::uint64_t seed = 0x5eed);

struct SummandClass {
  Summand representative;
  std::size_t multiplicity = 1;
};
std::vector<SummandClass> decompose_grouped(const Representation& m, std::mt19937_64& rng);

/// True when End(M) is local with residue field K.
bool is_indecomposable(const Representation& m);

/// Invertible homomorphism m -> n, or nullopt.
std::optional<ModuleMap> is_isomorphic(const Representation& m, const Representation& n, std::mt19937_64& rng);
std::optional<ModuleMap> is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed = 0x150);
/// Deterministic test for absolutely indecomposable modules: m and n are
/// isomorphic iff tr(g f) != 0 for some f in Hom(m,n), g in Hom(n,m).
std::optional<ModuleMap> isomorphic_indecomposables(const Representation& m, const Representation& n);

/// Removes projective summands (in the given order of summands).
Representation strip_projectives(const Representation& m, std::mt19937_64& rng);

}  // namespace lambdak
