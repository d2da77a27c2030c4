#pragma once

// Auslander-Reiten theory: transpose, translates, almost split sequences,
// stable Hom, and enumeration of the indecomposable Gorenstein projectives.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lambdak/module.hpp"

namespace lambdak {

/// Tr M over the opposite algebra, from a minimal projective presentation.
Representation transpose_tr(const Representation& m);
/// D Tr; throws on projective input.
Representation tau(const Representation& m);
/// Tr D; throws on injective input.
Representation tau_inverse(const Representation& m);

/// Translate of the Frobenius category Gproj(A) for a d-Gorenstein algebra:
/// Sigma^d Omega^d tau M with projective summands removed.
Representation relative_tau(const Representation& m, std::mt19937_64& rng);
/// Inverse translate through the duality Hom(-, A) onto Gproj of the opposite algebra.
Representation relative_tau_inverse(const Representation& m, std::mt19937_64& rng);

struct StableHom {
  std::size_t hom_dim = 0;
  std::size_t dim = 0;
  std::vector<ModuleMap> basis;  // representatives of a basis of the quotient
};
/// Hom(M, N) modulo maps factoring through the projective cover of N.
StableHom stable_hom(const Representation& m, const Representation& n);

struct AlmostSplitSequence {
  Representation left, middle, right;
  ModuleMap f;  // left -> middle
  ModuleMap g;  // middle -> right
  std::size_t ext_dim = 0;  // dim Ext^1(right, left)
};
/// 0 -> L -> E -> M -> 0 representing a nonzero socle element of Ext^1(M, L)
/// as a right End(M)-module.
AlmostSplitSequence almost_split_sequence(const Representation& m, const Representation& left);
/// Left term tau(m).
AlmostSplitSequence almost_split_sequence(const Representation& m);

struct SequenceCheck {
  bool exact = false;
  bool non_split = false;
  bool ok() const { return exact && non_split; }
};
SequenceCheck check_sequence(const AlmostSplitSequence& s);
/// Whether h: X -> right factors through the middle term.
bool factors_through_middle(const AlmostSplitSequence& s, const Representation& x, const ModuleMap& h);
/// Whether f lies in the span of the family.
bool in_span(const PrimeField& field, const std::vector<ModuleMap>& family, const ModuleMap& f);
/// Basis of rad(X, Y) for indecomposable X, Y; same_object selects rad End(X).
std::vector<ModuleMap> radical_maps(const Representation& x, const Representation& y, bool same_object);

enum class KnitMode { knit, sweep };
KnitMode parse_knit_mode(const std::string& s);
std::string to_string(KnitMode m);

struct KnitOptions {
  std::size_t budget = 200;
  std::size_t dim_cap = 64;
  KnitMode mode = KnitMode::knit;
  bool allow_higher_gorenstein = false;
  std::size_t sweep_samples = 120;
  std::uint64_t seed = 0x5eed;
};

struct ARNode {
  Representation module;
  bool projective = false;
  std::optional<std::size_t> tau;
  std::optional<std::size_t> tau_inverse;
  std::vector<std::pair<std::size_t, std::size_t>> middle;  // (node, multiplicity)
};

struct ARQuiver {
  AlgebraPtr algebra;
  std::size_t gorenstein_dim = 0;
  KnitMode mode = KnitMode::knit;
  std::vector<ARNode> nodes;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrows;  // (from, to) -> multiplicity
  bool closed = false;
  std::vector<std::string> diagnostics;
  std::size_t num_projective() const;
};

/// Enumerates indecomposable Gorenstein projectives by closing the seeds under
/// the relative translates and middle terms of almost split sequences.
ARQuiver knit_gproj(const AlgebraPtr& a, const KnitOptions& opts = {});

/// dim rad(X,Y)/rad^2(X,Y) computed against the node set; needs a closed quiver.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> irreducible_map_counts(const ARQuiver& q);

/// Omega on nonprojective nodes as a permutation of node indices, or nullopt.
std::optional<std::vector<std::size_t>> syzygy_permutation(const ARQuiver& q);

/// Index of the node isomorphic to m.
std::optional<std::size_t> find_node(const ARQuiver& q, const Representation& m);

std::string to_dot(const ARQuiver& q);

}  // namespace lambdak
