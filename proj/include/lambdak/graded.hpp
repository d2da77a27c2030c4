#pragma once

// Graded modules over a positively graded bound quiver algebra.
//
// A graded module supported in degrees [lo, lo + width) is a representation of
// the window covering algebra: vertices (v, slot), arrows (a, slot) ->
// (t(a), slot + deg a), relations lifted slot by slot. Degree d sits in slot
// d - lo. The cyclic cover with slots modulo m realizes Z/mZ gradings.

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lambdak/module.hpp"

namespace lambdak {

struct CoveringAlgebra {
  AlgebraPtr base;
  AlgebraPtr algebra;
  std::size_t slots = 1;
  bool cyclic = false;
  // arrow_index[a * slots + slot]; nullopt when the lifted arrow leaves the window.
  std::vector<std::optional<std::size_t>> arrow_index;

  std::size_t vertex(std::size_t v, std::size_t slot) const { return slot * base->num_vertices() + v; }
  std::optional<std::size_t> arrow(std::size_t a, std::size_t slot) const { return arrow_index.at(a * slots + slot); }
};
using CoverPtr = std::shared_ptr<const CoveringAlgebra>;

/// Window cover with the given number of slots (cached per algebra and width).
CoverPtr window_cover(const AlgebraPtr& a, std::size_t width);
/// Cover with slots modulo m; m = 1 gives the algebra itself.
CoverPtr cyclic_cover(const AlgebraPtr& a, std::size_t modulus);

struct GradedModule {
  AlgebraPtr algebra;
  int lo = 0;
  CoverPtr cover;
  Representation rep;  // over cover->algebra

  std::size_t width() const { return cover->slots; }
  int hi() const { return lo + static_cast<int>(width()) - 1; }
  std::size_t dim(std::size_t v, int degree) const;
  std::size_t total_dim() const { return rep.total_dim(); }
  bool is_zero() const { return rep.is_zero(); }
  /// Smallest and largest degree carrying a nonzero slice.
  std::optional<std::pair<int, int>> support() const;
};

/// Maps are stored in the frame (lo, width) of their source and target, which must agree.
struct GradedMap {
  GradedModule source, target;
  ModuleMap map;
};

GradedModule graded_zero(const AlgebraPtr& a);
GradedModule graded_simple(const AlgebraPtr& a, std::size_t v, int degree);
/// Wraps a representation of window_cover(a, width) placed at lo.
GradedModule make_graded(const AlgebraPtr& a, int lo, const Representation& rep);

/// Free graded module on generators (vertex, degree). The coordinates at each
/// cover vertex list (generator, basis element of e_v A), in generator order.
struct FreeGradedModule {
  GradedModule module;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> coordinates;
};
FreeGradedModule graded_free(const AlgebraPtr& a, const std::vector<std::pair<std::size_t, int>>& gens);
/// e_v A with its generator in degree 0.
GradedModule graded_projective(const AlgebraPtr& a, std::size_t v);
/// A with generators in degree 0.
GradedModule graded_regular(const AlgebraPtr& a);

/// X(i), with X(i)_j = X_{j+i}.
GradedModule grade_shift(const GradedModule& x, int i);
/// Same module in the frame [lo, lo + width); throws if the support does not fit.
GradedModule reframe(const GradedModule& x, int lo, std::size_t width);
/// Smallest frame holding the support (one slot for the zero module).
GradedModule trim(const GradedModule& x);
/// Both modules in the smallest common frame containing their frames, widened
/// by margin_below and margin_above slots.
std::pair<GradedModule, GradedModule> common_frame(const GradedModule& x, const GradedModule& y,
                                                   std::size_t margin_below = 0, std::size_t margin_above = 0);

enum class TruncationSide { at_least, at_most };
/// X_{>=i} with its inclusion, or X_{<=i} with its projection, in the frame of x.
GradedMap truncation_map(const GradedModule& x, int i, TruncationSide side);
GradedModule truncate(const GradedModule& x, int i, TruncationSide side);

/// Forgets the grading modulo m: m = 1 gives a module over the algebra,
/// m >= 2 a module over the cyclic cover, m = 0 the graded module as a
/// representation of its window cover.
Representation forget(const GradedModule& x, std::size_t m);

/// Degree-preserving homomorphisms, in the common frame of x and y.
struct GradedHom {
  GradedModule source, target;
  std::vector<ModuleMap> basis;
};
GradedHom graded_hom(const GradedModule& x, const GradedModule& y);
std::size_t graded_hom_dim(const GradedModule& x, const GradedModule& y);
/// Degree-0 Hom modulo maps through projectives.
std::size_t graded_stable_hom_dim(const GradedModule& x, const GradedModule& y);

/// Kernel of the minimal graded projective cover, with the cover's generators.
struct GradedSyzygy {
  std::vector<std::pair<std::size_t, int>> cover_generators;
  GradedModule syzygy;
};
GradedSyzygy graded_syzygy_data(const GradedModule& x);
GradedModule graded_syzygy(const GradedModule& x, std::size_t times = 1);
/// Cokernel of the minimal left approximation by graded projectives.
GradedModule graded_cosyzygy(const GradedModule& x, std::size_t times = 1);
/// Sigma^i: cosyzygy for i > 0, syzygy for i < 0.
GradedModule graded_suspension(const GradedModule& x, int i);

bool graded_is_projective(const GradedModule& x);
GradedModule graded_strip_projectives(const GradedModule& x, std::mt19937_64& rng);
/// Isomorphism in the common frame.
std::optional<ModuleMap> graded_is_isomorphic(const GradedModule& x, const GradedModule& y, std::mt19937_64& rng);
GradedModule graded_direct_sum(const std::vector<GradedModule>& parts);

/// Degree-0 morphism of graded modules given per cover vertex in the common frame.
bool is_graded_homomorphism(const GradedMap& f);

/// Dimension vectors per degree, e.g. "-1:(1,0) 0:(1,1)".
std::string format_graded_dims(const GradedModule& x);

}  // namespace lambdak
