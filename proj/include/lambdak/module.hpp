#pragma once

// Right modules over a bound quiver algebra as quiver representations.
//
// The matrix of an arrow a: s -> t has dims[t] rows and dims[s] columns and
// acts on column vectors. The matrix of the path a.b is M_b * M_a.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lambdak/algebra.hpp"
#include "lambdak/matrix.hpp"

namespace lambdak {

struct Representation {
  AlgebraPtr algebra;
  std::vector<std::size_t> dims;
  std::vector<Matrix> arrows;

  Representation() = default;
  /// Zero arrow matrices of the right shapes.
  Representation(AlgebraPtr a, std::vector<std::size_t> d);

  const PrimeField& field() const { return algebra->field(); }
  std::size_t num_vertices() const { return dims.size(); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  std::vector<std::size_t> offsets() const;
};

/// Per-vertex matrices of a homomorphism; block v has target.dims[v] rows and
/// source.dims[v] columns.
struct ModuleMap {
  std::vector<Matrix> blocks;
};

std::string format_dims(const std::vector<std::size_t>& dims);

/// Empty when every relation vanishes and every arrow matrix has the right shape.
std::vector<std::string> check_representation(const Representation& m);

/// Matrix of every basis element of the algebra acting on m.
std::vector<Matrix> path_matrices(const Representation& m);
/// Matrix of an algebra element x in e_i A e_j acting from m_i to m_j.
Matrix element_action(const Representation& m, const std::vector<Matrix>& paths, const Element& x, std::size_t i,
                      std::size_t j);

// Maps.
ModuleMap zero_map(const Representation& from, const Representation& to);
ModuleMap identity_map(const Representation& m);
/// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale_map(const ModuleMap& f, PrimeField::value_type c);
ModuleMap linear_combination(const std::vector<ModuleMap>& basis, const std::vector<PrimeField::value_type>& coeffs,
                             const Representation& from, const Representation& to);
bool is_homomorphism(const Representation& from, const Representation& to, const ModuleMap& f);
bool is_zero_map(const ModuleMap& f);
bool is_injective(const ModuleMap& f, const Representation& from);
bool is_surjective(const ModuleMap& f, const Representation& to);
bool is_invertible(const ModuleMap& f);
std::optional<ModuleMap> invert(const ModuleMap& f);
PrimeField::value_type map_trace(const PrimeField& f, const ModuleMap& m);
/// Entries of all blocks flattened; used for linear algebra on Hom spaces.
std::vector<PrimeField::value_type> flatten(const ModuleMap& f);

/// Coordinates of maps in a fixed linearly independent family of maps.
class MapCoordinates {
 public:
  MapCoordinates(const PrimeField& f, const std::vector<ModuleMap>& basis);
  std::size_t size() const { return n_; }
  /// nullopt when f is outside the span.
  std::optional<std::vector<PrimeField::value_type>> operator()(const ModuleMap& f) const;

 private:
  std::size_t n_ = 0;
  std::optional<Matrix> columns_;        // flattened basis as columns
  std::vector<std::size_t> rows_;        // rows on which the basis is invertible
  std::optional<Matrix> inverse_rows_;
};

/// Top generators: per generator, its vertex and a coordinate vector in m.
struct Generators {
  std::vector<std::size_t> vertex;
  std::vector<Matrix> vector;  // column, dims[vertex] x 1
};
Generators top_generators(const Representation& m);

/// Precomputed data of the free cover on top generators, reused by Hom.
struct CoverData {
  Generators gens;
  // Per vertex w: matrix of P0_w -> M_w, columns indexed by (generator, path).
  std::vector<Matrix> pi;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> columns;  // (generator, basis element)
  std::vector<std::vector<std::size_t>> pivots;
  std::vector<Matrix> pivot_inverse;
  std::vector<Matrix> kernel;
};
CoverData cover_data(const Representation& m);

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);
std::vector<ModuleMap> hom_space(const CoverData& cm, const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

// Standard modules.
Representation simple_module(const AlgebraPtr& a, std::size_t i);
Representation projective_module(const AlgebraPtr& a, std::size_t i);
Representation injective_module(const AlgebraPtr& a, std::size_t i);
Representation regular_module(const AlgebraPtr& a);
/// Free module on the given generator vertices; coordinates at w are ordered
/// by generator, then by the paths from its vertex to w.
Representation free_module(const AlgebraPtr& a, const std::vector<std::size_t>& gen_vertices);
/// Map out of free_module(gen_vertices) sending generator g to images[g].
ModuleMap map_from_free(const AlgebraPtr& a, const std::vector<std::size_t>& gen_vertices,
                        const Representation& target, const std::vector<Matrix>& images);
/// Same, with path_matrices(target) precomputed.
ModuleMap map_from_free(const AlgebraPtr& a, const std::vector<std::size_t>& gen_vertices,
                        const Representation& target, const std::vector<Matrix>& images,
                        const std::vector<Matrix>& target_paths);
/// Left multiplication by x in e_j A e_i as a map P(i) -> P(j).
ModuleMap left_multiplication(const AlgebraPtr& a, std::size_t i, std::size_t j, const Element& x);

// Sub, quotient, sums.
struct Inclusion {
  Representation module;
  ModuleMap map;  // module -> ambient
};
struct Projection {
  Representation module;
  ModuleMap map;  // ambient -> module
};
/// Subspaces given by column bases; must be closed under the arrows.
Inclusion submodule(const Representation& m, const std::vector<Matrix>& bases);
Projection quotient(const Representation& m, const std::vector<Matrix>& bases);
Inclusion kernel(const ModuleMap& f, const Representation& from);
Projection cokernel(const ModuleMap& f, const Representation& to);
Inclusion image(const ModuleMap& f, const Representation& to);

struct DirectSum {
  Representation module;
  std::vector<ModuleMap> inclusions;
  std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const Representation& a, const Representation& b);

/// Change of basis: returns the module with arrows g_t M_a g_s^{-1}.
Representation transport(const Representation& m, const std::vector<Matrix>& base_change);
/// Random change of basis together with the isomorphism m -> result.
std::pair<Representation, ModuleMap> random_base_change(const Representation& m, std::mt19937_64& rng);

// Covers and syzygies.
struct ProjectiveCover {
  std::vector<std::size_t> gen_vertices;
  Representation module;
  ModuleMap surjection;
};
ProjectiveCover projective_cover(const Representation& m);
/// Kernel of the minimal projective cover, with its inclusion into the cover.
struct SyzygyData {
  ProjectiveCover cover;
  Inclusion syzygy;
};
SyzygyData syzygy_data(const Representation& m);
Representation syzygy(const Representation& m);
Representation syzygy(const Representation& m, std::size_t times);
bool is_projective(const Representation& m);
/// nullopt when the resolution is still running after cap steps.
std::optional<std::size_t> projective_dimension(const Representation& m, std::size_t cap);

/// Standard duality onto the opposite algebra.
Representation dualize(const Representation& m);
ModuleMap dualize(const ModuleMap& f);

/// Forgets the loop arrows of a Lambda_k shaped algebra.
Representation restrict_to_base(const Representation& m);
/// Algebra of the base presentation of a Lambda_k shaped algebra (cached per algebra).
AlgebraPtr base_algebra(const AlgebraPtr& a);

/// Cokernel of a random sparse map between free modules on the given generator vertices.
Representation random_cokernel(const AlgebraPtr& a, const std::vector<std::size_t>& p1,
                               const std::vector<std::size_t>& p0, std::mt19937_64& rng, double density = 0.5);

}  // namespace lambdak
