#pragma once

// Finite-dimensional bound quiver algebras KQ/I given by a path basis and the
// right action of arrows on that basis.

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambdak/matrix.hpp"
#include "lambdak/quiver.hpp"

namespace lambdak {

/// Sparse vector over the path basis: (basis index, nonzero coefficient).
using Element = std::vector<std::pair<std::size_t, PrimeField::value_type>>;

struct BasisElement {
  Word word;               // standard path, empty for a vertex idempotent
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 0;          // sum of arrow degrees
  std::size_t prefix = 0;  // basis index of the word without its last arrow (self for idempotents)
  std::size_t last_arrow = 0;
};

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
 public:
  /// Builds the path basis degree by degree in path length. Relations must be
  /// homogeneous in path length. Throws if no nilpotency bound is found below
  /// max_length.
  static AlgebraPtr build(const AlgebraPresentation& p, std::size_t max_length = 64);

  const AlgebraPresentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t num_vertices() const { return pres_.quiver.num_vertices(); }
  std::size_t num_arrows() const { return pres_.quiver.num_arrows(); }

  const BasisElement& basis(std::size_t b) const { return basis_.at(b); }
  std::size_t idempotent(std::size_t v) const { return idempotent_.at(v); }
  std::size_t arrow_element(std::size_t a) const { return arrow_element_.at(a); }
  /// Basis elements of e_i A e_j (paths from i to j).
  const std::vector<std::size_t>& between(std::size_t i, std::size_t j) const {
    return between_.at(i * num_vertices() + j);
  }
  /// Basis elements of e_i A (paths starting at i).
  const std::vector<std::size_t>& starting_at(std::size_t i) const { return starting_.at(i); }
  /// Basis elements of A e_j (paths ending at j).
  const std::vector<std::size_t>& ending_at(std::size_t j) const { return ending_.at(j); }
  /// Position of basis element b inside between(source, target).
  std::size_t position(std::size_t b) const { return position_.at(b); }

  /// b * arrow, reduced to the basis (empty when zero or not composable).
  const Element& times_arrow(std::size_t b, std::size_t arrow) const;
  Element multiply(std::size_t b1, std::size_t b2) const;
  Element multiply(const Element& x, const Element& y) const;
  /// Reduction of an arbitrary arrow word (empty word is not allowed).
  Element reduce(const Word& w) const;
  int max_degree() const { return max_degree_; }
  std::size_t max_length() const { return max_length_; }

  /// Opposite algebra: reversed arrows, reversed relation words, same arrow
  /// indices. Cached, and the opposite of the opposite is this object.
  AlgebraPtr opposite() const;
  /// Element of the opposite algebra corresponding to basis element b.
  Element to_opposite(std::size_t b) const;

  /// Degree containing the right socle; nullopt when the socle is spread over
  /// several degrees.
  std::optional<int> gorenstein_parameter() const;
  /// Basis of the right socle {x : x J = 0} as sparse elements.
  std::vector<Element> right_socle() const;

  std::string summary() const;

 private:
  BoundQuiverAlgebra() = default;

  AlgebraPresentation pres_;
  PrimeField field_;
  std::vector<BasisElement> basis_;
  std::vector<std::size_t> idempotent_;
  std::vector<std::size_t> arrow_element_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::vector<std::size_t>> starting_;
  std::vector<std::vector<std::size_t>> ending_;
  std::vector<std::size_t> position_;
  // times_[b * num_arrows + a]
  std::vector<Element> times_;
  int max_degree_ = 0;
  std::size_t max_length_ = 0;

  mutable std::mutex op_mutex_;
  mutable AlgebraPtr op_strong_;
  mutable std::weak_ptr<const BoundQuiverAlgebra> op_weak_;
};

/// Presentation of the opposite algebra (reversed arrows and words).
AlgebraPresentation opposite_presentation(const AlgebraPresentation& p);

/// Entry (i, j) is dim e_i A e_j.
std::vector<std::vector<std::size_t>> cartan_matrix(const BoundQuiverAlgebra& a);

}  // namespace lambdak
