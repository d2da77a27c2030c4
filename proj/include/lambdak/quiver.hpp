#pragma once

// Bound quiver presentations and the constructions built on them.
//
// Paths are words of arrow indices read left to right: the word a.b means
// "a, then b", so t(a) must equal s(b). Modules are right modules.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambdak {

using Word = std::vector<std::size_t>;

struct Arrow {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 0;
};

class Quiver {
 public:
  std::size_t add_vertex(const std::string& label);
  std::size_t add_arrow(const std::string& label, std::size_t source, std::size_t target, int degree = 0);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::string& vertex(std::size_t i) const { return vertices_.at(i); }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> find_vertex(const std::string& label) const;
  std::optional<std::size_t> find_arrow(const std::string& label) const;

  std::size_t word_source(const Word& w) const { return arrows_.at(w.front()).source; }
  std::size_t word_target(const Word& w) const { return arrows_.at(w.back()).target; }
  bool is_composable(const Word& w) const;
  int word_degree(const Word& w) const;
  bool is_acyclic() const;
  /// Word printed as dot-separated arrow labels.
  std::string format(const Word& w) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> arrow_index_;
};

struct RelationTerm {
  long long coefficient = 1;
  Word word;
};

/// Linear combination of parallel paths of length at least two.
struct Relation {
  std::vector<RelationTerm> terms;
};

/// characteristic 0 stands for the rationals.
struct FieldSpec {
  std::uint32_t characteristic = 101;
  bool is_rational() const { return characteristic == 0; }
};

struct AlgebraPresentation;

/// Bookkeeping for presentations of the form Lambda (x) K[X]/(X^k): which
/// arrows come from the base quiver and which loop realizes X at each vertex.
struct TensorLoopShape {
  std::size_t k = 1;
  std::vector<std::size_t> base_arrows;  // indices into the big quiver, in base order
  std::vector<std::size_t> loops;        // per vertex; empty when k == 1
  std::shared_ptr<const AlgebraPresentation> base;
};

struct AlgebraPresentation {
  FieldSpec field;
  Quiver quiver;
  std::vector<Relation> relations;
  std::optional<TensorLoopShape> loop_shape;

  bool is_hereditary_shape() const { return relations.empty() && quiver.is_acyclic(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the text format:
///   field p=<prime> | field Q
///   vertices: v1 v2 ...
///   arrow <label>: <src> -> <tgt> [deg=<n>]
///   relation <+-coef>*<word> ...     (word = dot-separated arrow labels)
/// Lines starting with '#' are comments.
AlgebraPresentation parse_quiver_spec(const std::string& text);
AlgebraPresentation load_quiver_spec(const std::string& path);
std::string format_quiver_spec(const AlgebraPresentation& p);

/// Checks labels, endpoints, parallelism and path length of every relation.
void validate(const AlgebraPresentation& p);

/// Lambda_k: one degree-1 loop per vertex, loop^k = 0, loop_i a = a loop_j for a: i -> j,
/// base relations kept. k = 1 returns the input unchanged.
AlgebraPresentation build_lambda_k(const AlgebraPresentation& lambda, std::size_t k);

/// T_m(Lambda) as the product quiver Q x A_m with commutativity squares.
AlgebraPresentation build_triangular(const AlgebraPresentation& lambda, std::size_t m);

/// A (x) B as the product quiver with commutativity squares; degrees add.
AlgebraPresentation tensor_presentation(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// K[X]/(X^k) as a one-loop quiver, loop in degree 1.
AlgebraPresentation truncated_polynomial(std::size_t k, FieldSpec field = {});

/// Recognizes a Lambda_k presentation written out by hand (one loop per
/// vertex, nilpotency and commutativity relations) and fills loop_shape.
std::optional<TensorLoopShape> detect_loop_shape(const AlgebraPresentation& p);

}  // namespace lambdak
