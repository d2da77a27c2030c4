#pragma once

// CM-finiteness of Lambda_k = Lambda (x) K[X]/(X^k) by Dynkin type, the
// closed-form and orbit counts of indecomposable Gorenstein projectives, and
// the tubular types on the boundary of the finite region.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lambdak/quiver.hpp"

namespace lambdak {

struct DynkinType {
  char family = 'A';  // 'A', 'D' or 'E'
  std::size_t rank = 1;

  bool operator==(const DynkinType& o) const { return family == o.family && rank == o.rank; }
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

/// Parses "A3", "D4", "E6" (an optional '_' after the letter is accepted).
DynkinType parse_dynkin(const std::string& s);
bool is_valid(const DynkinType& t);

/// Dynkin type of a hereditary presentation with a Dynkin underlying graph.
std::optional<DynkinType> detect_dynkin(const AlgebraPresentation& p);

std::vector<std::vector<int>> cartan_matrix(const DynkinType& t);
/// Positive roots by closing the simple roots under simple reflections.
std::vector<std::vector<int>> positive_roots(const DynkinType& t);

/// 2 + 2(k-1) 6/(6-k) for type A2; throws std::domain_error for k outside 1..5.
std::size_t s_count(std::size_t k);

/// 2 |Phi+(gamma)| / k + n_proj; throws std::domain_error when k does not divide 2 |Phi+|.
std::size_t orbit_count(const DynkinType& gamma, std::size_t k, std::size_t n_proj);

/// Dynkin type of the endomorphism algebra of the tilting object, T_{k-1}(Lambda), when known.
std::optional<DynkinType> gamma_type(const DynkinType& lambda, std::size_t k);

/// Tubular type on the boundary of the finite region, if any.
std::optional<std::array<int, 3>> tubular_boundary(const DynkinType& t, std::size_t k);

enum class CMVerdict { finite, infinite, unknown };
std::string to_string(CMVerdict v);

struct CMReport {
  std::optional<DynkinType> type;
  std::size_t k = 0;
  CMVerdict verdict = CMVerdict::unknown;
  CMVerdict graded_verdict = CMVerdict::unknown;  // Z- and Z/aZ-graded finiteness
  std::optional<std::size_t> count;
  std::string count_method;  // how count was obtained, or "count unavailable"
  std::optional<DynkinType> gamma;
  std::optional<std::array<int, 3>> tubular;
  std::vector<std::string> notes;
};

CMReport classify(const DynkinType& t, std::size_t k);
/// Detects the type of hereditary presentations; unknown otherwise.
CMReport classify(const AlgebraPresentation& p, std::size_t k);

}  // namespace lambdak
