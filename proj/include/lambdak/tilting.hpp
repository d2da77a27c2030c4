#pragma once

// The graded tilting candidate T = sum_{i=0}^{k-2} Lambda_k(i)_{<=0} and the
// checks around it: its degree-0 endomorphism algebra against T_{k-1}(Lambda),
// the syzygy period, vanishing of stable Hom into its suspensions, and the two
// short exact sequences linking T with M = sum_{i=k}^{2k-2} Lambda_k(i)_{>=1-k}.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambdak/graded.hpp"

namespace lambdak {

struct TiltingCandidate {
  AlgebraPtr lambda;   // base algebra
  AlgebraPtr algebra;  // Lambda_k
  std::size_t k = 0;
  std::vector<GradedModule> summands;  // Lambda_k(i)_{<=0}, i = 0..k-2
  // Indecomposable pieces (e_v Lambda_k)(i)_{<=0}, ordered by i then v.
  std::vector<GradedModule> pieces;
  std::vector<std::pair<std::size_t, std::size_t>> piece_labels;  // (i, v)
  GradedModule total;
  bool gorenstein_projective = false;
};

/// k = 1 yields an empty candidate.
TiltingCandidate build_T(const AlgebraPresentation& lambda, std::size_t k);

struct EndComparison {
  std::size_t dim = 0;
  std::size_t expected_dim = 0;  // (k-1)k/2 dim Lambda
  std::size_t target_dim = 0;    // dim T_{k-1}(Lambda)
  std::vector<std::vector<std::size_t>> cartan_end;     // entry (x, y) = dim Hom(U_y, U_x)
  std::vector<std::vector<std::size_t>> cartan_target;  // entry (x, y) = dim e_x B e_y
  std::optional<std::vector<std::size_t>> matching;     // target vertex -> piece index
  bool cartan_match = false;
  bool isomorphism = false;  // arrow images satisfy every relation and span End bijectively
  std::vector<std::string> arrow_images;  // per target arrow: "label -> scalar * map (piece -> piece)"
  std::string diagnostic;
  bool ok() const { return cartan_match && isomorphism && dim == expected_dim && dim == target_dim; }
};
EndComparison end_degree_zero(const TiltingCandidate& t);

struct SyzygyPeriodCheck {
  bool isomorphic = false;
  std::vector<std::vector<std::pair<std::size_t, int>>> cover_generators;  // per step: (vertex, degree)
  std::string omega2_dims, expected_dims;
  std::size_t certificate_rank = 0;  // rank of the certified isomorphism
  bool ok() const { return isomorphic; }
};
/// Omega^2(T) against T(-k).
SyzygyPeriodCheck verify_syzygy_period(const TiltingCandidate& t);

struct HomVanishing {
  std::vector<std::pair<int, std::size_t>> dims;  // (i, dim stable Hom(T, Sigma^i T)), i = -bound..bound
  bool ok() const;
};
HomVanishing verify_hom_vanishing(const TiltingCandidate& t, std::size_t bound);

struct ShortExactCheck {
  bool homomorphisms = false, injective = false, surjective = false, composite_zero = false, dimensions = false;
  bool ok() const { return homomorphisms && injective && surjective && composite_zero && dimensions; }
};
/// 0 -> a -> b -> c -> 0 with all three in one frame.
ShortExactCheck check_short_exact(const GradedModule& a, const GradedModule& b, const GradedModule& c,
                                  const ModuleMap& f, const ModuleMap& g);

struct SequencePairCheck {
  std::size_t dim_m = 0, expected_dim = 0;
  ShortExactCheck first;   // 0 -> M -> sum_{i=k}^{2k-2} Lambda_k(i) -> T(k) -> 0
  bool first_end_iso = false;  // cokernel isomorphic to T(k)
  ShortExactCheck second;  // 0 -> T -> Lambda_k(k-1)^{k-1} -> M -> 0
  std::string m_dims;
  bool ok() const { return first.ok() && first_end_iso && second.ok() && dim_m == expected_dim; }
};
SequencePairCheck verify_exact_sequences(const AlgebraPresentation& lambda, std::size_t k);

}  // namespace lambdak
