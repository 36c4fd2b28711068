#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pareto_smooth/core/instance.hpp"
#include "pareto_smooth/core/transcript_types.hpp"
#include "pareto_smooth/transcript/trans.hpp"

namespace pareto_smooth {

struct SplitWeights {
  FixedMatrix w_bar;   // complement(Lambda_J) o W
  FixedMatrix w_mask;  // Lambda_J o W
};

/// W = w_bar + w_mask, exactly.
SplitWeights split_weights(const FixedMatrix& w, const IndexVector& j);

struct MaskingViolation {
  std::size_t slot;
  std::size_t z;
  std::size_t z_prime;

  friend bool operator==(const MaskingViolation&, const MaskingViolation&) = default;
};

/// For every slot t and every pair z, z' of subsets[t], checks
///   W^t z > W^t z'  <=>  w_bar^t z > w_bar^t z'.
/// Returns the violating (t, z, z') triples; empty when the equivalence holds.
std::vector<MaskingViolation> check_masking_lemma(const TransState& state, std::span<const Solution> solutions,
                                                  const FixedMatrix& w, const IndexVector& j);

struct AgreementViolation {
  std::size_t slot;      // subset S_t
  std::size_t level;     // slot u >= t whose coordinate J_u disagrees
  std::size_t z;
  std::size_t z_prime;
};

/// All members of subsets[t] agree on coordinate J_u for every u >= t with J_u defined.
std::vector<AgreementViolation> check_coordinate_agreement(const TransState& state,
                                                           std::span<const Solution> solutions,
                                                           const IndexVector& j);

struct DeterminesReport {
  bool skipped = false;  // OK event failed; precondition not met
  bool holds = true;
  std::size_t optima_checked = 0;
  std::vector<std::string> diagnostics;
};

/// Under the OK event: for every Pareto optimum x, x is the argmax of W^0
/// over the final subset of trans(x), and distinct optima give distinct
/// transcripts.
DeterminesReport check_transcript_determines_po(const Instance& inst);

}  // namespace pareto_smooth
