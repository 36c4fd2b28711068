#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pareto_smooth/core/instance.hpp"
#include "pareto_smooth/core/transcript_types.hpp"

namespace pareto_smooth {

/// Mirror of TransState for a reconstruction run.
struct ReconState {
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::optional<std::size_t>> blockers;
};

/// Either the reconstructed solution or FAIL with a reason.
struct ReconResult {
  std::optional<std::size_t> index;
  std::optional<Solution> solution;
  std::string failure;
  ReconState state;

  bool ok() const { return solution.has_value(); }
};

/// Public inputs of a reconstruction: everything fixed before W is drawn.
struct PublicData {
  std::span<const Solution> solutions;
  std::span<const Fixed> tail_objectives;
  FixedFormat format;
  Epsilon epsilon;
};

PublicData public_data(const Instance& inst);

/// Reconstructs a solution from a transcript and the unmasked half
/// w_bar = (complement of Lambda_J) o W of the weights. For slot t = d-1..0
/// with J_t defined:
///   b  = base point of B_t
///   C'_t = {z in S_{t+1} : w_bar^{0..t} z > b and z^j = A^j_t for all j in J}
///   Y_t = argmax over C'_t of level t+1 under w_bar (tail when t+1 = d),
///         ties towards the lexicographically larger solution
///   S_t = {z in S_{t+1} : level t+1 of z > that of Y_t and z^{J_t} != Y_t^{J_t}}
/// and finally returns the argmax of w_bar^0 over S_0. Any empty argmax or a
/// transcript that is inconsistent in content (repeated or out-of-range J
/// entries, a missing box, a bottom entry of A that the loop must read)
/// yields FAIL. Shape mismatches throw std::invalid_argument.
ReconResult recon(const Transcript& tr, const FixedMatrix& w_bar, const PublicData& data);

}  // namespace pareto_smooth
