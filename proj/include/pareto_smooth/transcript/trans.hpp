#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pareto_smooth/core/instance.hpp"
#include "pareto_smooth/core/transcript_types.hpp"

namespace pareto_smooth {

/// Internal variables of one transcript run, indexed by 0-based slot.
/// subsets[t] is the solution subset after processing slot t (subsets[d] is
/// the whole solution list); candidates[t] and blockers[t] are the candidate
/// set and chosen blocker of slot t (blocker empty when no candidate).
/// All entries are indices into the instance's solution list.
struct TransState {
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::optional<std::size_t>> blockers;
};

struct TransRun {
  Transcript transcript;
  TransState state;
};

/// Maps a solution x in S and the weights of `inst` to its transcript (J, A, B).
/// For slot t = d-1, ..., 0:
///   C_t = {z in S_{t+1} : W^{0..t} z > W^{0..t} x}        (strict, every row)
///   if C_t is nonempty:
///     Y_t = argmax over C_t of level t+1 (the tail objective when t+1 = d),
///           ties broken towards the lexicographically larger solution
///     J_t = least coordinate where Y_t and x differ
///     S_t = {z in S_{t+1} : level t+1 of z > that of Y_t and z^{J_t} = x^{J_t}}
///   else S_t = S_{t+1}.
/// Then A^j_u = Y_u^j on rows j in J (bottom when Y_u is undefined) and 0
/// elsewhere, and B_u is the (u+1)-box containing W x - (Lambda_J o W) A_u.
/// Throws std::invalid_argument when x is not in S.
Transcript trans(const Solution& x, const Instance& inst);
TransRun trans_traced(const Solution& x, const Instance& inst);

}  // namespace pareto_smooth
