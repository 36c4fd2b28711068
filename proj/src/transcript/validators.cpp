#include "pareto_smooth/transcript/validators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pareto_smooth/pareto/pareto.hpp"
#include "pareto_smooth/sampling/ok_event.hpp"

namespace pareto_smooth {

SplitWeights split_weights(const FixedMatrix& w, const IndexVector& j) {
  const MaskMatrix mask = mask_matrix(j, w.cols(), w.rows());
  SplitWeights out{FixedMatrix(w.rows(), w.cols()), FixedMatrix(w.rows(), w.cols())};
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t c = 0; c < w.cols(); ++c) (mask(i, c) ? out.w_mask : out.w_bar)(i, c) = w(i, c);
  return out;
}

std::vector<MaskingViolation> check_masking_lemma(const TransState& state, std::span<const Solution> solutions,
                                                  const FixedMatrix& w, const IndexVector& j) {
  const SplitWeights split = split_weights(w, j);
  std::vector<MaskingViolation> out;
  const std::size_t d = w.rows();
  for (std::size_t t = 0; t < d && t < state.subsets.size(); ++t) {
    const auto& members = state.subsets[t];
    struct Key {
      Fixed full;
      Fixed bar;
      std::size_t z;
    };
    std::vector<Key> keys;
    keys.reserve(members.size());
    for (std::size_t z : members)
      keys.push_back({dot(w.row(t), solutions[z]), dot(split.w_bar.row(t), solutions[z]), z});
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
      return a.full < b.full || (a.full == b.full && a.bar < b.bar);
    });
    // Both orders agree iff consecutive keys compare the same way under both.
    bool consistent = true;
    for (std::size_t k = 1; k < keys.size() && consistent; ++k)
      consistent = (keys[k].full == keys[k - 1].full) ? keys[k].bar == keys[k - 1].bar
                                                       : keys[k].bar > keys[k - 1].bar;
    if (consistent) continue;
    for (const auto& a : keys)
      for (const auto& b : keys)
        if ((a.full > b.full) != (a.bar > b.bar)) out.push_back({t, a.z, b.z});
  }
  return out;
}

std::vector<AgreementViolation> check_coordinate_agreement(const TransState& state,
                                                           std::span<const Solution> solutions,
                                                           const IndexVector& j) {
  std::vector<AgreementViolation> out;
  for (std::size_t t = 0; t < j.d() && t < state.subsets.size(); ++t) {
    const auto& members = state.subsets[t];
    if (members.empty()) continue;
    const std::size_t ref = members.front();
    for (std::size_t u = t; u < j.d(); ++u) {
      if (!j[u]) continue;
      for (std::size_t z : members)
        if (solutions[z][*j[u]] != solutions[ref][*j[u]]) out.push_back({t, u, ref, z});
    }
  }
  return out;
}

DeterminesReport check_transcript_determines_po(const Instance& inst) {
  DeterminesReport report;
  if (!ok_event(inst)) {
    report.skipped = true;
    return report;
  }
  const auto po = pareto_sweep(inst);
  const auto sols = inst.solutions();
  std::vector<std::pair<Transcript, std::size_t>> transcripts;
  for (std::size_t x : po.optima) {
    ++report.optima_checked;
    TransRun run = trans_traced(sols[x], inst);
    const auto& last = run.state.subsets.front();
    std::optional<std::size_t> best;
    Fixed best_value{};
    for (std::size_t z : last) {
      const Fixed v = dot(inst.weights().row(0), sols[z]);
      if (!best || v > best_value || (v == best_value && sols[z] > sols[*best])) {
        best = z;
        best_value = v;
      }
    }
    if (best != x) {
      report.holds = false;
      report.diagnostics.push_back("optimum " + sols[x].to_string() + " is not the row-0 argmax of its final subset");
    }
    for (const auto& [other, k] : transcripts)
      if (other == run.transcript) {
        report.holds = false;
        report.diagnostics.push_back("optima " + sols[k].to_string() + " and " + sols[x].to_string() +
                                     " share a transcript");
      }
    transcripts.emplace_back(std::move(run.transcript), x);
  }
  return report;
}

}  // namespace pareto_smooth
