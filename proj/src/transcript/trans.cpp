#include "pareto_smooth/transcript/trans.hpp"

#include <cassert>
#include <stdexcept>

namespace pareto_smooth {

TransRun trans_traced(const Solution& x, const Instance& inst) {
  const std::size_t n = inst.n();
  const std::size_t d = inst.d();
  const auto sols = inst.solutions();
  if (inst.index_of(x) == sols.size()) throw std::invalid_argument("trans: x is not in the solution set");

  const ObjectiveTable obj(sols, inst.weights(), inst.tail_objectives());
  std::vector<Fixed> wx(d);
  for (std::size_t i = 0; i < d; ++i) wx[i] = dot(inst.weights().row(i), x);

  TransRun run;
  TransState& st = run.state;
  st.subsets.assign(d + 1, {});
  st.candidates.assign(d, {});
  st.blockers.assign(d, std::nullopt);
  st.subsets[d].resize(sols.size());
  for (std::size_t z = 0; z < sols.size(); ++z) st.subsets[d][z] = z;

  IndexVector j(d);
  for (std::size_t t = d; t-- > 0;) {
    const auto& above = st.subsets[t + 1];
    auto& cand = st.candidates[t];
    for (std::size_t z : above) {
      bool beats = true;
      for (std::size_t i = 0; i <= t && beats; ++i) beats = obj(z, i) > wx[i];
      if (beats) cand.push_back(z);
    }
    if (cand.empty()) {
      st.subsets[t] = above;
      continue;
    }
    std::size_t y = cand.front();
    for (std::size_t z : cand) {
      const Fixed vz = obj(z, t + 1);
      const Fixed vy = obj(y, t + 1);
      if (vz > vy || (vz == vy && sols[z] > sols[y])) y = z;
    }
    st.blockers[t] = y;
    const std::size_t jt = sols[y].first_difference(x);
    // Y_t beats x strictly on row 0, so it cannot equal x.
    assert(jt < n);
    if (jt >= n) throw std::logic_error("trans: blocker coincides with x");
    j[t] = jt;
    const Fixed vy = obj(y, t + 1);
    const bool xbit = x[jt];
    for (std::size_t z : above)
      if (obj(z, t + 1) > vy && sols[z][jt] == xbit) st.subsets[t].push_back(z);
  }

  DiagMatrix a(n, d, Trit::zero);
  for (std::size_t u = 0; u < d; ++u) {
    if (!j[u]) continue;
    const std::size_t row = *j[u];
    for (std::size_t t = 0; t < d; ++t)
      a(row, t) = st.blockers[t] ? trit_of(sols[*st.blockers[t]][row]) : Trit::bottom;
  }

  std::vector<std::optional<Box>> boxes(d);
  const auto& w = inst.weights();
  for (std::size_t u = 0; u < d; ++u) {
    if (!j[u]) continue;
    std::vector<Fixed> point(wx.begin(), wx.begin() + static_cast<std::ptrdiff_t>(u + 1));
    for (std::size_t i = 0; i <= u; ++i)
      for (std::size_t s = i; s < d; ++s)
        if (j[s] && a(*j[s], u) == Trit::one) point[i] -= w(i, *j[s]);
    boxes[u] = box_of(point, inst.format(), inst.epsilon());
  }

  run.transcript = Transcript{std::move(j), std::move(a), std::move(boxes)};
  return run;
}

Transcript trans(const Solution& x, const Instance& inst) { return trans_traced(x, inst).transcript; }

}  // namespace pareto_smooth
