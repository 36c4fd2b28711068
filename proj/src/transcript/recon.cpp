#include "pareto_smooth/transcript/recon.hpp"

#include <stdexcept>

namespace pareto_smooth {

PublicData public_data(const Instance& inst) {
  return PublicData{inst.solutions(), inst.tail_objectives(), inst.format(), inst.epsilon()};
}

namespace {

ReconResult fail(ReconResult r, std::string why) {
  r.failure = std::move(why);
  return r;
}

}  // namespace

ReconResult recon(const Transcript& tr, const FixedMatrix& w_bar, const PublicData& data) {
  const std::size_t d = w_bar.rows();
  const std::size_t n = w_bar.cols();
  const auto sols = data.solutions;
  if (tr.j.d() != d || tr.a.d() != d || tr.a.n() != n || tr.boxes.size() != d)
    throw std::invalid_argument("recon: transcript shape does not match the d x n weights");
  if (data.tail_objectives.size() != sols.size())
    throw std::invalid_argument("recon: one tail objective per solution required");
  for (const auto& s : sols)
    if (s.size() != n) throw std::invalid_argument("recon: solution length differs from n");

  ReconResult r;
  ReconState& st = r.state;
  st.subsets.assign(d + 1, {});
  st.candidates.assign(d, {});
  st.blockers.assign(d, std::nullopt);
  if (!tr.j.valid(n)) return fail(std::move(r), "index vector has repeated or out-of-range entries");

  const ObjectiveTable obj(sols, w_bar, data.tail_objectives);
  st.subsets[d].resize(sols.size());
  for (std::size_t z = 0; z < sols.size(); ++z) st.subsets[d][z] = z;

  std::vector<std::size_t> j_rows;
  for (const auto& e : tr.j.entries())
    if (e) j_rows.push_back(*e);

  for (std::size_t t = d; t-- > 0;) {
    const auto& above = st.subsets[t + 1];
    if (!tr.j[t]) {
      st.subsets[t] = above;
      continue;
    }
    const auto& box = tr.boxes[t];
    if (!box || box->dim() != t + 1)
      return fail(std::move(r), "slot " + std::to_string(t) + " has no box of dimension " + std::to_string(t + 1));
    for (std::size_t c : j_rows)
      if (tr.a(c, t) == Trit::bottom)
        return fail(std::move(r), "diagonalization matrix has bottom at (" + std::to_string(c) + ", " +
                                      std::to_string(t) + ") on an executed slot");

    auto& cand = st.candidates[t];
    for (std::size_t z : above) {
      bool in = true;
      for (std::size_t i = 0; i <= t && in; ++i)
        in = compare_to_lattice(obj(z, i), box->lattice[i], data.format, data.epsilon) > 0;
      for (std::size_t k = 0; k < j_rows.size() && in; ++k)
        in = trit_of(sols[z][j_rows[k]]) == tr.a(j_rows[k], t);
      if (in) cand.push_back(z);
    }
    if (cand.empty()) return fail(std::move(r), "empty candidate set at slot " + std::to_string(t));

    std::size_t y = cand.front();
    for (std::size_t z : cand) {
      const Fixed vz = obj(z, t + 1);
      const Fixed vy = obj(y, t + 1);
      if (vz > vy || (vz == vy && sols[z] > sols[y])) y = z;
    }
    st.blockers[t] = y;
    const std::size_t jt = *tr.j[t];
    const Fixed vy = obj(y, t + 1);
    const bool ybit = sols[y][jt];
    for (std::size_t z : above)
      if (obj(z, t + 1) > vy && sols[z][jt] != ybit) st.subsets[t].push_back(z);
  }

  const auto& last = st.subsets[0];
  if (last.empty()) return fail(std::move(r), "final subset is empty");
  std::size_t best = last.front();
  for (std::size_t z : last) {
    const Fixed vz = obj(z, 0);
    const Fixed vb = obj(best, 0);
    if (vz > vb || (vz == vb && sols[z] > sols[best])) best = z;
  }
  r.index = best;
  r.solution = sols[best];
  return r;
}

}  // namespace pareto_smooth
