#include "pareto_smooth/sampling/ok_event.hpp"

#include <algorithm>
#include <vector>

namespace pareto_smooth {

bool ok_event(const Instance& inst) { return ok_event_with_gap(inst, inst.epsilon().in(inst.format())); }

bool ok_event_with_gap(const Instance& inst, Fixed gap) {
  const auto sols = inst.solutions();
  std::vector<Fixed> values(sols.size());
  for (std::size_t i = 0; i < inst.d(); ++i) {
    const auto row = inst.weights().row(i);
    for (std::size_t z = 0; z < sols.size(); ++z) values[z] = dot(row, sols[z]);
    std::sort(values.begin(), values.end());
    for (std::size_t k = 1; k < values.size(); ++k)
      if (!(values[k] - values[k - 1] > gap)) return false;
  }
  return true;
}

}  // namespace pareto_smooth
