#pragma once

#include "pareto_smooth/core/instance.hpp"

namespace pareto_smooth {

/// True iff |W^i x - W^i y| > eps for every row i and distinct x, y in S.
/// Sorts each row's values and checks adjacent gaps.
bool ok_event(const Instance& inst);

/// Same check against an arbitrary gap threshold instead of eps.
bool ok_event_with_gap(const Instance& inst, Fixed gap);

}  // namespace pareto_smooth
