#pragma once

#include <string>

#include "pareto_smooth/experiments/campaigns.hpp"

namespace pareto_smooth {

/// Summary JSON; numbers are printed with round-trip precision so identical
/// reports serialize to identical bytes.
std::string report_to_json(const ExperimentReport& report);
/// One row per grid point per metric, then one row per scalar metric and verdict.
std::string report_to_csv(const ExperimentReport& report);
/// Log-log plot of mean |PO| +- 1.96 SE against n (one series per d); for
/// reports without a grid, a panel listing the verdicts.
std::string report_to_svg(const ExperimentReport& report);
/// Short human-readable summary.
std::string report_summary(const ExperimentReport& report);

}  // namespace pareto_smooth
