#include "pareto_smooth/experiments/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

namespace pareto_smooth {

namespace {

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return num(v);
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string report_to_json(const ExperimentReport& r) {
  nlohmann::ordered_json j;
  j["campaign"] = r.campaign;
  j["pass"] = r.all_pass();
  auto& grid = j["grid"] = nlohmann::ordered_json::array();
  for (const auto& g : r.grid) {
    grid.push_back({{"n", g.n},
                    {"d", g.d},
                    {"trials", g.stats.count},
                    {"mean", json_number(g.stats.mean)},
                    {"std_error", json_number(g.stats.std_error)},
                    {"min", json_number(g.stats.min)},
                    {"max", json_number(g.stats.max)},
                    {"main_theorem_bound", json_number(g.bound.value)},
                    {"bound_overflow", g.bound.overflow}});
  }
  auto& slopes = j["slopes"] = nlohmann::ordered_json::array();
  for (const auto& s : r.slopes)
    slopes.push_back({{"d", s.d},
                      {"slope", json_number(s.fit.slope)},
                      {"std_error", json_number(s.fit.std_error)},
                      {"ci_low", json_number(s.fit.ci_low)},
                      {"ci_high", json_number(s.fit.ci_high)},
                      {"points", s.fit.points}});
  auto& metrics = j["metrics"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = json_number(v);
  auto& verdicts = j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"name", v.name},
                        {"pass", v.pass},
                        {"inconclusive", v.inconclusive},
                        {"observed", json_number(v.observed)},
                        {"threshold", json_number(v.threshold)},
                        {"detail", v.detail}});
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "campaign,n,d,metric,value\n";
  for (const auto& g : r.grid) {
    const std::string prefix = r.campaign + "," + std::to_string(g.n) + "," + std::to_string(g.d) + ",";
    out << prefix << "trials," << g.stats.count << "\n";
    out << prefix << "mean," << num(g.stats.mean) << "\n";
    out << prefix << "std_error," << num(g.stats.std_error) << "\n";
    out << prefix << "min," << num(g.stats.min) << "\n";
    out << prefix << "max," << num(g.stats.max) << "\n";
    out << prefix << "main_theorem_bound," << num(g.bound.value) << "\n";
  }
  for (const auto& s : r.slopes) {
    const std::string prefix = r.campaign + ",," + std::to_string(s.d) + ",";
    out << prefix << "slope," << num(s.fit.slope) << "\n";
    out << prefix << "slope_ci_low," << num(s.fit.ci_low) << "\n";
    out << prefix << "slope_ci_high," << num(s.fit.ci_high) << "\n";
  }
  for (const auto& [k, v] : r.metrics) out << r.campaign << ",,," << k << "," << num(v) << "\n";
  for (const auto& v : r.verdicts) out << r.campaign << ",,,verdict:" << v.name << "," << (v.pass ? 1 : 0) << "\n";
  return out.str();
}

std::string report_to_svg(const ExperimentReport& r) {
  constexpr double width = 640;
  constexpr double height = 420;
  constexpr double left = 70;
  constexpr double right = 20;
  constexpr double top = 40;
  constexpr double bottom = 50;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape_xml(r.campaign) << "</text>\n";

  std::vector<const GridPointReport*> pts;
  for (const auto& g : r.grid)
    if (g.stats.mean > 0) pts.push_back(&g);
  if (pts.empty()) {
    double y = top + 20;
    for (const auto& v : r.verdicts) {
      out << "<text x=\"" << left << "\" y=\"" << y << "\">" << (v.pass ? "PASS " : "FAIL ") << escape_xml(v.name)
          << ": observed " << short_num(v.observed) << ", threshold " << short_num(v.threshold) << "</text>\n";
      y += 18;
    }
    out << "</svg>\n";
    return out.str();
  }

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto* g : pts) {
    const double lo = std::max(g->stats.mean - 1.96 * g->stats.std_error, g->stats.mean * 0.5);
    const double hi = g->stats.mean + 1.96 * g->stats.std_error;
    xmin = std::min(xmin, std::log10(static_cast<double>(g->n)));
    xmax = std::max(xmax, std::log10(static_cast<double>(g->n)));
    ymin = std::min(ymin, std::log10(lo));
    ymax = std::max(ymax, std::log10(hi));
  }
  if (xmax - xmin < 1e-9) xmax = xmin + 1;
  if (ymax - ymin < 1e-9) ymax = ymin + 1;
  auto px = [&](double n) { return left + (std::log10(n) - xmin) / (xmax - xmin) * (width - left - right); };
  auto py = [&](double v) { return height - bottom - (std::log10(v) - ymin) / (ymax - ymin) * (height - top - bottom); };

  out << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right << "\" y2=\""
      << height - bottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << height - bottom
      << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">n (log scale)</text>\n";
  out << "<text x=\"16\" y=\"" << height / 2 << "\" transform=\"rotate(-90 16 " << height / 2
      << ")\" text-anchor=\"middle\">mean |PO| (log scale)</text>\n";

  std::map<std::size_t, std::vector<const GridPointReport*>> series;
  for (const auto* g : pts) series[g->d].push_back(g);
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::size_t s = 0;
  for (const auto& [d, list] : series) {
    const char* color = colors[s++ % 4];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (const auto* g : list) out << px(static_cast<double>(g->n)) << "," << py(g->stats.mean) << " ";
    out << "\"/>\n";
    for (const auto* g : list) {
      const double x = px(static_cast<double>(g->n));
      const double lo = std::max(g->stats.mean - 1.96 * g->stats.std_error, g->stats.mean * 0.5);
      const double hi = g->stats.mean + 1.96 * g->stats.std_error;
      out << "<line x1=\"" << x << "\" y1=\"" << py(lo) << "\" x2=\"" << x << "\" y2=\"" << py(hi) << "\" stroke=\""
          << color << "\"/>\n";
      out << "<circle cx=\"" << x << "\" cy=\"" << py(g->stats.mean) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      out << "<text x=\"" << x << "\" y=\"" << height - bottom + 16 << "\" text-anchor=\"middle\">" << g->n
          << "</text>\n";
    }
    out << "<text x=\"" << width - right - 150 << "\" y=\"" << top + 16 * static_cast<double>(s) << "\" fill=\""
        << color << "\">d = " << d;
    for (const auto& sl : r.slopes)
      if (sl.d == d) out << ", slope " << short_num(sl.fit.slope);
    out << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string report_summary(const ExperimentReport& r) {
  std::ostringstream out;
  out << "campaign " << r.campaign << ": " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& g : r.grid)
    out << "  n=" << g.n << " d=" << g.d << " mean |PO| = " << short_num(g.stats.mean) << " +- "
        << short_num(g.stats.std_error) << " (bound " << short_num(g.bound.value) << ")\n";
  for (const auto& s : r.slopes)
    out << "  d=" << s.d << " log-log slope " << short_num(s.fit.slope) << " [" << short_num(s.fit.ci_low) << ", "
        << short_num(s.fit.ci_high) << "]\n";
  for (const auto& [k, v] : r.metrics) out << "  " << k << " = " << short_num(v) << "\n";
  for (const auto& v : r.verdicts)
    out << "  " << (v.pass ? (v.inconclusive ? "PASS (inconclusive)" : "PASS") : "FAIL") << " " << v.name
        << ": observed " << short_num(v.observed) << ", threshold " << short_num(v.threshold) << " - " << v.detail
        << "\n";
  for (const auto& w : r.warnings) out << "  warning: " << w << "\n";
  return out.str();
}

}  // namespace pareto_smooth
