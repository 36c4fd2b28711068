#include "pareto_smooth/pareto/pareto.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pareto_smooth {

bool dominates(std::span<const Fixed> p, std::span<const Fixed> q) {
  if (p.size() != q.size()) throw std::invalid_argument("dominates: vectors differ in length");
  return t_dominates(p, q, p.size());
}

bool t_dominates(std::span<const Fixed> p, std::span<const Fixed> q, std::size_t t) {
  if (t == 0) throw std::invalid_argument("t_dominates: t must be at least 1");
  if (t > p.size() || t > q.size()) throw std::invalid_argument("t_dominates: t exceeds vector length");
  for (std::size_t i = 0; i < t; ++i)
    if (p[i] < q[i]) return false;
  return true;
}

std::vector<ObjectivePoint> objective_points(const Instance& inst) {
  const auto linear = inst.linear_objectives();
  const std::size_t d = inst.d();
  std::vector<ObjectivePoint> points(inst.solutions().size(), ObjectivePoint(d + 1));
  for (std::size_t z = 0; z < points.size(); ++z) {
    std::copy_n(linear.begin() + static_cast<std::ptrdiff_t>(z * d), d, points[z].begin());
    points[z][d] = inst.tail_objectives()[z];
  }
  return points;
}

namespace {

ParetoResult make_result(std::vector<std::size_t> optima, const std::vector<ObjectivePoint>& points) {
  std::sort(optima.begin(), optima.end());
  ParetoResult r;
  r.points.reserve(optima.size());
  for (auto k : optima) r.points.push_back(points[k]);
  r.optima = std::move(optima);
  return r;
}

}  // namespace

ParetoResult pareto_sweep(const Instance& inst, const SweepObserver& observer) {
  const auto points = objective_points(inst);
  const std::size_t d = inst.d();
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a][d] > points[b][d]; });

  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t z = order[k];
    if (k > 0 && !(points[order[k - 1]][d] > points[z][d]))
      throw std::logic_error("pareto_sweep: tail objectives are not strictly decreasing");
    const bool blocked = std::any_of(kept.begin(), kept.end(),
                                     [&](std::size_t p) { return t_dominates(points[p], points[z], d); });
    if (!blocked) kept.push_back(z);
    if (observer) observer(kept);
  }
  return make_result(std::move(kept), points);
}

ParetoResult brute_force_pareto(const Instance& inst) {
  const auto points = objective_points(inst);
  std::vector<std::size_t> optima;
  for (std::size_t p = 0; p < points.size(); ++p) {
    bool optimal = true;
    for (std::size_t q = 0; q < points.size() && optimal; ++q) {
      if (q == p) continue;
      bool beats_somewhere = false;
      for (std::size_t i = 0; i < points[p].size(); ++i)
        if (points[p][i] > points[q][i]) beats_somewhere = true;
      optimal = beats_somewhere;
    }
    if (optimal) optima.push_back(p);
  }
  return make_result(std::move(optima), points);
}

}  // namespace pareto_smooth
