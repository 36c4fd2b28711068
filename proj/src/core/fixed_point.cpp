#include "pareto_smooth/core/fixed_point.hpp"

#include <cmath>

namespace pareto_smooth {

double FixedFormat::to_double(Fixed v) const { return std::ldexp(static_cast<double>(v.raw), -frac_bits); }

Fixed FixedFormat::quantize(double v) const {
  return {static_cast<std::int64_t>(std::floor(std::ldexp(v, frac_bits)))};
}

double Epsilon::value() const { return std::ldexp(1.0, -exponent); }

}  // namespace pareto_smooth
