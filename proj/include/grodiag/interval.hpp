#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include "grodiag/error.hpp"

namespace grodiag {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Half-open interval [birth, death), death possibly +inf. birth == death
// is the diagonal. All comparisons on endpoints are exact.
struct Interval {
  double birth = 0;
  double death = 0;

  Interval() = default;
  Interval(double b, double d) : birth(b), death(d) {
    if (std::isnan(b) || std::isnan(d)) fail(Errc::input, "interval endpoint is NaN");
    if (!std::isfinite(b)) fail(Errc::input, "interval birth must be finite");
    if (d < b) fail(Errc::order, "interval death below birth");
  }

  bool is_diagonal() const { return birth == death; }
  bool death_finite() const { return std::isfinite(death); }
  // J contains I iff J.birth <= I.birth and I.death <= J.death
  bool contains(const Interval& other) const {
    return birth <= other.birth && other.death <= death;
  }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& i);

} // namespace grodiag
