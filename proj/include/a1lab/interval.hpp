#pragma once

#include <stdexcept>
#include <vector>

namespace a1lab {

/// Open subinterval (lo, hi) of the unit interval, 0 <= lo < hi <= 1.
struct Interval {
  double lo;
  double hi;

  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(0.0 <= lo && lo < hi && hi <= 1.0))
      throw std::invalid_argument("Interval: need 0 <= lo < hi <= 1");
  }

  double length() const { return hi - lo; }

  bool operator==(const Interval&) const = default;
};

/// (0,1) followed by all dyadic subintervals (j/2^l, (j+1)/2^l) for
/// l = 1..depth. depth 0 gives just (0,1).
std::vector<Interval> dyadic_intervals(int depth);

}  // namespace a1lab
