#pragma once

#include <optional>
#include <vector>

#include "a1lab/weights.hpp"

namespace a1lab {

/// How to evaluate the maximal function at a point. The one-sided limits
/// exist everywhere; they matter at breakpoints, where the pointwise value
/// is a measure-zero convention the library does not impose.
enum class Side { interior, left_limit, right_limit };

/// Value of the maximal function at a point, with the interval achieving
/// it. An empty witness means the supremum is approached by shrinking
/// intervals, i.e. the value is the local weight value.
struct MaximalValue {
  double value;
  std::optional<Interval> witness;
};

/// The A1 constant together with where the essential supremum of M(phi)/phi
/// is attained (as a one-sided limit at a breakpoint).
struct A1Result {
  double constant;
  double argmax_breakpoint;
  Side side;
};

/// Exact M(phi)(x): max of the local value and the steepest chords of the
/// prefix integral from x back/forward to each breakpoint.
///
/// Side::interior requires x in (0,1) and not a breakpoint. The limit
/// sides accept breakpoints, and also x = 0 (right) / x = 1 (left), where
/// only the one-sided limit makes sense.
MaximalValue maximal_at(const PiecewiseConstantWeight& w, double x,
                        Side side = Side::interior);

/// Closed form c * x^(-1+1/c) with the left-anchored witness (0, x).
MaximalValue maximal_at(const PowerWeight& w, double x);

/// One-sided maximal values at a breakpoint. At 0 the left slot repeats the
/// right limit, at 1 the right slot repeats the left limit.
struct BreakpointMaxima {
  double breakpoint;
  double left_value;
  double right_value;
};

/// Both one-sided limits of M(phi) at every breakpoint in O(k log k):
/// a sweep over the prefix points (x_j, P(x_j)) maintaining the lower
/// convex hull, answering steepest-chord queries by binary search on the
/// hull (chord slope to a convex chain is unimodal). Values match a
/// per-breakpoint candidate scan exactly: both pick a maximum over the
/// same chord quotients.
std::vector<BreakpointMaxima> maximal_at_all_breakpoints_fast(
    const PiecewiseConstantWeight& w);

/// Exact A1 constant: on each piece every chord average is monotone in x,
/// so sup M(phi)/phi over the piece is the larger endpoint limit divided by
/// the piece value; the result is the max over pieces. Ties resolve to the
/// earliest breakpoint, right limit before left.
A1Result a1_constant_exact(const PiecewiseConstantWeight& w);

/// Exactly c (right limit at 0: the witness family (0, t) realizes it).
A1Result a1_constant_exact(const PowerWeight& w);

/// Supremum of average/essinf over all intervals with endpoints on the
/// union of the breakpoints and the uniform grid of step `mesh`. A lower
/// bound on the exact A1 constant, nondecreasing as the mesh refines.
double a1_constant_interval_scan(const PiecewiseConstantWeight& w,
                                 double mesh);

/// sup over (0,1) of M(phi): the largest one-sided breakpoint value.
double sup_maximal(const PiecewiseConstantWeight& w);

}  // namespace a1lab
