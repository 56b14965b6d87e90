#pragma once

#include "a1lab/weights.hpp"

namespace a1lab {

/// A decreasing rearrangement is an ordinary step weight whose values are
/// strictly decreasing (equal values merged).
using RearrangedWeight = PiecewiseConstantWeight;

/// The decreasing rearrangement: pieces sorted by value descending, equal
/// values merged, lengths preserved. Group lengths are accumulated in
/// (value desc, original index) order so that measure_above of the source
/// and of the rearrangement agree bit for bit.
RearrangedWeight rearrange(const PiecewiseConstantWeight& w);

/// |{phi > lambda}|, the distribution function of a step weight, summed in
/// canonical (value desc, original index) grouped order. Equimeasurable
/// weights produced by rearrange() give identical doubles.
double measure_above(const PiecewiseConstantWeight& w, double lambda);

/// Worst ratio of the running average (1/t) * integral over (0,t) to the
/// weight value, over t in (0,1), compared against a candidate constant c.
struct StarA1Report {
  double worst_ratio;
  double worst_t;
  double c;
  bool pass;  // worst_ratio <= c, with 1e-12 relative slack
};

/// For a decreasing step weight the ratio is nonincreasing on each piece,
/// so it is evaluated only at piece left endpoints (with right values).
/// Throws if the values are not strictly decreasing.
StarA1Report check_star_a1(const RearrangedWeight& w_star, double c);

}  // namespace a1lab
