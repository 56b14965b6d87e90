#pragma once

#include <vector>

#include "a1lab/maximal.hpp"
#include "a1lab/weights.hpp"

namespace a1lab {

/// The open set E_lambda = [M(phi) > lambda] as disjoint open intervals in
/// increasing order, with its measure and the mass of phi on it.
struct LevelSetDecomposition {
  double lambda;
  std::vector<Interval> components;
  double measure;  // sum of component lengths
  double mass;     // sum of exact integrals of phi over the components
};

/// Exact decomposition of E_lambda. Within each piece every maximal-
/// function candidate is monotone in x, so its super-level set is a
/// subinterval with a closed-form endpoint (one linear solve); component
/// endpoints solve M(phi) = lambda and are excluded. For lambda below the
/// total mass the set is all of (0,1).
LevelSetDecomposition level_set(const PiecewiseConstantWeight& w,
                                double lambda);

/// The level-set lower bound |E_lambda| >= (1/lambda) * mass(E_lambda),
/// valid for lambda >= total mass.
struct LevelBoundReport {
  double lambda;
  double measure;
  double mass_over_lambda;
  bool pass;  // measure >= mass/lambda with 1e-12 relative slack
};

/// Requires lambda >= total_mass (below that the bound is not asserted).
LevelBoundReport check_level_bound(const PiecewiseConstantWeight& w,
                                   double lambda);

/// Two independent routes to the p-th moment of the maximal function:
/// lhs integrates M(phi)^p over (0,1) by adaptive panels split at
/// breakpoints; rhs integrates p * lambda^(p-1) * |E_lambda| over lambda,
/// split at every value where the level-set structure can change.
struct LayerCakeReport {
  double lhs;
  double rhs;
  double diff;
};

/// Requires 1 < p < c/(c-1) with c the exact A1 constant of w.
LayerCakeReport layer_cake_check(const PiecewiseConstantWeight& w, double p,
                                 double tol = 1e-8);

/// Power-weight version: M(phi) = c * phi in closed form, |E_lambda| =
/// min(1, (lambda/c)^(1/e)); both sides by quadrature on graded panels.
LayerCakeReport layer_cake_check(const PowerWeight& w, double p,
                                 double tol = 1e-8);

}  // namespace a1lab
