#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "a1lab/interval.hpp"

namespace a1lab {

/// Positive step weight on (0,1).
///
/// Pieces are right-continuous: values()[i] applies on
/// [breakpoints()[i], breakpoints()[i+1]). Piece lengths are stored
/// explicitly and are authoritative for all integrals; breakpoints carry
/// the geometry. The two agree to within rounding and exactly for weights
/// built from breakpoints.
class PiecewiseConstantWeight {
 public:
  /// breakpoints must be strictly increasing from 0 to 1; values all > 0.
  /// Degenerate pieces are rejected, not merged.
  PiecewiseConstantWeight(std::vector<double> breakpoints,
                          std::vector<double> values);

  /// Builds a weight from (value, length) pieces; breakpoints are the
  /// running sums of the lengths with the last pinned to 1. The given
  /// lengths stay authoritative for integration.
  static PiecewiseConstantWeight from_pieces(std::vector<double> values,
                                             std::vector<double> lengths);

  std::size_t piece_count() const { return values_.size(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& lengths() const { return lengths_; }

  /// P(x_j) = integral of the weight over (0, x_j), exact cumulative lookup.
  double prefix_at(std::size_t j) const { return prefix_[j]; }

  double total_mass() const { return prefix_.back(); }

  /// Right-continuous value; defined on [0,1] with value_at(1) = last piece.
  double value_at(double x) const;

  /// Index of the piece covering [x, x+eps), for x in [0,1).
  std::size_t piece_index(double x) const;

  /// Index j when x equals breakpoint x_j exactly, nullopt otherwise.
  std::optional<std::size_t> breakpoint_index(double x) const;

  /// P(x) = integral over (0,x); continuous, strictly increasing,
  /// piecewise linear, evaluated exactly. Requires 0 <= x <= 1.
  double prefix_integral(double x) const;

  bool operator==(const PiecewiseConstantWeight&) const = default;

 private:
  PiecewiseConstantWeight() = default;

  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<double> lengths_;
  std::vector<double> prefix_;  // prefix_[j] = P(x_j), size k+1

  void finish_construction();
};

/// Exact integral of the p-th power over I: sum of v_i^p * |I ∩ piece_i|.
/// Requires p >= 1.
double integrate_p(const PiecewiseConstantWeight& w, const Interval& I,
                   double p);

/// The extremal family t^(-1+1/c) for c > 1: decreasing, integrable,
/// A1 constant exactly c, and (1/t) * integral over (0,t) = c * phi(t).
class PowerWeight {
 public:
  explicit PowerWeight(double c);

  double c() const { return c_; }
  /// e = -1 + 1/c, in (-1, 0).
  double exponent() const { return e_; }
  /// c/(c-1), the supremum of integrable powers.
  double critical_p() const { return c_ / (c_ - 1.0); }

  double value_at(double t) const;
  /// c * t^(1/c).
  double prefix_integral(double t) const;
  /// Equals c.
  double total_mass() const { return c_; }

 private:
  double c_;
  double e_;
};

/// Closed form (hi^(1+ep) - lo^(1+ep))/(1+ep). Requires p >= 1; throws
/// NonIntegrableError when 1 + e*p <= 0, i.e. p >= c/(c-1).
double integrate_p(const PowerWeight& w, const Interval& I, double p);

/// Deterministic generator: 1..max_pieces pieces, breakpoints from sorted
/// uniform draws, values log-uniform in (value_lo, value_hi). Identical
/// seeds give identical weights across runs.
PiecewiseConstantWeight random_weight(std::uint64_t seed, int max_pieces,
                                      double value_lo, double value_hi);

/// Restriction of w to I, rescaled affinely onto (0,1). Interval averages
/// (hence the A1 constant of the restriction) are unchanged by the rescale.
PiecewiseConstantWeight restrict_to(const PiecewiseConstantWeight& w,
                                    const Interval& I);

}  // namespace a1lab
