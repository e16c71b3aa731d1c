#pragma once

// Muckenhoupt A_p weights on the grid: construction, weighted measure, the
// family-estimated A_p constant, and the decay / doubling diagnostics.

#include <optional>
#include <span>

#include "beurling/grid.hpp"

namespace beurling {

struct PowerFactor {
  double alpha;
  complex center;
};

/// Declared class of a weight: empty factors means constant.
struct WeightClass {
  double scale = 1.0;
  std::vector<PowerFactor> factors;
};

class Weight {
 public:
  /// Throws std::invalid_argument unless every sample is positive and p > 1.
  Weight(RealField values, double p, std::optional<WeightClass> declared = std::nullopt);

  const RealField& values() const { return values_; }
  const GridSpec& spec() const { return values_.spec(); }
  double p() const { return p_; }
  double dual_exponent() const { return p_ / (p_ - 1.0); }
  const std::optional<WeightClass>& declared() const { return declared_; }

  Weight rescaled(double c) const;

 private:
  RealField values_;
  double p_;
  std::optional<WeightClass> declared_;
};

Weight constant_weight(const GridSpec& spec, double value, double p);

/// prod |z - z_i|^{alpha_i}. A sample sitting exactly on a centre takes the
/// cell average of the weight (16 x 16 midpoint refinement of the cell
/// centred at the sample). With claim_ap each alpha must satisfy
/// -2 < alpha < 2(p - 1).
Weight power_weight(const GridSpec& spec, std::span<const PowerFactor> factors, double p, bool claim_ap = true);
Weight power_weight(const GridSpec& spec, double alpha, complex center, double p, bool claim_ap = true);

/// w(Q) = integral of w over Q. Throws std::domain_error outside the window.
double weighted_measure(const Weight& w, const Square& q);
/// w(E) for an explicit sample set.
double weighted_measure(const Weight& w, std::span<const std::size_t> samples);

struct ApReport {
  double constant = 0.0;
  std::vector<double> per_square;
  SquareFamily family;
  std::size_t argmax = 0;
};

/// max over the family of <w>_Q <w^{1 - p'}>_Q^{p - 1}.
ApReport ap_constant(const Weight& w, const SquareFamily& family);

struct SigmaFit {
  double sigma = 0.0;
  double c_w = 0.0;
  std::vector<double> measure_ratio;  // |E| / |Q|
  std::vector<double> weight_ratio;   // w(E) / w(Q)
};

/// Least-squares fit of log(w(E)/w(Q)) against log(|E|/|Q|) over the subsets,
/// skipping E = Q. Throws with fewer than two usable subsets.
SigmaFit sigma_estimate(const Weight& w, const Square& q, const SquareFamily& subsets);

struct DoublingFit {
  double exponent = 0.0;
  double bound = 0.0;  // 2p + 0.2
  bool pass = false;
  std::vector<double> factors;
  std::vector<double> measures;
};

/// Slope of log w(tQ) against log t over t in {1} u factors.
/// Throws std::domain_error when some tQ leaves the window.
DoublingFit doubling_check(const Weight& w, const Square& q, std::span<const double> factors);

/// Slope and intercept of the least-squares line y = a + s x.
std::pair<double, double> least_squares_line(std::span<const double> x, std::span<const double> y);

}  // namespace beurling
