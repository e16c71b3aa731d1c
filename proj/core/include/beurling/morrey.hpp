#pragma once

// Weighted Morrey norms over finite square families.

#include <span>

#include "beurling/grid.hpp"
#include "beurling/weights.hpp"

namespace beurling {

class MorreyParams {
 public:
  /// Throws std::invalid_argument unless 1 < p < inf and 0 < kappa < 1.
  MorreyParams(double p, double kappa);

  double p() const { return p_; }
  double kappa() const { return kappa_; }

 private:
  double p_;
  double kappa_;
};

/// (h^2 sum_{u in Q} |f(u)|^p w(u))^{1/p}.
double weighted_lp_over_square(const ComplexField& f, const Weight& w, const Square& q, double p);
double weighted_lp_over_square(const RealField& f, const Weight& w, const Square& q, double p);

/// max over the family of weighted_lp_over_square / w(Q)^{kappa / p}.
double morrey_norm(const ComplexField& f, const Weight& w, const MorreyParams& params, const SquareFamily& family);
double morrey_norm(const RealField& f, const Weight& w, const MorreyParams& params, const SquareFamily& family);

/// Per-square terms of morrey_norm, in family order.
std::vector<double> morrey_terms(const ComplexField& f, const Weight& w, const MorreyParams& params,
                                 const SquareFamily& family);

struct CompactnessTriple {
  double norm = 0.0;
  double tail = 0.0;
  double modulus = 0.0;
};

/// Relative-compactness diagnostics for a set of fields: the norm, the norm
/// of f restricted to |z| > tail_radius, and the largest norm of
/// f(. + xi) - f over the shifts. Shifts must be integer multiples of h.
std::vector<CompactnessTriple> fk_diagnostics(std::span<const ComplexField> fs, const Weight& w,
                                              const MorreyParams& params, const SquareFamily& family,
                                              double tail_radius, std::span<const complex> shifts);

}  // namespace beurling
