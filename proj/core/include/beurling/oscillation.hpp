#pragma once

// Median values, mean oscillation and the discrete BMO norm.

#include "beurling/grid.hpp"

namespace beurling {

/// Lower median of the samples of f in Q: sorted[(m - 1) / 2]. It minimises
/// c -> mean_Q |f - c|. The complex overload throws std::invalid_argument
/// when f has a nonzero imaginary part in Q.
double median_value(const RealField& f, const Square& q);
double median_value(const ComplexField& f, const Square& q);

/// O(f; Q) = mean_Q |f - <f>_Q| (complex modulus for complex f).
double mean_oscillation(const RealField& f, const Square& q);
double mean_oscillation(const ComplexField& f, const Square& q);

/// mean_Q |f - c|.
double mean_deviation(const RealField& f, const Square& q, double c);

struct SquareOscillation {
  double mean = 0.0;
  double median = 0.0;
  double oscillation = 0.0;
  double median_oscillation = 0.0;
};

struct OscillationReport {
  SquareFamily family;
  std::vector<SquareOscillation> squares;
  double bmo = 0.0;
};

OscillationReport oscillation_report(const RealField& f, const SquareFamily& family);

/// max over the family of O(f; Q); 0 for an empty family.
double bmo_norm(const RealField& f, const SquareFamily& family);
double bmo_norm(const ComplexField& f, const SquareFamily& family);

struct CmoProbe {
  double small = 0.0;
  double large = 0.0;
  double translated = 0.0;
};

/// Maxima of O(f; .) over the three declared families (small squares, large
/// squares, far translates). Throws on an empty family.
CmoProbe cmo_probe(const RealField& f, const SquareFamily& small_area, const SquareFamily& large_area,
                   const SquareFamily& translated);

/// max O(f; .) along a nested sequence of families.
std::vector<double> oscillation_trend(const RealField& f, const std::vector<SquareFamily>& sequence);

}  // namespace beurling
