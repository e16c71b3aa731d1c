#pragma once

// Neumann-series solver for dbar f - b df = g and its diagnostics.

#include <optional>
#include <span>

#include "beurling/grid.hpp"
#include "beurling/morrey.hpp"
#include "beurling/weights.hpp"

namespace beurling {

/// Throws std::invalid_argument unless sup |b| < 1, b vanishes outside the
/// central half-window, and b, g share a grid.
struct BeltramiProblem {
  BeltramiProblem(ComplexField b, ComplexField g);

  ComplexField b;
  ComplexField g;
  double b_sup = 0.0;
};

enum class NeumannOrder {
  horner,  // h_N = g + bB h_{N-1}
  terms,   // t_N = bB t_{N-1}, h = sum of t_N
};

struct NeumannResult {
  ComplexField h;
  int n_used = 0;
  /// ||(bB)^N g||_2 for N = 0 .. n_used.
  std::vector<double> term_norms;
  bool converged = false;
};

/// Iterates until ||(bB)^N g||_2 <= tol ||g||_2 or N_max is reached; the
/// partial sum is returned either way with converged set accordingly.
NeumannResult neumann_invert(const ComplexField& b, const ComplexField& g, double tol, int n_max,
                             NeumannOrder order = NeumannOrder::horner);

struct SolveReport {
  /// Periodic part of the solution, C h. The full solution is
  /// f + affine * conj(z); the affine term carries the mean of dbar f.
  ComplexField f;
  complex affine{};
  ComplexField dz;
  ComplexField dzbar;
  int n_used = 0;
  std::vector<double> term_norms;
  bool converged = false;
  /// ||dbar f - b df - g||_2 / ||g||_2 from spectral derivatives of f.
  double residual = 0.0;
  /// ||(bB)^{N+1} g|| / ||g|| bounded by the geometric envelope.
  double tail_estimate = 0.0;
};

SolveReport solve_beltrami(const BeltramiProblem& problem, double tol, int n_max,
                           NeumannOrder order = NeumannOrder::horner);

/// Morrey norm of |df| + |dbar f| over that of |g|. Throws std::domain_error
/// for g = 0.
double apriori_ratio(const SolveReport& report, const ComplexField& g, const Weight& w, const MorreyParams& params,
                     const SquareFamily& family);

struct GrowthRow {
  int power = 0;
  double ratio = 0.0;  // max over probes of ||b^N B^N f|| / ||f||
  double envelope = 0.0;
};

struct GrowthProbe {
  std::vector<GrowthRow> rows;
  double c_tilde = 0.0;
  double b_sup = 0.0;
  bool within_envelope = false;
};

/// Fits C~ = max ratio / (N^2 sup|b|^N) over the first fit_count powers and
/// checks ratio <= C~ N^2 sup|b|^N over all of them.
GrowthProbe norm_growth_probe(const ComplexField& b, std::span<const int> powers,
                              std::span<const ComplexField> probes, const Weight& w, const MorreyParams& params,
                              const SquareFamily& family, std::size_t fit_count = 2);

}  // namespace beurling
