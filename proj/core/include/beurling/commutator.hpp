#pragma once

// The commutator [b, B] in FFT and kernel-quadrature form, product sets of a
// real symbol, the oscillating test family f_j with its shifted-square
// integrals, pairwise separation, and the oscillation-to-commutator chain.

#include <array>
#include <span>

#include "beurling/grid.hpp"
#include "beurling/morrey.hpp"
#include "beurling/weights.hpp"

namespace beurling {

enum class CommutatorMode { fft, quadrature };

/// fft: b Bf - B(bf) with the periodic multiplier.
/// quadrature: the truncated kernel integral at scale eta (eta >= 2h).
ComplexField commutator_apply(const ComplexField& b, const ComplexField& f, CommutatorMode mode, double eta = 0.0);

/// Field stored by its nonzero samples.
struct SparseField {
  GridSpec spec;
  std::vector<std::size_t> index;
  std::vector<complex> value;

  ComplexField dense() const;
};

/// h^2 sum_{u in supp f} (b(z) - b(u)) K(z - u) f(u) for the samples z in
/// target, zero elsewhere. eta = 0 uses the untruncated kernel with the
/// diagonal term dropped; eta > 0 uses the truncated kernel (eta >= 2h).
ComplexField commutator_sparse(const RealField& b, const SparseField& f, double eta, const SampleBox& target);

struct ProductSets {
  Square q;
  Square q_tilde;
  double alpha = 0.0;
  std::array<std::vector<std::size_t>, 2> e;
  std::array<std::vector<std::size_t>, 2> f;
};

/// Q~ = Q + 4r(1 + i), alpha = median of b over Q~,
/// E1 = {b >= alpha}, E2 = {b <= alpha} in Q; F1 = {b <= alpha}, F2 = {b >= alpha} in Q~.
/// Throws std::domain_error unless Q and Q~ lie in the central half-window.
ProductSets product_sets(const RealField& b, const Square& q);

struct ProductSetCheck {
  bool cover = false;
  bool cardinality = false;
  bool domination = false;
  bool sign = false;
  bool all() const { return cover && cardinality && domination && sign; }
};

/// Cover and cardinality exactly; domination on an evenly strided
/// pair_side x pair_side subsample of each E_j x F_j; sign conditions over
/// the full pair sets via extremal values.
ProductSetCheck check_product_sets(const RealField& b, const ProductSets& sets, std::size_t pair_side = 32);

struct TestMember {
  Square q;
  double alpha = 0.0;
  double a = 0.0;
  double scale = 0.0;  // w(Q_j)^{(kappa - 1) / p}
  double oscillation = 0.0;
  std::size_t count = 0;
  std::vector<std::size_t> upper;  // b > alpha
  std::vector<std::size_t> lower;  // b < alpha
  SparseField f;
};

struct TestFamily {
  std::vector<TestMember> members;
  double delta = 0.0;
  int k_max = 0;
};

struct TestFamilyOptions {
  double delta = 0.0;
  /// Dilates 3^{k_max + 1} Q_j must sit in the central half-window.
  int k_max = 0;
  /// When false the oscillation threshold is not enforced (vacuous families).
  bool require_oscillation = true;
};

/// f_j = w(Q_j)^{(kappa - 1)/p} (chi_{b > alpha} - chi_{b < alpha} - a_j chi_{Q_j})
/// with a_j = (#upper - #lower) / #Q_j.
TestFamily build_test_family(const RealField& b, const SquareFamily& squares, const Weight& w,
                             const MorreyParams& params, const TestFamilyOptions& options);

struct TestFamilyCheck {
  double max_mean = 0.0;  // |sum f_j| / sum |f_j|
  bool mean_zero = false;
  bool a_bound = false;
  bool support = false;
  bool sign = false;
  bool magnitude = false;
  bool all() const { return mean_zero && a_bound && support && sign && magnitude; }
};

TestFamilyCheck check_test_family(const RealField& b, const TestFamily& tf);

/// Q_j^k = 3^{k-1} Q_j + 3^k r_j (1, 0).
Square shifted_square(const Square& q, int k);

/// 3^{k-1} Q ⊂ 4 Q^k ⊂ 3^{k+1} Q, checked in integer units of r.
bool shifted_inclusions_hold(int k);

struct BoundRow {
  std::size_t j = 0;
  int k = 0;
  double lower_lhs = 0.0;
  double lower_ref = 0.0;
  double c1 = 0.0;
  double upper_lhs = 0.0;
  double upper_ref = 0.0;
  double c2 = 0.0;
  double measure_ratio = 0.0;  // w(Q_j^k) / w(3^k Q_j)
  bool inclusions = false;
};

/// Integrals of |[b, B] f_j|^p w over Q_j^k and over 3^{k+1}Q_j \ 3^k Q_j,
/// against delta^p 3^{-2kp} w(Q_j)^{kappa - 1} w(3^k Q_j) and
/// 3^{-2kp} w(Q_j)^{kappa - 1} w(3^k Q_j). The commutator is summed directly
/// over supp f_j with the untruncated kernel.
std::vector<BoundRow> lower_upper_bounds(const TestFamily& tf, const RealField& b, const Weight& w,
                                         const MorreyParams& params, std::span<const int> ks);

struct SeparationReport {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// [family][pair] Morrey norm of [b, B] f_j - [b, B] f_m.
  std::vector<std::vector<double>> separation;
  std::vector<double> minimum;  // per family; empty pairs leave this empty
  bool radii_monotone = false;
};

/// Throws std::invalid_argument when some 3 c1 Q_l and 3 c1 Q_m overlap.
SeparationReport separation_experiment(const TestFamily& tf, const RealField& b, const Weight& w,
                                       const MorreyParams& params, const std::vector<SquareFamily>& families,
                                       double c1, double eta);

struct NormProxy {
  double value = 0.0;
  std::vector<double> ratios;
};

/// max over probes g of ||[b, B] g|| / ||g|| in the Morrey norm (FFT mode).
NormProxy operator_norm_proxy(const RealField& b, std::span<const ComplexField> probes, const Weight& w,
                              const MorreyParams& params, const SquareFamily& family);

inline constexpr std::size_t kChainSteps = 14;

struct ChainReport {
  ProductSets sets;
  /// s[0] = O(b; Q), ..., s[8] = sum_j mean_Q |[b, B] chi_{F_j}|, ...,
  /// s[13] = operator-norm proxy.
  std::array<double, kChainSteps> steps{};
  /// steps[i] / steps[i + 1] (0 when both vanish).
  std::array<double, kChainSteps - 1> ratios{};
  /// max over sampled pairs of (|b(z) - alpha| / |z - u|^2) / (|b(z) - b(u)| |(x - s)(y - t)| / |z - u|^4).
  double kernel_ratio = 0.0;
  NormProxy proxy;
};

/// Evaluates the chain for real b on Q. The Morrey family is augmented with
/// Q; the probe set is chi_{F_1}, chi_{F_2} and extra_probes.
ChainReport oscillation_vs_commutator(const RealField& b, const Square& q, const Weight& w,
                                      const MorreyParams& params, const SquareFamily& family,
                                      std::span<const ComplexField> extra_probes);

}  // namespace beurling
