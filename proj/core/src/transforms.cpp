#include "beurling/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "beurling/parallel.hpp"
#include "beurling/spectral.hpp"

namespace beurling {

namespace {

double exp_neg_inverse(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

void require_finite(const ComplexField& f, const char* what) {
  if (!f.all_finite()) throw NumericalError(std::string(what) + ": input field has non-finite samples");
}

// Summed-area table with a zero border: S(j, k) = sum over [0, j) x [0, k).
class PrefixSum {
 public:
  explicit PrefixSum(const RealField& f) : n_(f.spec().n()), table_((n_ + 1) * static_cast<std::size_t>(n_ + 1)) {
    for (int k = 0; k < n_; ++k) {
      double row = 0.0;
      for (int j = 0; j < n_; ++j) {
        row += f.at(j, k);
        at(j + 1, k + 1) = at(j + 1, k) + row;
      }
    }
  }

  double box_sum(const SampleBox& b) const {
    if (b.empty()) return 0.0;
    return at(b.j_end, b.k_end) - at(b.j_begin, b.k_end) - at(b.j_end, b.k_begin) + at(b.j_begin, b.k_begin);
  }

 private:
  double& at(int j, int k) { return table_[static_cast<std::size_t>(k) * (n_ + 1) + j]; }
  double at(int j, int k) const { return table_[static_cast<std::size_t>(k) * (n_ + 1) + j]; }

  int n_;
  std::vector<double> table_;
};

}  // namespace

double CutoffProfile::smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = exp_neg_inverse(t);
  const double b = exp_neg_inverse(1.0 - t);
  return a / (a + b);
}

void require_resolved_scale(const GridSpec& spec, double eta) {
  if (!(eta >= 2.0 * spec.spacing()) || !std::isfinite(eta))
    throw std::invalid_argument("truncation scale eta=" + std::to_string(eta) + " is below 2h=" +
                                std::to_string(2.0 * spec.spacing()));
}

complex beurling_multiplier(complex xi) {
  if (xi == complex(0.0, 0.0)) return {0.0, 0.0};
  return std::conj(xi) / xi;
}

complex beurling_kernel(complex d) { return -1.0 / (M_PI * d * d); }

complex truncated_kernel(complex d, double eta) {
  if (d == complex(0.0, 0.0)) return {0.0, 0.0};
  const double w = CutoffProfile{}(std::abs(d) / eta);
  if (w == 0.0) return {0.0, 0.0};
  return w * beurling_kernel(d);
}

ComplexField beurling(const ComplexField& f) {
  require_finite(f, "beurling");
  return apply_multiplier(f, beurling_multiplier);
}

ComplexField beurling_power(const ComplexField& f, int power) {
  if (power < 1) throw std::invalid_argument("beurling_power needs N >= 1");
  require_finite(f, "beurling_power");
  return apply_multiplier(f, [power](complex xi) {
    const complex m = beurling_multiplier(xi);
    complex out(1.0, 0.0);
    for (int i = 0; i < power; ++i) out *= m;
    return m == complex(0.0, 0.0) ? m : out;
  });
}

ComplexField beurling_truncated(const ComplexField& f, double eta) {
  require_resolved_scale(f.spec(), eta);
  require_finite(f, "beurling_truncated");
  return linear_convolution(f, [eta](complex d) { return truncated_kernel(d, eta); });
}

complex beurling_truncated_at(const ComplexField& f, double eta, int j, int k) {
  const GridSpec& spec = f.spec();
  require_resolved_scale(spec, eta);
  const int n = spec.n();
  const double h = spec.spacing();
  complex sum{};
  for (int v = 0; v < n; ++v) {
    complex row{};
    for (int u = 0; u < n; ++u) {
      const complex d((j - u) * h, (k - v) * h);
      row += truncated_kernel(d, eta) * f.at(u, v);
    }
    sum += row;
  }
  return spec.cell_area() * sum;
}

RealField beurling_maximal(const ComplexField& f, std::span<const double> etas) {
  if (etas.empty()) throw std::invalid_argument("beurling_maximal needs at least one scale");
  RealField out(f.spec(), 0.0);
  for (double eta : etas) {
    const ComplexField b = beurling_truncated(f, eta);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], std::abs(b[i]));
  }
  return out;
}

RealField hl_maximal(const ComplexField& f, const SquareFamily& family) {
  const GridSpec& spec = f.spec();
  const RealField absf = modulus(f);
  const PrefixSum prefix(absf);
  RealField out = absf;
  for (const Square& q : family) {
    const SampleBox box = sample_box(spec, q);
    if (box.empty()) continue;
    const double m = prefix.box_sum(box) / static_cast<double>(box.count());
    for (int k = box.k_begin; k < box.k_end; ++k)
      for (int j = box.j_begin; j < box.j_end; ++j) out.at(j, k) = std::max(out.at(j, k), m);
  }
  return out;
}

RealField centered_maximal(const ComplexField& f, std::span<const double> radii) {
  const GridSpec& spec = f.spec();
  const int n = spec.n();
  const RealField absf = modulus(f);
  const PrefixSum prefix(absf);
  RealField out = absf;
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t kk) {
    const int k = static_cast<int>(kk);
    for (int j = 0; j < n; ++j) {
      double best = out.at(j, k);
      for (double r : radii) {
        const SampleBox box = sample_box(spec, Square(spec.point(j, k), r));
        if (box.empty()) continue;
        best = std::max(best, prefix.box_sum(box) / static_cast<double>(box.count()));
      }
      out.at(j, k) = best;
    }
  });
  return out;
}

ComplexField wirtinger(const ComplexField& f, Wirtinger which) {
  require_finite(f, "wirtinger");
  const complex i(0.0, 1.0);
  if (which == Wirtinger::dz) return apply_multiplier(f, [i](complex xi) { return 0.5 * i * std::conj(xi); });
  return apply_multiplier(f, [i](complex xi) { return 0.5 * i * xi; });
}

RealField total_derivative(const ComplexField& f) {
  const ComplexField d = wirtinger(f, Wirtinger::dz);
  const ComplexField db = wirtinger(f, Wirtinger::dzbar);
  RealField out(f.spec());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(d[i]) + std::abs(db[i]);
  return out;
}

ComplexField cauchy(const ComplexField& g) {
  require_finite(g, "cauchy");
  const complex i(0.0, 1.0);
  return apply_multiplier(g, [i](complex xi) {
    if (xi == complex(0.0, 0.0)) return complex(0.0, 0.0);
    return 1.0 / (0.5 * i * xi);
  });
}

double gradient_sup(const ComplexField& b) {
  const RealField d = total_derivative(b);
  return *std::max_element(d.values().begin(), d.values().end());
}

ComplexField commutator_truncated(const ComplexField& b, const ComplexField& f, double eta) {
  require_same_grid(b.spec(), f.spec());
  return b * beurling_truncated(f, eta) - beurling_truncated(b * f, eta);
}

RealField commutator_truncation_gap(const ComplexField& b, const ComplexField& f, double eta) {
  const double eta_ref = 2.0 * b.spec().spacing();
  const ComplexField diff = commutator_truncated(b, f, eta) - commutator_truncated(b, f, eta_ref);
  return modulus(diff);
}

}  // namespace beurling
