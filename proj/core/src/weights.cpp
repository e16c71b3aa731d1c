#include "beurling/weights.hpp"

#include <cmath>
#include <string>

#include "beurling/parallel.hpp"

namespace beurling {

namespace {

constexpr int kRefine = 16;

double power_product(complex z, const WeightClass& cls) {
  double v = cls.scale;
  for (const auto& f : cls.factors) v *= std::pow(std::abs(z - f.center), f.alpha);
  return v;
}

bool on_singular_point(complex z, const WeightClass& cls) {
  for (const auto& f : cls.factors)
    if (f.alpha != 0.0 && z == f.center) return true;
  return false;
}

double cell_average(complex z, double h, const WeightClass& cls) {
  double s = 0.0;
  for (int b = 0; b < kRefine; ++b)
    for (int a = 0; a < kRefine; ++a) {
      const complex p = z + complex((a + 0.5) / kRefine - 0.5, (b + 0.5) / kRefine - 0.5) * h;
      s += power_product(p, cls);
    }
  return s / (kRefine * kRefine);
}

}  // namespace

Weight::Weight(RealField values, double p, std::optional<WeightClass> declared)
    : values_(std::move(values)), p_(p), declared_(std::move(declared)) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("weight exponent p must lie in (1, inf)");
  for (double v : values_.values())
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("weight must be positive and finite");
}

Weight Weight::rescaled(double c) const {
  RealField v = values_;
  for (auto& x : v.values()) x *= c;
  std::optional<WeightClass> cls = declared_;
  if (cls) cls->scale *= c;
  return Weight(std::move(v), p_, std::move(cls));
}

Weight constant_weight(const GridSpec& spec, double value, double p) {
  return Weight(RealField(spec, value), p, WeightClass{value, {}});
}

Weight power_weight(const GridSpec& spec, std::span<const PowerFactor> factors, double p, bool claim_ap) {
  if (claim_ap) {
    for (const auto& f : factors)
      if (!(f.alpha > -2.0 && f.alpha < 2.0 * (p - 1.0)))
        throw std::invalid_argument("power weight exponent " + std::to_string(f.alpha) +
                                    " is outside the A_p range (-2, 2(p-1))");
  }
  WeightClass cls{1.0, {factors.begin(), factors.end()}};
  const double h = spec.spacing();
  RealField values(spec);
  for (int k = 0; k < spec.n(); ++k)
    for (int j = 0; j < spec.n(); ++j) {
      const complex z = spec.point(j, k);
      values.at(j, k) = on_singular_point(z, cls) ? cell_average(z, h, cls) : power_product(z, cls);
    }
  return Weight(std::move(values), p, std::move(cls));
}

Weight power_weight(const GridSpec& spec, double alpha, complex center, double p, bool claim_ap) {
  const PowerFactor f{alpha, center};
  return power_weight(spec, std::span<const PowerFactor>(&f, 1), p, claim_ap);
}

double weighted_measure(const Weight& w, const Square& q) { return integrate_over_square(w.values(), q); }

double weighted_measure(const Weight& w, std::span<const std::size_t> samples) {
  double s = 0.0;
  for (std::size_t i : samples) s += w.values()[i];
  return s * w.spec().cell_area();
}

ApReport ap_constant(const Weight& w, const SquareFamily& family) {
  if (family.empty()) throw std::invalid_argument("A_p estimate needs a nonempty family");
  const GridSpec& spec = w.spec();
  const double p = w.p();
  const double dual_power = 1.0 - w.dual_exponent();
  ApReport report;
  report.family = family;
  report.per_square.resize(family.size());
  parallel_for(family.size(), [&](std::size_t i) {
    const Square& q = family[i];
    if (!intersects_window(spec, q)) throw std::domain_error("family square lies outside the window");
    const SampleBox box = sample_box(spec, q);
    if (box.empty()) throw std::domain_error("family square holds no samples");
    double sw = 0.0;
    double sd = 0.0;
    for (int k = box.k_begin; k < box.k_end; ++k)
      for (int j = box.j_begin; j < box.j_end; ++j) {
        const double v = w.values().at(j, k);
        sw += v;
        sd += std::pow(v, dual_power);
      }
    const double count = static_cast<double>(box.count());
    report.per_square[i] = (sw / count) * std::pow(sd / count, p - 1.0);
  });
  for (std::size_t i = 0; i < family.size(); ++i) {
    const double v = report.per_square[i];
    if (!std::isfinite(v)) throw NumericalError("A_p product overflowed on family square " + std::to_string(i));
    if (v > report.constant) {
      report.constant = v;
      report.argmax = i;
    }
  }
  return report;
}

std::pair<double, double> least_squares_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t m = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("degenerate regression abscissae");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

SigmaFit sigma_estimate(const Weight& w, const Square& q, const SquareFamily& subsets) {
  if (subsets.size() < 2) throw std::invalid_argument("sigma fit needs at least two subsets");
  const GridSpec& spec = w.spec();
  const double wq = weighted_measure(w, q);
  const double nq = static_cast<double>(sample_box(spec, q).count());
  SigmaFit fit;
  std::vector<double> lx, ly;
  for (const Square& e : subsets) {
    if (!q.encloses(e)) throw std::invalid_argument("sigma subset is not contained in Q");
    const double ne = static_cast<double>(sample_box(spec, e).count());
    if (ne == 0.0) continue;
    const double re = ne / nq;
    const double rw = weighted_measure(w, e) / wq;
    fit.measure_ratio.push_back(re);
    fit.weight_ratio.push_back(rw);
    if (re == 1.0) continue;
    lx.push_back(std::log(re));
    ly.push_back(std::log(rw));
  }
  if (lx.size() < 2) throw std::invalid_argument("sigma fit needs at least two proper subsets");
  const auto [slope, intercept] = least_squares_line(lx, ly);
  fit.sigma = slope;
  fit.c_w = std::exp(intercept);
  return fit;
}

DoublingFit doubling_check(const Weight& w, const Square& q, std::span<const double> factors) {
  const GridSpec& spec = w.spec();
  const double L = spec.half_width();
  const Square window(complex(0.0, 0.0), L);
  DoublingFit fit;
  fit.bound = 2.0 * w.p() + 0.2;
  std::vector<double> lx, ly;
  auto add = [&](double t) {
    const Square tq = q.scaled(t);
    if (!window.encloses(tq)) throw std::domain_error("dilated square tQ leaves the window");
    const double m = weighted_measure(w, tq);
    fit.factors.push_back(t);
    fit.measures.push_back(m);
    lx.push_back(std::log(t));
    ly.push_back(std::log(m));
  };
  add(1.0);
  for (double t : factors) {
    if (!(t > 1.0)) throw std::invalid_argument("doubling factors must exceed 1");
    add(t);
  }
  fit.exponent = least_squares_line(lx, ly).first;
  fit.pass = fit.exponent <= fit.bound;
  return fit;
}

}  // namespace beurling
