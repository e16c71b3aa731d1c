#include <algorithm>
#include <cmath>
#include <limits>

#include "beurling/samplers.hpp"
#include "beurling/transforms.hpp"
#include "experiments/common.hpp"
#include "experiments/registry.hpp"

namespace beurling::experiments {

namespace {

std::vector<ParamSpec> with(std::vector<ParamSpec> base, std::vector<ParamSpec> extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

void run_isometry(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const int count = cfg.get_int("count");
  const int band = cfg.get_int("max_wavenumber");
  const std::vector<int> powers = cfg.get_ints("powers");
  const double iso_tol = cfg.get_double("isometry_tol");
  const double pow_tol = cfg.get_double("power_tol");
  require(count > 0, "count must be positive");
  for (int p : powers) require(p >= 1, "powers must be >= 1");
  const int max_power = *std::max_element(powers.begin(), powers.end());

  r.table.columns = {"probe", "seed", "power", "norm_ratio", "composition_error"};
  double iso_dev = 0.0, comp_err = 0.0;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
    const ComplexField f = validated([&] { return random_bandlimited(s.spec, seed, band); });
    const double fn = l2_norm(f);
    ComplexField iterate = f;
    for (int n = 1; n <= max_power; ++n) {
      iterate = beurling(iterate);
      if (std::find(powers.begin(), powers.end(), n) == powers.end()) continue;
      const ComplexField direct = beurling_power(f, n);
      const double ratio = l2_norm(direct) / fn;
      const double err = l2_norm(direct - iterate) / fn;
      iso_dev = std::max(iso_dev, std::abs(ratio - 1.0));
      if (n > 1) comp_err = std::max(comp_err, err);
      r.table.add({std::int64_t{i}, static_cast<std::int64_t>(seed), std::int64_t{n}, ratio, err});
    }
  }
  r.metrics["isometry_deviation"] = iso_dev;
  r.metrics["composition_error"] = comp_err;
  r.checks.push_back(make_check("isometry", iso_dev <= iso_tol,
                                "max |ratio - 1| = " + fmt(iso_dev) + " <= " + fmt(iso_tol)));
  r.checks.push_back(make_check("power composition", comp_err <= pow_tol,
                                "max relative error = " + fmt(comp_err) + " <= " + fmt(pow_tol)));
}

void run_cauchy(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const int count = cfg.get_int("count");
  const double tol = cfg.get_double("tol");
  require(count > 0, "count must be positive");
  r.table.columns = {"probe", "seed", "dbar_error", "d_error"};
  double e1 = 0.0, e2 = 0.0;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
    const ComplexField g = validated([&] { return random_bandlimited(s.spec, seed, cfg.get_int("max_wavenumber")); });
    const ComplexField c = cauchy(g);
    const double gn = l2_norm(g);
    ComplexField centred = g;
    const complex m = mean(g);
    for (auto& v : centred.values()) v -= m;
    const double a = l2_norm(wirtinger(c, Wirtinger::dzbar) - centred) / gn;
    const double b = l2_norm(wirtinger(c, Wirtinger::dz) - beurling(g)) / gn;
    e1 = std::max(e1, a);
    e2 = std::max(e2, b);
    r.table.add({std::int64_t{i}, static_cast<std::int64_t>(seed), a, b});
  }
  r.metrics["dbar_error"] = e1;
  r.metrics["d_error"] = e2;
  r.checks.push_back(make_check("dbar of Cauchy transform", e1 <= tol, "max relative error = " + fmt(e1)));
  r.checks.push_back(make_check("d of Cauchy transform equals B", e2 <= tol, "max relative error = " + fmt(e2)));
}

std::vector<double> dyadic_radii(const GridSpec& spec) {
  std::vector<double> radii;
  for (double r = spec.spacing(); r <= spec.half_width() * (1.0 + 1e-12); r *= 2.0) radii.push_back(r);
  return radii;
}

void run_lemma32(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const int pairs = cfg.get_int("pairs");
  const std::vector<double> cells = cfg.get_doubles("eta_cells");
  const double band = cfg.get_double("band");
  const double flo = cfg.get_double("f_width_cells_lo");
  const double fhi = cfg.get_double("f_width_cells_hi");
  require(pairs > 0, "pairs must be positive");
  require(flo > 0.0 && fhi >= flo, "f widths must satisfy 0 < lo <= hi");
  const double h = s.spec.spacing();
  for (double c : cells) validated([&] { require_resolved_scale(s.spec, c * h); return 0; });
  const std::vector<double> radii = dyadic_radii(s.spec);

  r.table.columns = {"pair", "seed", "eta", "eta_cells", "grad_sup", "fitted_constant"};
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
    const ComplexField b = to_complex(random_smooth_real(s.spec, 2 * seed));
    const ComplexField f = random_smooth_complex(s.spec, 2 * seed + 1, 3, flo * h, fhi * h);
    const double grad = gradient_sup(b);
    const RealField mf = centered_maximal(f, radii);
    std::vector<double> cs;
    for (double c : cells) {
      const double eta = c * h;
      const RealField gap = commutator_truncation_gap(b, f, eta);
      double best = 0.0;
      for (std::size_t k = 0; k < gap.size(); ++k)
        if (mf[k] > 0.0) best = std::max(best, gap[k] / (eta * grad * mf[k]));
      cs.push_back(best);
      r.table.add({std::int64_t{i}, static_cast<std::int64_t>(seed), eta, c, grad, best});
    }
    worst = std::max(worst, spread(cs));
  }
  r.metrics["constant_spread"] = worst;
  r.checks.push_back(make_check("truncation constant stable across eta", worst <= band,
                                "max over pairs of max/min C(eta) = " + fmt(worst) + " <= " + fmt(band)));
}

void run_lemma33(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const int count = cfg.get_int("count");
  const std::vector<double> cells = cfg.get_doubles("eta_cells");
  const double band = cfg.get_double("spread");
  require(count > 0 && !cells.empty(), "count and eta_cells must be nonempty");
  const double h = s.spec.spacing();
  std::vector<double> etas;
  for (double c : cells) etas.push_back(c * h);
  validated([&] {
    for (double e : etas) require_resolved_scale(s.spec, e);
    return 0;
  });
  const std::vector<double> fewer(etas.begin(), etas.end() - (etas.size() > 1 ? 1 : 0));
  const SquareFamily coarse(s.family.begin(), s.family.begin() + static_cast<std::ptrdiff_t>(s.family.size() / 2 + 1));

  r.table.columns = {"probe", "seed", "f_norm", "bstar_ratio", "maximal_ratio"};
  std::vector<double> totals;
  bool monotone = true;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
    const ComplexField f = random_smooth_complex(s.spec, seed);
    const RealField bstar = beurling_maximal(f, etas);
    const RealField bstar_few = beurling_maximal(f, fewer);
    const RealField m = hl_maximal(f, s.family);
    const RealField m_few = hl_maximal(f, coarse);
    for (std::size_t k = 0; k < m.size(); ++k)
      if (bstar_few[k] > bstar[k] || m_few[k] > m[k]) monotone = false;
    const double fn = morrey_norm(f, s.weight, s.params, s.family);
    const double rb = morrey_norm(bstar, s.weight, s.params, s.family) / fn;
    const double rm = morrey_norm(m, s.weight, s.params, s.family) / fn;
    totals.push_back(rb + rm);
    r.table.add({std::int64_t{i}, static_cast<std::int64_t>(seed), fn, rb, rm});
  }
  const double sp = spread(totals);
  r.metrics["ratio_spread"] = sp;
  r.metrics["ratio_max"] = *std::max_element(totals.begin(), totals.end());
  r.checks.push_back(make_check("maximal operators bounded uniformly", std::isfinite(sp) && sp <= band,
                                "max/min of (B* + M) norm ratios = " + fmt(sp) + " <= " + fmt(band)));
  r.checks.push_back(make_check("monotone in scales and squares", monotone,
                                "dropping a scale or squares never increases a sample"));
}

}  // namespace

ExperimentInfo isometry_experiment() {
  return {"isometry", "L2 isometry of B (multiplier conj(xi)/xi) and powers B^N",
          with(shared_params("isometry", 256, 4.0),
               {{"count", "20", "number of random band-limited probes"},
                {"max_wavenumber", "8", "band limit of the probes"},
                {"powers", "1,2,4,8", "powers N of B to test"},
                {"isometry_tol", "1e-10", "tolerance on | ||B^N f|| / ||f|| - 1 |"},
                {"power_tol", "1e-9", "tolerance on B^N against N-fold B"}}),
          run_isometry};
}

ExperimentInfo cauchy_experiment() {
  return {"cauchy-identities", "Cauchy transform: dbar C = Id and d C = B",
          with(shared_params("cauchy-identities", 256, 4.0),
               {{"count", "10", "number of probes"},
                {"max_wavenumber", "8", "band limit of the probes"},
                {"tol", "1e-9", "relative L2 tolerance"}}),
          run_cauchy};
}

ExperimentInfo lemma32_experiment() {
  return {"lemma32-gap", "truncation gap |[b,B_eta]f - [b,B]f| <= C eta |grad b| Mf",
          with(shared_params("lemma32-gap", 128, 4.0),
               {{"pairs", "3", "number of seeded (b, f) pairs"},
                {"eta_cells", "8,16,32", "truncation scales in grid cells"},
                {"band", "4", "allowed max/min ratio of the fitted constant"},
                {"f_width_cells_lo", "1.5", "smallest Gaussian width of f in cells"},
                {"f_width_cells_hi", "3", "largest Gaussian width of f in cells"}}),
          run_lemma32};
}

ExperimentInfo lemma33_experiment() {
  return {"lemma33-maximal", "maximal truncated transform B* and M bounded on weighted Morrey spaces",
          with(shared_params("lemma33-maximal", 128, 4.0),
               {{"count", "5", "number of probes"},
                {"eta_cells", "2,4,8,16,32", "truncation scales in grid cells"},
                {"spread", "10", "allowed max/min of the norm ratios across probes"}}),
          run_lemma33};
}

}  // namespace beurling::experiments
