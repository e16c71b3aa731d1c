#include <algorithm>
#include <cmath>

#include "beurling/weights.hpp"
#include "experiments/common.hpp"
#include "experiments/registry.hpp"

namespace beurling::experiments {

namespace {

std::vector<ParamSpec> with(std::vector<ParamSpec> base, std::vector<ParamSpec> extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

double relative_change(double a, double b) { return std::abs(b - a) / std::abs(a); }

void run_ap(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const double tol = cfg.get_double("constant_tol");
  const double band = cfg.get_double("refine_band");
  const double alpha_out = cfg.get_double("outside_alpha");
  const int min_level = cfg.get_int("family.min_level");
  const int max_level = cfg.get_int("family.max_level");
  const int refine = cfg.get_int("family.refine");
  const int ap_refine = cfg.get_int("ap_refine");
  const double p = s.weight.p();

  r.table.columns = {"weight", "family", "squares", "ap_constant"};
  auto add = [&](const std::string& weight, const std::string& fam, const SquareFamily& f, double v) {
    r.table.add({weight, fam, static_cast<std::int64_t>(f.size()), v});
  };

  double dev = 0.0;
  for (double c : {1.0, 0.25, 7.0}) {
    const Weight w = validated([&] { return constant_weight(s.spec, c, p); });
    const double a = ap_constant(w, s.family).constant;
    add("constant " + fmt(c), "base", s.family, a);
    dev = std::max(dev, std::abs(a - 1.0));
  }
  r.metrics["constant_deviation"] = dev;
  r.checks.push_back(make_check("constant weight has A_p constant 1", dev <= tol,
                                "max |[c]_Ap - 1| = " + fmt(dev) + " <= " + fmt(tol)));

  const Weight w1 = validated([&] { return power_weight(s.spec, 1.0, complex(0.0, 0.0), 2.0); });
  const SquareFamily lattice = validated([&] { return dyadic_family(s.spec, min_level, max_level, ap_refine); });
  const SquareFamily doubled = validated([&] { return dyadic_family(s.spec, min_level, max_level, 2 * ap_refine); });
  const double base = ap_constant(w1, lattice).constant;
  const double fine = ap_constant(w1, doubled).constant;
  add("|z|", "base", lattice, base);
  add("|z|", "doubled", doubled, fine);
  const double change = relative_change(base, fine);
  r.metrics["refine_change"] = change;
  r.checks.push_back(make_check("|z| constant stable under family doubling", change < band,
                                "relative change " + fmt(change) + " < " + fmt(band)));

  const Weight ws = s.weight.rescaled(3.0);
  const double a0 = ap_constant(s.weight, s.family).constant;
  const double a1 = ap_constant(ws, s.family).constant;
  add("configured", "base", s.family, a0);
  add("configured x3", "base", s.family, a1);
  const double scale_dev = relative_change(a0, a1);
  r.metrics["scale_deviation"] = scale_dev;
  r.checks.push_back(make_check("scale invariance", scale_dev <= tol,
                                "relative change under w -> 3w = " + fmt(scale_dev)));

  const GridSpec finer = validated([&] { return make_grid(2 * s.spec.n(), s.spec.half_width()); });
  const Weight wo = validated([&] { return power_weight(s.spec, alpha_out, complex(0.0, 0.0), 2.0, false); });
  const Weight wf = validated([&] { return power_weight(finer, alpha_out, complex(0.0, 0.0), 2.0, false); });
  const SquareFamily fam_fine = validated([&] { return dyadic_family(finer, min_level, max_level, refine); });
  const double o1 = ap_constant(wo, s.family).constant;
  const double o2 = ap_constant(wf, fam_fine).constant;
  add("|z|^" + fmt(alpha_out), "base", s.family, o1);
  add("|z|^" + fmt(alpha_out) + " n x2", "base", fam_fine, o2);
  r.metrics["outside_growth"] = o2 / o1;
  r.checks.push_back(make_check("weight outside A_p grows under grid refinement", o2 > 1.1 * o1,
                                "constant " + fmt(o1) + " -> " + fmt(o2) + " when n doubles"));
}

void run_doubling(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const std::vector<double> alphas = cfg.get_doubles("alphas");
  const std::vector<double> factors = cfg.get_doubles("factors");
  const double tol = cfg.get_double("exponent_tol");
  const double sig_lo = cfg.get_double("sigma_lo");
  const double sig_hi = cfg.get_double("sigma_hi");
  const int levels = cfg.get_int("sigma_levels");
  const double p = s.weight.p();
  const double L = s.spec.half_width();
  require(levels >= 2, "sigma_levels must be >= 2");

  r.table.columns = {"kind", "alpha", "x", "value"};
  const Square q(complex(0.0, 0.0), L / 16.0);
  double worst = 0.0;
  bool below_bound = true;
  for (double a : alphas) {
    const Weight w = validated([&] { return power_weight(s.spec, a, complex(0.0, 0.0), p); });
    const DoublingFit fit = validated([&] { return doubling_check(w, q, factors); });
    for (std::size_t i = 0; i < fit.factors.size(); ++i) r.table.add({"measure", a, fit.factors[i], fit.measures[i]});
    r.table.add({"exponent", a, 0.0, fit.exponent});
    worst = std::max(worst, std::abs(fit.exponent - (2.0 + a)));
    below_bound = below_bound && fit.pass;
  }
  r.metrics["exponent_error"] = worst;
  r.checks.push_back(make_check("doubling exponent 2 + alpha", worst <= tol,
                                "max |d - (2 + alpha)| = " + fmt(worst) + " <= " + fmt(tol)));
  r.checks.push_back(make_check("doubling exponent below 2p", below_bound, "every fit below 2p + 0.2"));

  const Weight w1 = validated([&] { return power_weight(s.spec, 1.0, complex(0.0, 0.0), p); });
  const Square qs(complex(L / 2.0, L / 2.0), L / 4.0);
  SquareFamily subsets;
  for (int m = 1; m <= levels; ++m) {
    const double rm = qs.half_side / std::pow(2.0, m);
    subsets.emplace_back(qs.center + (qs.half_side - rm) * complex(1.0, 1.0), rm);
  }
  const SigmaFit sf = validated([&] { return sigma_estimate(w1, qs, subsets); });
  for (std::size_t i = 0; i < sf.measure_ratio.size(); ++i)
    r.table.add({"sigma_ratio", 1.0, sf.measure_ratio[i], sf.weight_ratio[i]});
  r.table.add({"sigma", 1.0, 0.0, sf.sigma});
  r.table.add({"c_w", 1.0, 0.0, sf.c_w});
  r.metrics["sigma"] = sf.sigma;
  r.metrics["c_w"] = sf.c_w;
  r.checks.push_back(make_check("sigma fit for |z| in range", sf.sigma >= sig_lo && sf.sigma <= sig_hi,
                                "sigma = " + fmt(sf.sigma) + " in [" + fmt(sig_lo) + ", " + fmt(sig_hi) + "]"));
}

}  // namespace

ExperimentInfo ap_constant_experiment() {
  return {"ap-constant", "A_p constant sup_Q <w>_Q <w^(1-p')>_Q^(p-1) over a square family",
          with(shared_params("ap-constant", 256, 4.0),
               {{"constant_tol", "1e-6", "tolerance on the constant weight and scale invariance"},
                {"refine_band", "0.05", "allowed relative change when the family is doubled"},
                {"ap_refine", "4", "centre refinement of the family used for |z|"},
                {"outside_alpha", "2.5", "exponent of a power weight outside A_2"}}),
          run_ap};
}

ExperimentInfo doubling_experiment() {
  return {"doubling", "doubling w(tQ) <= C t^(2p) w(Q) and the sigma exponent of w(E)/w(Q)",
          with(shared_params("doubling", 256, 4.0),
               {{"alphas", "0,0.5,1", "power-weight exponents"},
                {"factors", "2,4,8", "dilation factors t"},
                {"exponent_tol", "0.05", "tolerance on the fitted exponent"},
                {"sigma_levels", "5", "number of corner sub-squares"},
                {"sigma_lo", "0.8", "lower end of the accepted sigma range"},
                {"sigma_hi", "1.0", "upper end of the accepted sigma range"}}),
          run_doubling};
}

}  // namespace beurling::experiments
