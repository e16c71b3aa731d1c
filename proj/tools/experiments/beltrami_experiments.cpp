#include <algorithm>
#include <cmath>

#include "beurling/beltrami.hpp"
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

ComplexField bump_coefficient(const GridSpec& spec, double amplitude, double radius) {
  return sample(spec, [&](complex z) { return complex(amplitude * compact_bump(z, complex(0.0, 0.0), radius), 0.0); });
}

void run_beltrami(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const int seeds = cfg.get_int("seeds");
  const double amp = cfg.get_double("b_sup");
  const double radius = cfg.get_double("bump_radius");
  const double tol = cfg.get_double("tol");
  const int n_max = cfg.get_int("n_max");
  const int sweep_max = cfg.get_int("sweep_n_max");
  const double residual_tol = cfg.get_double("residual_tol");
  const int n_limit = cfg.get_int("n_limit");
  const double band = cfg.get_double("apriori_band");
  const std::vector<double> sweep = cfg.get_doubles("sweep");
  require(seeds > 0, "seeds must be positive");
  require(std::is_sorted(sweep.begin(), sweep.end()), "sweep values must be increasing");

  const ComplexField b = bump_coefficient(s.spec, amp, radius);
  r.table.columns = {"seed", "b_sup", "order", "n_used", "residual", "apriori_ratio", "tail_estimate"};
  double worst_res = 0.0, order_gap = 0.0;
  int worst_n = 0;
  bool envelope = true, monotone = true, converged = true;
  std::vector<double> ratios;
  for (int i = 0; i < seeds; ++i) {
    const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
    const ComplexField g = random_smooth_complex(s.spec, seed);
    const double gn = l2_norm(g);
    const BeltramiProblem prob = validated([&] { return BeltramiProblem(b, g); });
    const SolveReport rep = solve_beltrami(prob, tol, n_max);
    const SolveReport alt = solve_beltrami(prob, tol, n_max, NeumannOrder::terms);
    const double ar = apriori_ratio(rep, g, s.weight, s.params, s.family);
    worst_res = std::max(worst_res, rep.residual);
    worst_n = std::max(worst_n, rep.n_used);
    converged = converged && rep.converged;
    order_gap = std::max(order_gap, l2_norm(rep.f - alt.f) / gn);
    for (std::size_t n = 0; n < rep.term_norms.size(); ++n)
      if (rep.term_norms[n] > std::pow(prob.b_sup, static_cast<double>(n)) * gn * (1.0 + 1e-9)) envelope = false;
    ratios.push_back(ar);
    r.table.add({static_cast<std::int64_t>(seed), prob.b_sup, "horner", std::int64_t{rep.n_used}, rep.residual, ar,
                 rep.tail_estimate});
    r.table.add({static_cast<std::int64_t>(seed), prob.b_sup, "terms", std::int64_t{alt.n_used}, alt.residual,
                 apriori_ratio(alt, g, s.weight, s.params, s.family), alt.tail_estimate});

    double prev = 0.0;
    for (double level : sweep) {
      const BeltramiProblem sp = validated([&] { return BeltramiProblem(bump_coefficient(s.spec, level, radius), g); });
      const SolveReport sr = solve_beltrami(sp, tol, sweep_max);
      const double a = apriori_ratio(sr, g, s.weight, s.params, s.family);
      if (!(a > prev)) monotone = false;
      prev = a;
      r.table.add({static_cast<std::int64_t>(seed), sp.b_sup, "sweep", std::int64_t{sr.n_used}, sr.residual, a,
                   sr.tail_estimate});
    }
  }
  const ComplexField g0 = random_smooth_complex(s.spec, s.seed);
  const SolveReport zero = solve_beltrami(BeltramiProblem(ComplexField(s.spec), g0), tol, n_max);
  const complex m0 = mean(g0);
  const double zero_gap = l2_norm(zero.dz - beurling(g0)) / l2_norm(g0);
  if (std::abs(m0) > 0.0)
    r.notes.push_back("g carries a nonzero mean; the solution adds the affine term mean(g) conj(z)");

  const double sp = spread(ratios);
  r.metrics["residual"] = worst_res;
  r.metrics["n_used"] = worst_n;
  r.metrics["apriori_spread"] = sp;
  r.metrics["order_gap"] = order_gap;
  r.metrics["zero_gap"] = zero_gap;
  r.checks.push_back(make_check("residual", worst_res <= residual_tol,
                                "max ||dbar f - b d f - g|| / ||g|| = " + fmt(worst_res) + " <= " + fmt(residual_tol)));
  r.checks.push_back(make_check("iteration count", converged && worst_n <= n_limit,
                                "max N = " + std::to_string(worst_n) + " <= " + std::to_string(n_limit)));
  r.checks.push_back(make_check("a priori ratio uniform", std::isfinite(sp) && sp <= band,
                                "max/min ||Df|| / ||g|| = " + fmt(sp) + " <= " + fmt(band)));
  r.checks.push_back(make_check("a priori ratio increases with ||b||", monotone, "sweep over " + std::to_string(sweep.size()) + " levels"));
  r.checks.push_back(make_check("geometric term envelope", envelope, "||(bB)^N g|| <= ||b||^N ||g||"));
  r.checks.push_back(make_check("summation orders agree", order_gap <= 10.0 * tol,
                                "relative gap " + fmt(order_gap) + " <= " + fmt(10.0 * tol)));
  r.checks.push_back(make_check("b = 0 reduces to the Cauchy transform", zero.n_used == 0 && zero_gap <= 1e-9,
                                "||d f - B g|| / ||g|| = " + fmt(zero_gap)));
}

void run_growth(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const int seeds = cfg.get_int("seeds");
  const std::vector<int> powers = cfg.get_ints("powers");
  const double lo = cfg.get_double("b_sup_lo");
  const double hi = cfg.get_double("b_sup_hi");
  const int fit = cfg.get_int("fit_count");
  require(seeds > 0 && fit > 0, "seeds and fit_count must be positive");
  require(lo > 0.0 && hi < 1.0 && lo <= hi, "b_sup range must lie in (0, 1)");

  r.table.columns = {"seed", "b_sup", "power", "ratio", "envelope", "c_tilde"};
  bool ok = true;
  for (int i = 0; i < seeds; ++i) {
    const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
    Rng rng(seed);
    const double amp = rng.uniform(lo, hi);
    const ComplexField b = bump_coefficient(s.spec, amp, cfg.get_double("bump_radius"));
    const std::vector<ComplexField> probes{random_smooth_complex(s.spec, seed + 1000)};
    const GrowthProbe gp = validated([&] {
      return norm_growth_probe(b, powers, probes, s.weight, s.params, s.family, static_cast<std::size_t>(fit));
    });
    ok = ok && gp.within_envelope;
    for (const GrowthRow& row : gp.rows)
      r.table.add({static_cast<std::int64_t>(seed), gp.b_sup, std::int64_t{row.power}, row.ratio, row.envelope, gp.c_tilde});
    r.metrics["c_tilde_" + std::to_string(i)] = gp.c_tilde;
  }
  r.checks.push_back(make_check("N^2 envelope", ok, "ratio <= C N^2 ||b||^N for every N with one C per symbol"));
}

}  // namespace

ExperimentInfo beltrami_experiment() {
  return {"beltrami-solve", "dbar f - b d f = g solved by f = C((Id - bB)^-1 g), ||Df|| <= C ||g||",
          with(shared_params("beltrami-solve", 256, 4.0),
               {{"seeds", "5", "number of seeded right-hand sides"},
                {"b_sup", "0.5", "sup of the coefficient"},
                {"bump_radius", "1.5", "support radius of the coefficient"},
                {"tol", "1e-8", "Neumann stopping tolerance relative to ||g||"},
                {"n_max", "200", "Neumann iteration cap"},
                {"sweep", "0.3,0.6,0.9", "coefficient sizes for the monotonicity sweep"},
                {"sweep_n_max", "400", "iteration cap for the sweep"},
                {"residual_tol", "1e-6", "tolerance on the relative residual"},
                {"n_limit", "40", "bound on the iteration count"},
                {"apriori_band", "2", "allowed max/min of the a priori ratio"}}),
          run_beltrami};
}

ExperimentInfo growth_experiment() {
  return {"n2-growth", "||b^N B^N f|| <= C N^2 ||b||^N ||f||",
          with(shared_params("n2-growth", 256, 4.0),
               {{"seeds", "3", "number of seeded (b, f) pairs"},
                {"powers", "1,2,3,4,5,6,7,8", "powers N"},
                {"b_sup_lo", "0.5", "smallest coefficient size"},
                {"b_sup_hi", "0.8", "largest coefficient size"},
                {"bump_radius", "1.5", "support radius of the coefficient"},
                {"fit_count", "2", "leading powers used to fit C"}}),
          run_growth};
}

}  // namespace beurling::experiments
