#include <algorithm>
#include <cmath>
#include <numbers>

#include "beurling/commutator.hpp"
#include "beurling/oscillation.hpp"
#include "beurling/samplers.hpp"
#include "experiments/common.hpp"
#include "experiments/registry.hpp"

namespace beurling::experiments {

namespace {

std::vector<ParamSpec> with(std::vector<ParamSpec> base, std::vector<ParamSpec> extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

/// Squares of half-side r on the lattice -extent + r + 2 r i, inside [-extent, extent)^2.
SquareFamily lattice(double extent, double r) {
  SquareFamily out;
  const int count = static_cast<int>(std::floor(extent / r + 1e-9));
  for (int a = 0; a < count; ++a)
    for (int c = 0; c < count; ++c)
      out.emplace_back(complex(-extent + r + 2 * r * a, -extent + r + 2 * r * c), r);
  return out;
}

RealField normalized_log(const Setup& s, double floor_cells, const SquareFamily& extra) {
  RealField b = validated([&] { return truncated_log(s.spec, floor_cells * s.spec.spacing()); });
  SquareFamily fam = s.family;
  fam.insert(fam.end(), extra.begin(), extra.end());
  const double n = bmo_norm(b, fam);
  for (auto& v : b.values()) v /= n;
  return b;
}

void run_product_sets(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const int seeds = cfg.get_int("seeds");
  const int per_seed = cfg.get_int("squares");
  const int test_squares = cfg.get_int("test_squares");
  const double delta_fraction = cfg.get_double("delta_fraction");
  require(seeds > 0 && per_seed > 0 && test_squares > 0, "seeds and square counts must be positive");
  require(delta_fraction > 0.0 && delta_fraction < 1.0, "delta_fraction must lie in (0, 1)");
  const double L = s.spec.half_width();

  r.table.columns = {"seed", "square", "kind", "half_side", "alpha", "n1", "n2", "n3", "n4", "ok"};
  std::size_t cover = 0, card = 0, dom = 0, sign = 0, total = 0;
  std::size_t families = 0, tf_ok = 0;
  double max_mean = 0.0;
  for (int i = 0; i < seeds; ++i) {
    const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
    const RealField b = random_smooth_real(s.spec, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int t = 0; t < per_seed; ++t) {
      const double rad = rng.uniform(L / 32.0, L / 12.0);
      const Square q(complex(rng.uniform(-L / 2 + rad, L / 2 - 5 * rad), rng.uniform(-L / 2 + rad, L / 2 - 5 * rad)),
                     rad);
      const ProductSets ps = product_sets(b, q);
      const ProductSetCheck c = check_product_sets(b, ps);
      ++total;
      cover += c.cover;
      card += c.cardinality;
      dom += c.domination;
      sign += c.sign;
      r.table.add({static_cast<std::int64_t>(seed), std::int64_t{t}, "product", rad, ps.alpha, as_int(ps.e[0].size()),
                   as_int(ps.e[1].size()), as_int(ps.f[0].size()), as_int(ps.f[1].size()),
                   std::int64_t{c.all() ? 1 : 0}});
    }
    SquareFamily squares;
    double min_osc = std::numeric_limits<double>::infinity();
    for (int t = 0; t < test_squares; ++t) {
      const double rad = rng.uniform(L / 32.0, L / 12.0);
      squares.emplace_back(
          complex(rng.uniform(-L / 2 + 3 * rad, L / 2 - 3 * rad), rng.uniform(-L / 2 + 3 * rad, L / 2 - 3 * rad)), rad);
      min_osc = std::min(min_osc, mean_oscillation(b, squares.back()));
    }
    const TestFamily tf = build_test_family(b, squares, s.weight, s.params, {delta_fraction * min_osc, 0, true});
    const TestFamilyCheck tc = check_test_family(b, tf);
    ++families;
    tf_ok += tc.all();
    max_mean = std::max(max_mean, tc.max_mean);
    for (std::size_t t = 0; t < tf.members.size(); ++t) {
      const TestMember& m = tf.members[t];
      r.table.add({static_cast<std::int64_t>(seed), as_int(t), "test", m.q.half_side, m.alpha, as_int(m.upper.size()),
                   as_int(m.lower.size()), as_int(m.count), as_int(m.count - m.upper.size() - m.lower.size()),
                   std::int64_t{tc.all() ? 1 : 0}});
    }
  }
  auto count_detail = [&](std::size_t k) { return std::to_string(k) + "/" + std::to_string(total) + " squares"; };
  r.checks.push_back(make_check("product sets: cover", cover == total, count_detail(cover)));
  r.checks.push_back(make_check("product sets: cardinality", card == total, count_detail(card)));
  r.checks.push_back(make_check("product sets: domination", dom == total, count_detail(dom)));
  r.checks.push_back(make_check("product sets: sign", sign == total, count_detail(sign)));
  r.checks.push_back(make_check("test family invariants", tf_ok == families,
                                std::to_string(tf_ok) + "/" + std::to_string(families) +
                                    " families, max |sum f| / sum |f| = " + fmt(max_mean)));
  r.metrics["test_family_max_mean"] = max_mean;
}

void run_chain(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const int seeds = cfg.get_int("seeds");
  const double cells = cfg.get_double("half_cells");
  const int extra = cfg.get_int("extra_probes");
  const double limit = cfg.get_double("constant_limit");
  const double linear_limit = cfg.get_double("linear_limit");
  const double kernel_limit = cfg.get_double("kernel_limit");
  require(seeds > 0 && cells > 0 && extra >= 0, "seeds, half_cells and extra_probes must be valid");
  const Square q(complex(0.0, 0.0), cells * s.spec.spacing());

  r.table.columns = {"case", "seed", "step", "value", "ratio"};
  std::vector<double> step_max(kChainSteps - 1, 0.0);
  double chain = 0.0, kernel = 0.0;
  auto record = [&](const std::string& name, std::int64_t seed, const ChainReport& rep) {
    for (std::size_t i = 0; i < kChainSteps; ++i)
      r.table.add({name, seed, as_int(i), rep.steps[i], i + 1 < kChainSteps ? rep.ratios[i] : 0.0});
  };
  for (int i = 0; i < seeds; ++i) {
    const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
    const RealField b = random_smooth_real(s.spec, seed);
    std::vector<ComplexField> probes;
    for (int e = 0; e < extra; ++e) probes.push_back(random_smooth_complex(s.spec, seed * 7 + static_cast<std::uint64_t>(e)));
    const ChainReport rep = validated([&] { return oscillation_vs_commutator(b, q, s.weight, s.params, s.family, probes); });
    record("smooth", static_cast<std::int64_t>(seed), rep);
    for (std::size_t k = 0; k + 1 < kChainSteps; ++k) step_max[k] = std::max(step_max[k], rep.ratios[k]);
    chain = std::max(chain, rep.steps[8] > 0.0 ? rep.steps[0] / rep.steps[8] : std::numeric_limits<double>::infinity());
    kernel = std::max(kernel, rep.kernel_ratio);
  }
  const RealField lin = sample_real(s.spec, [](complex z) { return z.real(); });
  const ChainReport lrep = validated([&] { return oscillation_vs_commutator(lin, q, s.weight, s.params, s.family, {}); });
  record("linear", 0, lrep);
  const double lin_ratio = lrep.steps[0] / lrep.steps[8];

  for (std::size_t k = 0; k + 1 < kChainSteps; ++k) r.metrics["step_" + std::to_string(k)] = step_max[k];
  r.metrics["chain_constant"] = chain;
  r.metrics["kernel_ratio"] = kernel;
  r.metrics["linear_ratio"] = lin_ratio;
  r.checks.push_back(make_check("oscillation bounded by commutator on F_j", chain <= limit,
                                "C_chain = max O(b;Q) / sum_j |Q|^-1 int_Q |[b,B] chi_Fj| = " + fmt(chain)));
  double worst = 0.0;
  std::size_t worst_k = 0;
  for (std::size_t k = 0; k + 1 < kChainSteps; ++k)
    if (!(step_max[k] <= worst)) {
      worst = step_max[k];
      worst_k = k;
    }
  r.checks.push_back(make_check("every chain step has a uniform constant", std::isfinite(worst) && worst <= limit,
                                "largest step constant " + fmt(worst) + " at step " + std::to_string(worst_k)));
  r.checks.push_back(make_check("linear symbol", lin_ratio <= linear_limit, "O / chain sum = " + fmt(lin_ratio)));
  r.checks.push_back(make_check("kernel comparison", kernel <= kernel_limit,
                                "max (|b - alpha| / |d|^2) / (|db| |ab| / |d|^4) = " + fmt(kernel)));
}

SquareFamily test_squares(const Config& cfg, const GridSpec& spec) {
  const std::vector<double> c = cfg.get_doubles("centers_cells");
  require(!c.empty() && c.size() % 2 == 0, "centers_cells must list x,y pairs");
  const double h = spec.spacing();
  SquareFamily out;
  for (std::size_t i = 0; i < c.size(); i += 2)
    out.emplace_back(complex(c[i] * h, c[i + 1] * h), cfg.get_double("half_cells") * h);
  return out;
}

void run_lemma34(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const std::vector<int> ks = cfg.get_ints("ks");
  const std::string kind = cfg.get_string("b.kind");
  const double lower_band = cfg.get_double("lower_band");
  const double upper_limit = cfg.get_double("upper_limit");
  require(!ks.empty(), "ks must be nonempty");
  for (int k : ks) require(k >= 1, "ks must be positive");
  const SquareFamily squares = test_squares(cfg, s.spec);

  RealField b(s.spec);
  if (kind == "log") {
    b = normalized_log(s, cfg.get_double("log_floor_cells"), squares);
  } else if (kind == "constant") {
    b = RealField(s.spec, cfg.get_double("b.value"));
  } else {
    throw ConfigError("b.kind must be 'log' or 'constant', got '" + kind + "'");
  }
  double min_osc = std::numeric_limits<double>::infinity();
  for (const Square& q : squares) min_osc = std::min(min_osc, mean_oscillation(b, q));
  const bool flat = !(min_osc > 0.0);
  const int k_max = *std::max_element(ks.begin(), ks.end());
  const TestFamily tf = validated([&] {
    return build_test_family(b, squares, s.weight, s.params,
                             {flat ? 0.0 : cfg.get_double("delta_fraction") * min_osc, k_max, !flat});
  });
  const std::vector<BoundRow> rows = validated([&] { return lower_upper_bounds(tf, b, s.weight, s.params, ks); });

  r.table.columns = {"j", "k", "lower_lhs", "lower_ref", "c1", "upper_lhs", "upper_ref", "c2", "measure_ratio",
                     "inclusions"};
  std::vector<double> c1s, c2s;
  bool incl = true, zero = true;
  for (const BoundRow& row : rows) {
    r.table.add({as_int(row.j), std::int64_t{row.k}, row.lower_lhs, row.lower_ref, row.c1, row.upper_lhs,
                 row.upper_ref, row.c2, row.measure_ratio, std::int64_t{row.inclusions ? 1 : 0}});
    c1s.push_back(row.c1);
    c2s.push_back(row.c2);
    incl = incl && row.inclusions;
    zero = zero && row.lower_lhs == 0.0;
  }
  const TestFamilyCheck tc = check_test_family(b, tf);
  r.checks.push_back(make_check("geometric inclusions", incl, "3^(k-1) Q_j in 4 Q_j^k in 3^(k+1) Q_j for all rows"));
  if (flat) {
    r.vacuous = true;
    r.notes.push_back("b has zero oscillation on the test squares; the lower bounds are vacuous");
    r.checks.push_back(make_check("lower-bound integrals vanish", zero, "every lower_lhs is 0"));
    return;
  }
  const double c1_min = *std::min_element(c1s.begin(), c1s.end());
  const double c1_spread = spread(c1s);
  const double c2_max = *std::max_element(c2s.begin(), c2s.end());
  r.metrics["c1_min"] = c1_min;
  r.metrics["c1_spread"] = c1_spread;
  r.metrics["c2_max"] = c2_max;
  r.metrics["delta"] = tf.delta;
  r.checks.push_back(make_check("lower-bound constants positive", c1_min > 0.0, "min C1 = " + fmt(c1_min)));
  r.checks.push_back(make_check("lower-bound constants uniform", c1_spread <= lower_band,
                                "max/min C1 = " + fmt(c1_spread) + " <= " + fmt(lower_band)));
  r.checks.push_back(make_check("upper-bound constants bounded", std::isfinite(c2_max) && c2_max <= upper_limit,
                                "max C2 = " + fmt(c2_max) + " <= " + fmt(upper_limit)));
  r.checks.push_back(make_check("test family invariants", tc.all(), "max |sum f| / sum |f| = " + fmt(tc.max_mean)));
  for (std::size_t j = 0; j < tf.members.size(); ++j)
    r.metrics["f_norm_" + std::to_string(j)] = morrey_norm(tf.members[j].f.dense(), s.weight, s.params, s.family);
}

SquareFamily with_dilates(SquareFamily base, const SquareFamily& squares, const std::vector<double>& factors) {
  for (const Square& q : squares)
    for (double t : factors) base.push_back(q.scaled(t));
  return base;
}

void run_separation(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const double h = s.spec.spacing();
  const double rad = cfg.get_double("half_cells") * h;
  const double rho = cfg.get_double("rho_factor") * rad;
  const int count = cfg.get_int("squares");
  const double c1 = cfg.get_double("c1");
  const double eta = cfg.get_double("eta_cells") * h;
  const double stability = cfg.get_double("stability");
  const double smaller = cfg.get_double("smooth_factor");
  require(count >= 2, "squares must be >= 2");
  SquareFamily squares;
  for (int i = 0; i < count; ++i) {
    const double th = 2.0 * std::numbers::pi * i / count;
    squares.emplace_back(std::polar(rho, th), rad);
  }
  const std::vector<double> dil = cfg.get_doubles("dilates");
  const SquareFamily base = with_dilates(s.family, squares, dil);
  const SquareFamily fine = validated([&] {
    return with_dilates(dyadic_family(s.spec, cfg.get_int("family.min_level"), cfg.get_int("family.max_level") + 1,
                                      2 * cfg.get_int("family.refine")),
                        squares, dil);
  });
  const std::vector<SquareFamily> families{base, fine};

  r.table.columns = {"symbol", "family", "l", "m", "separation"};
  auto run = [&](const std::string& name, const RealField& b) {
    double min_osc = std::numeric_limits<double>::infinity();
    for (const Square& q : squares) min_osc = std::min(min_osc, mean_oscillation(b, q));
    const TestFamily tf = validated([&] {
      return build_test_family(b, squares, s.weight, s.params, {cfg.get_double("delta_fraction") * min_osc, 0, true});
    });
    SeparationReport rep = validated([&] { return separation_experiment(tf, b, s.weight, s.params, families, c1, eta); });
    for (std::size_t f = 0; f < rep.separation.size(); ++f)
      for (std::size_t p = 0; p < rep.pairs.size(); ++p)
        r.table.add({name, f == 0 ? "base" : "doubled", as_int(rep.pairs[p].first), as_int(rep.pairs[p].second),
                     rep.separation[f][p]});
    return rep;
  };
  const RealField blog = normalized_log(s, cfg.get_double("log_floor_cells"), base);
  const SeparationReport lg = run("log", blog);
  const double R = cfg.get_double("bump_radius") * s.spec.half_width();
  RealField bump = sample_real(s.spec, [&](complex z) { return compact_bump(z, complex(0.0, 0.0), R); });
  const double bn = bmo_norm(bump, base);
  for (auto& v : bump.values()) v /= bn;
  const SeparationReport sm = run("bump", bump);

  const double m0 = lg.minimum[0], m1 = lg.minimum[1];
  const double change = std::abs(m1 - m0) / m0;
  double worst = 0.0;
  for (std::size_t f = 0; f < families.size(); ++f)
    for (std::size_t p = 0; p < lg.pairs.size(); ++p)
      worst = std::max(worst, sm.separation[f][p] / lg.separation[f][p]);
  r.metrics["log_min_base"] = m0;
  r.metrics["log_min_doubled"] = m1;
  r.metrics["smooth_ratio"] = worst;
  r.checks.push_back(make_check("separation positive", m0 > 0.0 && m1 > 0.0, "min separation = " + fmt(std::min(m0, m1))));
  r.checks.push_back(make_check("separation stable when the family doubles", change <= stability,
                                "relative change " + fmt(change) + " <= " + fmt(stability)));
  r.checks.push_back(make_check("smooth symbol separates less", worst * smaller <= 1.0,
                                "max bump / log separation = " + fmt(worst) + " <= 1/" + fmt(smaller)));
  r.checks.push_back(make_check("radii monotone", lg.radii_monotone, "test radii ordered"));
}

void run_cmo(const Config& cfg, ExperimentResult& r) {
  const Setup s = make_setup(cfg);
  const double L = s.spec.half_width();
  const double factor = cfg.get_double("decay_factor");
  const int small_levels = cfg.get_int("small_levels");
  require(small_levels >= 2, "small_levels must be >= 2");

  std::vector<SquareFamily> small, large, translated;
  for (int l = 0; l < small_levels; ++l) small.push_back(lattice(L / 2.0, L / 8.0 / std::pow(2.0, l)));
  for (double rr = L / 8.0; rr <= L * (1.0 + 1e-12); rr *= 2.0) large.push_back(lattice(L, rr));
  for (int m = 0; m < 4; ++m) translated.push_back({Square(complex(0.0, 0.0), L / 16.0).translated(m * (L / 4.0) * complex(1.0, 1.0))});

  RealField bump = sample_real(s.spec, [&](complex z) { return compact_bump(z, complex(0.0, 0.0), cfg.get_double("bump_radius") * L); });
  const RealField blog = validated([&] { return truncated_log(s.spec, cfg.get_double("log_floor_cells") * s.spec.spacing()); });

  r.table.columns = {"symbol", "condition", "index", "maximum"};
  auto trend = [&](const std::string& sym, const std::string& cond, const RealField& b, const std::vector<SquareFamily>& seq) {
    const std::vector<double> t = oscillation_trend(b, seq);
    for (std::size_t i = 0; i < t.size(); ++i) r.table.add({sym, cond, as_int(i), t[i]});
    return t;
  };
  bool bump_ok = true;
  std::string detail;
  for (const auto& [cond, seq] : {std::pair{std::string("small"), &small}, std::pair{std::string("large"), &large},
                                  std::pair{std::string("translated"), &translated}}) {
    const auto t = trend("bump", cond, bump, *seq);
    const bool ok = t.back() * factor <= t.front();
    bump_ok = bump_ok && ok;
    detail += cond + " " + fmt(t.front()) + " -> " + fmt(t.back()) + "; ";
    r.metrics["bump_" + cond + "_first"] = t.front();
    r.metrics["bump_" + cond + "_last"] = t.back();
  }
  const auto lt = trend("log", "small", blog, small);
  trend("log", "large", blog, large);
  trend("log", "translated", blog, translated);
  r.metrics["log_small_first"] = lt.front();
  r.metrics["log_small_last"] = lt.back();
  detail.resize(detail.size() - 2);
  r.checks.push_back(make_check("compactly supported symbol decays in all three conditions", bump_ok, detail));
  r.checks.push_back(make_check("log symbol keeps small-square oscillation", lt.back() * factor > lt.front(),
                                "small " + fmt(lt.front()) + " -> " + fmt(lt.back())));
}

}  // namespace

ExperimentInfo product_sets_experiment() {
  return {"lemma21-productsets", "measurable sets E_j x F_j with (b(z) - alpha) and (b(z) - b(u)) of one sign",
          with(shared_params("lemma21-productsets", 256, 4.0),
               {{"seeds", "10", "number of seeded smooth symbols"},
                {"squares", "5", "squares per symbol"},
                {"test_squares", "3", "test-family squares per symbol"},
                {"delta_fraction", "0.5", "delta as a fraction of the smallest oscillation"}}),
          run_product_sets};
}

ExperimentInfo chain_experiment() {
  return {"thm13-chain", "O(b;Q) <= C sum_j |Q|^-1 int_Q |[b,B] chi_Fj| <= C ||[b,B]|| (no local mean oscillation)",
          with(shared_params("thm13-chain", 256, 4.0),
               {{"seeds", "5", "number of seeded smooth symbols"},
                {"half_cells", "12", "half-side of the centred square in cells"},
                {"extra_probes", "2", "random probes added to the norm proxy"},
                {"constant_limit", "1000", "bound on every fitted step constant"},
                {"linear_limit", "64", "bound on O / chain sum for b = x"},
                {"kernel_limit", "18", "bound on the kernel comparison ratio"}}),
          run_chain};
}

ExperimentInfo lemma34_experiment() {
  return {"lemma34-bounds", "lower and upper bounds of int |[b,B] f_j|^p w on shifted squares Q_j^k",
          with(shared_params("lemma34-bounds", 2048, 4.0),
               {{"b.kind", "log", "log | constant"},
                {"b.value", "1", "value of a constant symbol"},
                {"log_floor_cells", "0.5", "floor of the truncated log in cells"},
                {"half_cells", "2", "test-square half-side in cells"},
                {"centers_cells", "0,4,0,-4,-4,0", "test-square centres as x,y pairs in cells"},
                {"ks", "2,3,4", "shift indices k"},
                {"delta_fraction", "0.5", "delta as a fraction of the smallest oscillation"},
                {"lower_band", "8", "allowed max/min of the lower-bound constants"},
                {"upper_limit", "1000", "bound on the upper-bound constants"}}),
          run_lemma34};
}

ExperimentInfo separation_experiment_info() {
  return {"lemma35-separation", "Morrey separation of [b,B] f_j over disjoint translated test squares",
          with(shared_params("lemma35-separation", 512, 4.0),
               {{"half_cells", "4", "test-square half-side in cells"},
                {"rho_factor", "6", "distance of the test centres from 0 in half-sides"},
                {"squares", "3", "number of test squares"},
                {"c1", "1", "dilation constant of the disjointness condition"},
                {"eta_cells", "2", "kernel truncation in cells"},
                {"dilates", "1,3,9", "dilates of the test squares added to the probe family"},
                {"log_floor_cells", "0.5", "floor of the truncated log in cells"},
                {"bump_radius", "0.5", "radius of the smooth symbol as a fraction of L"},
                {"delta_fraction", "0.5", "delta as a fraction of the smallest oscillation"},
                {"stability", "0.2", "allowed relative change when the family doubles"},
                {"smooth_factor", "5", "required ratio of log to bump separations"}}),
          run_separation};
}

ExperimentInfo cmo_experiment() {
  return {"cmo-probe", "CMO: oscillation vanishes on small squares, large squares and far translates",
          with(shared_params("cmo-probe", 256, 4.0),
               {{"bump_radius", "0.25", "bump radius as a fraction of L"},
                {"log_floor_cells", "0.5", "floor of the truncated log in cells"},
                {"small_levels", "4", "number of small-square levels"},
                {"decay_factor", "2", "required decay from first to last family"}}),
          run_cmo};
}

}  // namespace beurling::experiments
