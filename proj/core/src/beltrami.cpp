#include "beurling/beltrami.hpp"

#include <algorithm>
#include <cmath>

#include "beurling/transforms.hpp"

namespace beurling {

namespace {

double sup_modulus(const ComplexField& f) {
  double m = 0.0;
  for (const complex& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

ComplexField apply_bb(const ComplexField& b, const ComplexField& h) { return b * beurling(h); }

}  // namespace

BeltramiProblem::BeltramiProblem(ComplexField b_in, ComplexField g_in) : b(std::move(b_in)), g(std::move(g_in)) {
  require_same_grid(b.spec(), g.spec());
  if (!b.all_finite() || !g.all_finite()) throw std::invalid_argument("Beltrami data must be finite");
  b_sup = sup_modulus(b);
  if (!(b_sup < 1.0)) throw std::invalid_argument("Beltrami coefficient needs sup |b| < 1");
  const GridSpec& spec = b.spec();
  const double half = 0.5 * spec.half_width();
  for (int k = 0; k < spec.n(); ++k)
    for (int j = 0; j < spec.n(); ++j)
      if (b.at(j, k) != complex{} && (std::abs(spec.coord(j)) > half || std::abs(spec.coord(k)) > half))
        throw std::invalid_argument("Beltrami coefficient must vanish outside the central half-window");
}

NeumannResult neumann_invert(const ComplexField& b, const ComplexField& g, double tol, int n_max,
                             NeumannOrder order) {
  require_same_grid(b.spec(), g.spec());
  if (!(tol > 0.0)) throw std::invalid_argument("Neumann tolerance must be positive");
  if (n_max < 0) throw std::invalid_argument("Neumann iteration cap must be non-negative");
  if (!(sup_modulus(b) < 1.0)) throw std::invalid_argument("Neumann inversion needs sup |b| < 1");
  NeumannResult r{g, 0, {}, false};
  const double gn = l2_norm(g);
  r.term_norms.push_back(gn);
  if (gn == 0.0 || sup_modulus(b) == 0.0) {
    r.converged = true;
    return r;
  }
  ComplexField term = g;
  for (int n = 1; n <= n_max; ++n) {
    if (order == NeumannOrder::horner) {
      ComplexField next = g + apply_bb(b, r.h);
      term = next - r.h;
      r.h = std::move(next);
    } else {
      term = apply_bb(b, term);
      r.h = r.h + term;
    }
    r.n_used = n;
    const double tn = l2_norm(term);
    if (!std::isfinite(tn)) throw NumericalError("Neumann iterate is not finite");
    r.term_norms.push_back(tn);
    if (tn <= tol * gn) {
      r.converged = true;
      break;
    }
  }
  return r;
}

SolveReport solve_beltrami(const BeltramiProblem& problem, double tol, int n_max, NeumannOrder order) {
  NeumannResult inv = neumann_invert(problem.b, problem.g, tol, n_max, order);
  SolveReport rep{cauchy(inv.h), mean(inv.h), ComplexField(problem.g.spec()), ComplexField(problem.g.spec()),
                  inv.n_used, std::move(inv.term_norms), inv.converged, 0.0, 0.0};
  rep.dz = wirtinger(rep.f, Wirtinger::dz);
  rep.dzbar = wirtinger(rep.f, Wirtinger::dzbar);
  for (auto& v : rep.dzbar.values()) v += rep.affine;
  const double gn = l2_norm(problem.g);
  if (gn > 0.0) {
    rep.residual = l2_norm(rep.dzbar - problem.b * rep.dz - problem.g) / gn;
    rep.tail_estimate = std::pow(problem.b_sup, rep.n_used + 1) / (1.0 - problem.b_sup);
  }
  return rep;
}

double apriori_ratio(const SolveReport& report, const ComplexField& g, const Weight& w, const MorreyParams& params,
                     const SquareFamily& family) {
  const double gn = morrey_norm(modulus(g), w, params, family);
  if (gn == 0.0) throw std::domain_error("a priori ratio is undefined for g = 0");
  RealField df(g.spec());
  for (std::size_t i = 0; i < df.size(); ++i) df[i] = std::abs(report.dz[i]) + std::abs(report.dzbar[i]);
  const double r = morrey_norm(df, w, params, family) / gn;
  if (!std::isfinite(r)) throw NumericalError("a priori ratio is not finite");
  return r;
}

GrowthProbe norm_growth_probe(const ComplexField& b, std::span<const int> powers,
                              std::span<const ComplexField> probes, const Weight& w, const MorreyParams& params,
                              const SquareFamily& family, std::size_t fit_count) {
  GrowthProbe out;
  out.b_sup = sup_modulus(b);
  if (!(out.b_sup < 1.0)) throw std::invalid_argument("growth probe needs sup |b| < 1");
  if (powers.empty() || probes.empty()) return out;
  for (int n : powers) {
    if (n < 1) throw std::invalid_argument("growth probe powers must be positive");
    ComplexField bn(b.spec(), 1.0);
    for (std::size_t i = 0; i < bn.size(); ++i) bn[i] = std::pow(b[i], n);
    GrowthRow row{n, 0.0, 0.0};
    for (const ComplexField& f : probes) {
      const double fnorm = morrey_norm(f, w, params, family);
      if (fnorm == 0.0) continue;
      row.ratio = std::max(row.ratio, morrey_norm(bn * beurling_power(f, n), w, params, family) / fnorm);
    }
    out.rows.push_back(row);
  }
  const std::size_t fit = std::min(fit_count, out.rows.size());
  for (std::size_t i = 0; i < fit; ++i) {
    const double ref = out.rows[i].power * out.rows[i].power * std::pow(out.b_sup, out.rows[i].power);
    if (ref > 0.0) out.c_tilde = std::max(out.c_tilde, out.rows[i].ratio / ref);
  }
  out.within_envelope = true;
  for (auto& row : out.rows) {
    row.envelope = out.c_tilde * row.power * row.power * std::pow(out.b_sup, row.power);
    if (row.ratio > row.envelope * (1.0 + 1e-12)) out.within_envelope = false;
  }
  return out;
}

}  // namespace beurling
