#include "beurling/morrey.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "beurling/parallel.hpp"

namespace beurling {

namespace {

template <class T>
double lp_sum(const Field<T>& f, const Weight& w, const Square& q, double p) {
  require_same_grid(f.spec(), w.spec());
  const GridSpec& spec = f.spec();
  if (!intersects_window(spec, q)) throw std::domain_error("square lies outside the window");
  const SampleBox box = sample_box(spec, q);
  if (box.empty()) throw std::domain_error("square holds no samples");
  const RealField& wv = w.values();
  double s = 0.0;
  for (int k = box.k_begin; k < box.k_end; ++k)
    for (int j = box.j_begin; j < box.j_end; ++j) {
      const double a = std::abs(f.at(j, k));
      if (a != 0.0) s += std::pow(a, p) * wv.at(j, k);
    }
  return s * spec.cell_area();
}

template <class T>
std::vector<double> terms(const Field<T>& f, const Weight& w, const MorreyParams& params,
                          const SquareFamily& family) {
  if (family.empty()) throw std::invalid_argument("Morrey norm needs a nonempty family");
  const double p = params.p();
  std::vector<double> out(family.size());
  parallel_for(family.size(), [&](std::size_t i) {
    const double lp = std::pow(lp_sum(f, w, family[i], p), 1.0 / p);
    const double wq = weighted_measure(w, family[i]);
    out[i] = lp / std::pow(wq, params.kappa() / p);
  });
  return out;
}

template <class T>
double norm(const Field<T>& f, const Weight& w, const MorreyParams& params, const SquareFamily& family) {
  double m = 0.0;
  for (double t : terms(f, w, params, family)) m = std::max(m, t);
  if (!std::isfinite(m)) throw NumericalError("Morrey norm is not finite");
  return m;
}

}  // namespace

MorreyParams::MorreyParams(double p, double kappa) : p_(p), kappa_(kappa) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("Morrey exponent p must lie in (1, inf), got " + std::to_string(p));
  if (!(kappa > 0.0 && kappa < 1.0))
    throw std::invalid_argument("Morrey exponent kappa must lie in (0, 1), got " + std::to_string(kappa));
}

double weighted_lp_over_square(const ComplexField& f, const Weight& w, const Square& q, double p) {
  return std::pow(lp_sum(f, w, q, p), 1.0 / p);
}

double weighted_lp_over_square(const RealField& f, const Weight& w, const Square& q, double p) {
  return std::pow(lp_sum(f, w, q, p), 1.0 / p);
}

double morrey_norm(const ComplexField& f, const Weight& w, const MorreyParams& params, const SquareFamily& family) {
  return norm(f, w, params, family);
}

double morrey_norm(const RealField& f, const Weight& w, const MorreyParams& params, const SquareFamily& family) {
  return norm(f, w, params, family);
}

std::vector<double> morrey_terms(const ComplexField& f, const Weight& w, const MorreyParams& params,
                                 const SquareFamily& family) {
  return terms(f, w, params, family);
}

std::vector<CompactnessTriple> fk_diagnostics(std::span<const ComplexField> fs, const Weight& w,
                                              const MorreyParams& params, const SquareFamily& family,
                                              double tail_radius, std::span<const complex> shifts) {
  const GridSpec& spec = w.spec();
  const double h = spec.spacing();
  std::vector<std::pair<int, int>> steps;
  for (complex xi : shifts) {
    const double a = xi.real() / h;
    const double b = xi.imag() / h;
    const double ra = std::round(a);
    const double rb = std::round(b);
    if (std::abs(a - ra) > 1e-9 || std::abs(b - rb) > 1e-9)
      throw std::invalid_argument("shift is not an integer multiple of the grid spacing");
    steps.emplace_back(static_cast<int>(ra), static_cast<int>(rb));
  }
  std::vector<CompactnessTriple> out;
  out.reserve(fs.size());
  for (const ComplexField& f : fs) {
    CompactnessTriple t;
    t.norm = morrey_norm(f, w, params, family);
    ComplexField tail = f;
    for (int k = 0; k < spec.n(); ++k)
      for (int j = 0; j < spec.n(); ++j)
        if (!(std::abs(spec.point(j, k)) > tail_radius)) tail.at(j, k) = 0.0;
    t.tail = morrey_norm(tail, w, params, family);
    for (const auto& [dj, dk] : steps) {
      if (dj == 0 && dk == 0) continue;
      t.modulus = std::max(t.modulus, morrey_norm(roll(f, dj, dk) - f, w, params, family));
    }
    out.push_back(t);
  }
  return out;
}

}  // namespace beurling
