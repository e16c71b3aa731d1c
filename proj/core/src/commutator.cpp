#include "beurling/commutator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "beurling/oscillation.hpp"
#include "beurling/parallel.hpp"
#include "beurling/transforms.hpp"

namespace beurling {

namespace {

void require_central(const GridSpec& spec, const Square& q, const char* what) {
  if (!in_central_half(spec, q))
    throw std::domain_error(std::string(what) + " leaves the central half-window");
}

std::pair<int, int> grid_index(const GridSpec& spec, std::size_t flat) {
  const auto n = static_cast<std::size_t>(spec.n());
  return {static_cast<int>(flat % n), static_cast<int>(flat / n)};
}

complex displacement(const GridSpec& spec, std::size_t z, std::size_t u) {
  const auto [jz, kz] = grid_index(spec, z);
  const auto [ju, ku] = grid_index(spec, u);
  return complex(jz - ju, kz - ku) * spec.spacing();
}

std::vector<std::size_t> strided(const std::vector<std::size_t>& v, std::size_t side) {
  if (v.size() <= side) return v;
  std::vector<std::size_t> out;
  out.reserve(side);
  for (std::size_t i = 0; i < side; ++i) out.push_back(v[i * v.size() / side]);
  return out;
}

double ratio(double a, double b) {
  if (a == 0.0 && b == 0.0) return 0.0;
  return a / b;
}

ComplexField indicator(const GridSpec& spec, const std::vector<std::size_t>& set) {
  ComplexField out(spec);
  for (std::size_t i : set) out[i] = 1.0;
  return out;
}

}  // namespace

ComplexField commutator_apply(const ComplexField& b, const ComplexField& f, CommutatorMode mode, double eta) {
  require_same_grid(b.spec(), f.spec());
  if (mode == CommutatorMode::quadrature) return commutator_truncated(b, f, eta);
  return b * beurling(f) - beurling(b * f);
}

ComplexField SparseField::dense() const {
  ComplexField out(spec);
  for (std::size_t i = 0; i < index.size(); ++i) out[index[i]] = value[i];
  return out;
}

ComplexField commutator_sparse(const RealField& b, const SparseField& f, double eta, const SampleBox& target) {
  require_same_grid(b.spec(), f.spec);
  const GridSpec& spec = b.spec();
  if (eta != 0.0) require_resolved_scale(spec, eta);
  const double h = spec.spacing();
  const double area = spec.cell_area();
  struct Source {
    int j, k;
    double b;
    complex f;
  };
  std::vector<Source> sources;
  for (std::size_t i = 0; i < f.index.size(); ++i) {
    if (f.value[i] == complex{}) continue;
    const auto [j, k] = grid_index(spec, f.index[i]);
    sources.push_back({j, k, b[f.index[i]], f.value[i]});
  }
  ComplexField out(spec);
  if (target.empty()) return out;
  parallel_for(static_cast<std::size_t>(target.k_end - target.k_begin), [&](std::size_t row) {
    const int k = target.k_begin + static_cast<int>(row);
    for (int j = target.j_begin; j < target.j_end; ++j) {
      const double bz = b.at(j, k);
      complex s{};
      for (const Source& src : sources) {
        if (src.j == j && src.k == k) continue;
        const complex d = complex(j - src.j, k - src.k) * h;
        const complex kern = eta == 0.0 ? beurling_kernel(d) : truncated_kernel(d, eta);
        s += (bz - src.b) * kern * src.f;
      }
      out.at(j, k) = s * area;
    }
  });
  return out;
}

ProductSets product_sets(const RealField& b, const Square& q) {
  const GridSpec& spec = b.spec();
  const double r = q.half_side;
  ProductSets sets{q, q.translated(complex(4.0 * r, 4.0 * r)), 0.0, {}, {}};
  require_central(spec, sets.q, "square Q");
  require_central(spec, sets.q_tilde, "shifted square Q~");
  sets.alpha = median_value(b, sets.q_tilde);
  for (std::size_t i : sample_indices(spec, sets.q)) {
    if (b[i] >= sets.alpha) sets.e[0].push_back(i);
    if (b[i] <= sets.alpha) sets.e[1].push_back(i);
  }
  for (std::size_t i : sample_indices(spec, sets.q_tilde)) {
    if (b[i] <= sets.alpha) sets.f[0].push_back(i);
    if (b[i] >= sets.alpha) sets.f[1].push_back(i);
  }
  return sets;
}

ProductSetCheck check_product_sets(const RealField& b, const ProductSets& sets, std::size_t pair_side) {
  const GridSpec& spec = b.spec();
  ProductSetCheck check;
  const auto q_samples = sample_indices(spec, sets.q);
  const auto qt_samples = sample_indices(spec, sets.q_tilde);

  auto covers = [](const std::vector<std::size_t>& all, const std::vector<std::size_t>& a,
                   const std::vector<std::size_t>& c) {
    std::vector<std::size_t> u;
    std::set_union(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(u));
    return u == all;
  };
  check.cover = covers(q_samples, sets.e[0], sets.e[1]) && covers(qt_samples, sets.f[0], sets.f[1]);
  const std::size_t half = qt_samples.size() / 2;
  check.cardinality = sets.f[0].size() >= half && sets.f[1].size() >= half;

  check.domination = true;
  check.sign = true;
  for (int j = 0; j < 2; ++j) {
    const auto& e = sets.e[j];
    const auto& f = sets.f[j];
    for (std::size_t z : strided(e, pair_side))
      for (std::size_t u : strided(f, pair_side))
        if (std::abs(b[z] - sets.alpha) > std::abs(b[z] - b[u])) check.domination = false;
    if (e.empty() || f.empty()) continue;
    auto [emin, emax] = std::minmax_element(e.begin(), e.end(), [&](auto x, auto y) { return b[x] < b[y]; });
    auto [fmin, fmax] = std::minmax_element(f.begin(), f.end(), [&](auto x, auto y) { return b[x] < b[y]; });
    const bool b_sign = b[*emin] - b[*fmax] >= 0.0 || b[*emax] - b[*fmin] <= 0.0;
    auto extent = [&](const std::vector<std::size_t>& set) {
      std::array<double, 4> ext{INFINITY, -INFINITY, INFINITY, -INFINITY};
      for (std::size_t i : set) {
        const auto [jj, kk] = grid_index(spec, i);
        ext[0] = std::min(ext[0], spec.coord(jj));
        ext[1] = std::max(ext[1], spec.coord(jj));
        ext[2] = std::min(ext[2], spec.coord(kk));
        ext[3] = std::max(ext[3], spec.coord(kk));
      }
      return ext;
    };
    const auto ez = extent(e);
    const auto fu = extent(f);
    const bool x_sign = ez[1] < fu[0] || ez[0] > fu[1];
    const bool y_sign = ez[3] < fu[2] || ez[2] > fu[3];
    const bool geo_sign = x_sign && y_sign;
    check.sign = check.sign && b_sign && geo_sign;
  }
  return check;
}

TestFamily build_test_family(const RealField& b, const SquareFamily& squares, const Weight& w,
                             const MorreyParams& params, const TestFamilyOptions& options) {
  require_same_grid(b.spec(), w.spec());
  const GridSpec& spec = b.spec();
  if (squares.empty()) throw std::invalid_argument("test family needs at least one square");
  TestFamily tf;
  tf.delta = options.delta;
  tf.k_max = options.k_max;
  const double expo = (params.kappa() - 1.0) / params.p();
  for (std::size_t idx = 0; idx < squares.size(); ++idx) {
    const Square& q = squares[idx];
    require_central(spec, q.scaled(std::pow(3.0, options.k_max + 1)), "dilated test square");
    TestMember m{q, 0.0, 0.0, 0.0, 0.0, 0, {}, {}, SparseField{spec, {}, {}}};
    m.oscillation = mean_oscillation(b, q);
    if (options.require_oscillation && !(m.oscillation > options.delta))
      throw std::invalid_argument("oscillation of b on test square " + std::to_string(idx) + " is " +
                                  std::to_string(m.oscillation) + ", not above delta = " +
                                  std::to_string(options.delta));
    m.alpha = median_value(b, q);
    const auto samples = sample_indices(spec, q);
    m.count = samples.size();
    for (std::size_t i : samples) {
      if (b[i] > m.alpha) m.upper.push_back(i);
      if (b[i] < m.alpha) m.lower.push_back(i);
    }
    m.a = (static_cast<double>(m.upper.size()) - static_cast<double>(m.lower.size())) / static_cast<double>(m.count);
    m.scale = std::pow(weighted_measure(w, q), expo);
    m.f.index = samples;
    m.f.value.reserve(samples.size());
    for (std::size_t i : samples) {
      const double ind = b[i] > m.alpha ? 1.0 : (b[i] < m.alpha ? -1.0 : 0.0);
      m.f.value.emplace_back(m.scale * (ind - m.a));
    }
    tf.members.push_back(std::move(m));
  }
  return tf;
}

TestFamilyCheck check_test_family(const RealField& b, const TestFamily& tf) {
  const GridSpec& spec = b.spec();
  TestFamilyCheck c{0.0, true, true, true, true, true};
  for (const TestMember& m : tf.members) {
    double sum = 0.0, abs_sum = 0.0;
    for (const complex& v : m.f.value) {
      sum += v.real();
      abs_sum += std::abs(v);
    }
    const double rel = abs_sum == 0.0 ? 0.0 : std::abs(sum) / abs_sum;
    c.max_mean = std::max(c.max_mean, rel);
    if (rel > 1e-12) c.mean_zero = false;
    if (std::abs(m.a) > 0.5 + 1.0 / static_cast<double>(m.count)) c.a_bound = false;
    const SampleBox box = sample_box(spec, m.q);
    for (std::size_t t = 0; t < m.f.index.size(); ++t) {
      const std::size_t i = m.f.index[t];
      const auto [j, k] = grid_index(spec, i);
      if (!box.contains(j, k)) c.support = false;
      const double v = m.f.value[t].real();
      if (v * (b[i] - m.alpha) < 0.0) c.sign = false;
      if (b[i] != m.alpha) {
        const double a = std::abs(v);
        if (a < 0.5 * m.scale || a > 1.5 * m.scale) c.magnitude = false;
      }
    }
  }
  return c;
}

Square shifted_square(const Square& q, int k) {
  const double r = q.half_side;
  return Square(q.center + complex(std::pow(3.0, k) * r, 0.0), std::pow(3.0, k - 1) * r);
}

bool shifted_inclusions_hold(int k) {
  if (k < 1) return false;
  // Units of 3^{k-1} r relative to the centre of Q: Q^k has centre 3 and half-side 1.
  const std::int64_t c = 3, half4 = 4;
  struct Box {
    std::int64_t x0, x1, y0, y1;
  };
  const Box inner{-1, 1, -1, 1};
  const Box mid{c - half4, c + half4, -half4, half4};
  const Box outer{-9, 9, -9, 9};
  auto inside = [](const Box& a, const Box& o) { return a.x0 >= o.x0 && a.x1 <= o.x1 && a.y0 >= o.y0 && a.y1 <= o.y1; };
  return inside(inner, mid) && inside(mid, outer);
}

std::vector<BoundRow> lower_upper_bounds(const TestFamily& tf, const RealField& b, const Weight& w,
                                         const MorreyParams& params, std::span<const int> ks) {
  require_same_grid(b.spec(), w.spec());
  const GridSpec& spec = b.spec();
  if (ks.empty()) return {};
  const int k_top = *std::max_element(ks.begin(), ks.end());
  const double p = params.p();
  std::vector<BoundRow> rows;
  for (std::size_t j = 0; j < tf.members.size(); ++j) {
    const TestMember& m = tf.members[j];
    const Square reach = m.q.scaled(std::pow(3.0, k_top + 1));
    require_central(spec, reach, "dilated square 3^{k+1} Q_j");
    const ComplexField c = commutator_sparse(b, m.f, 0.0, sample_box(spec, reach));
    auto power_sum = [&](const SampleBox& box, const SampleBox* hole) {
      double s = 0.0;
      for (int kk = box.k_begin; kk < box.k_end; ++kk)
        for (int jj = box.j_begin; jj < box.j_end; ++jj) {
          if (hole && hole->contains(jj, kk)) continue;
          const double a = std::abs(c.at(jj, kk));
          if (a != 0.0) s += std::pow(a, p) * w.values().at(jj, kk);
        }
      return s * spec.cell_area();
    };
    const double wq = weighted_measure(w, m.q);
    for (int k : ks) {
      if (k < 1) throw std::invalid_argument("shift index k must be positive");
      BoundRow row;
      row.j = j;
      row.k = k;
      const Square qk = shifted_square(m.q, k);
      const Square dil = m.q.scaled(std::pow(3.0, k));
      const Square dil_next = m.q.scaled(std::pow(3.0, k + 1));
      require_central(spec, qk, "shifted square Q_j^k");
      const double w_dil = weighted_measure(w, dil);
      const double base = std::pow(3.0, -2.0 * k * p) * std::pow(wq, params.kappa() - 1.0) * w_dil;
      row.lower_lhs = power_sum(sample_box(spec, qk), nullptr);
      row.lower_ref = std::pow(tf.delta, p) * base;
      row.c1 = ratio(row.lower_lhs, row.lower_ref);
      const SampleBox hole = sample_box(spec, dil);
      row.upper_lhs = power_sum(sample_box(spec, dil_next), &hole);
      row.upper_ref = base;
      row.c2 = ratio(row.upper_lhs, row.upper_ref);
      row.measure_ratio = weighted_measure(w, qk) / w_dil;
      row.inclusions = shifted_inclusions_hold(k) && qk.scaled(4.0).encloses(m.q.scaled(std::pow(3.0, k - 1))) &&
                       dil_next.encloses(qk.scaled(4.0));
      rows.push_back(row);
    }
  }
  return rows;
}

SeparationReport separation_experiment(const TestFamily& tf, const RealField& b, const Weight& w,
                                       const MorreyParams& params, const std::vector<SquareFamily>& families,
                                       double c1, double eta) {
  const GridSpec& spec = b.spec();
  const auto& ms = tf.members;
  for (std::size_t l = 0; l < ms.size(); ++l)
    for (std::size_t m = l + 1; m < ms.size(); ++m)
      if (ms[l].q.scaled(3.0 * c1).overlaps(ms[m].q.scaled(3.0 * c1)))
        throw std::invalid_argument("dilated test squares " + std::to_string(l) + " and " + std::to_string(m) +
                                    " overlap");
  SeparationReport report;
  bool up = true, down = true;
  for (std::size_t j = 1; j < ms.size(); ++j) {
    if (ms[j].q.half_side < ms[j - 1].q.half_side) up = false;
    if (ms[j].q.half_side > ms[j - 1].q.half_side) down = false;
  }
  report.radii_monotone = up || down;
  for (std::size_t l = 0; l < ms.size(); ++l)
    for (std::size_t m = l + 1; m < ms.size(); ++m) report.pairs.emplace_back(l, m);
  if (report.pairs.empty()) return report;

  const SampleBox all{0, spec.n(), 0, spec.n()};
  std::vector<ComplexField> images;
  images.reserve(ms.size());
  for (const TestMember& m : ms) images.push_back(commutator_sparse(b, m.f, eta, all));
  for (const SquareFamily& family : families) {
    std::vector<double> sep;
    for (const auto& [l, m] : report.pairs) sep.push_back(morrey_norm(images[l] - images[m], w, params, family));
    report.minimum.push_back(*std::min_element(sep.begin(), sep.end()));
    report.separation.push_back(std::move(sep));
  }
  return report;
}

NormProxy operator_norm_proxy(const RealField& b, std::span<const ComplexField> probes, const Weight& w,
                              const MorreyParams& params, const SquareFamily& family) {
  const ComplexField bc = to_complex(b);
  NormProxy proxy;
  for (const ComplexField& g : probes) {
    const double gn = morrey_norm(g, w, params, family);
    if (gn == 0.0) {
      proxy.ratios.push_back(0.0);
      continue;
    }
    const double r = morrey_norm(commutator_apply(bc, g, CommutatorMode::fft), w, params, family) / gn;
    proxy.ratios.push_back(r);
    proxy.value = std::max(proxy.value, r);
  }
  return proxy;
}

ChainReport oscillation_vs_commutator(const RealField& b, const Square& q, const Weight& w,
                                      const MorreyParams& params, const SquareFamily& family,
                                      std::span<const ComplexField> extra_probes) {
  require_same_grid(b.spec(), w.spec());
  const GridSpec& spec = b.spec();
  ChainReport rep{product_sets(b, q), {}, {}, 0.0, {}};
  const ProductSets& ps = rep.sets;
  const double alpha = ps.alpha;
  const double area = spec.cell_area();
  const auto q_samples = sample_indices(spec, q);
  const double q_measure = static_cast<double>(q_samples.size()) * area;
  const double p = params.p();
  const double kappa = params.kappa();

  SquareFamily fam = family;
  fam.push_back(q);

  auto& s = rep.steps;
  s[0] = mean_oscillation(b, q);
  s[1] = mean_deviation(b, q, alpha);

  std::array<ComplexField, 2> chi{indicator(spec, ps.f[0]), indicator(spec, ps.f[1])};
  const double wq = weighted_measure(w, q);
  for (int j = 0; j < 2; ++j) {
    const auto& e = ps.e[j];
    const auto& f = ps.f[j];
    double dev = 0.0;
    for (std::size_t z : e) dev += std::abs(b[z] - alpha);
    s[2] += dev * area / q_measure;
    s[3] += dev * area / q_measure * static_cast<double>(f.size()) * area / q_measure;

    double s4 = 0.0, s5 = 0.0;
    for (std::size_t z : e) {
      const double dz = std::abs(b[z] - alpha);
      double row4 = 0.0, row5 = 0.0;
      for (std::size_t u : f) {
        const complex d = displacement(spec, z, u);
        const double d2 = std::norm(d);
        const double cross = std::abs(d.real() * d.imag());
        const double db = std::abs(b[z] - b[u]);
        row4 += dz / d2;
        row5 += db * cross / (d2 * d2);
        if (dz > 0.0) rep.kernel_ratio = std::max(rep.kernel_ratio, (dz / d2) / (db * cross / (d2 * d2)));
      }
      s4 += row4;
      s5 += row5;
    }
    s[4] += s4 * area * area / q_measure;
    s[5] += s5 * area * area / q_measure;

    SparseField chi_sparse{spec, f, std::vector<complex>(f.size(), 1.0)};
    const ComplexField direct = commutator_sparse(b, chi_sparse, 0.0, sample_box(spec, q));
    double s6 = 0.0;
    for (std::size_t z : e) {
      double im = 0.0;
      for (std::size_t u : f) {
        const complex d = displacement(spec, z, u);
        const double d2 = std::norm(d);
        im += (b[z] - b[u]) * 2.0 * d.real() * d.imag() / (std::numbers::pi * d2 * d2);
      }
      s6 += std::abs(im);
    }
    s[6] += s6 * area * area / q_measure;
    double s7 = 0.0, s8 = 0.0;
    for (std::size_t z : e) s7 += std::abs(direct[z]);
    for (std::size_t z : q_samples) s8 += std::abs(direct[z]);
    s[7] += s7 * area / q_measure;
    s[8] += s8 * area / q_measure;
  }

  std::vector<ComplexField> probes{chi[0], chi[1]};
  probes.insert(probes.end(), extra_probes.begin(), extra_probes.end());
  rep.proxy = operator_norm_proxy(b, probes, w, params, fam);
  const double wq_factor = std::pow(wq, (kappa - 1.0) / p);
  const ComplexField bc = to_complex(b);
  for (int j = 0; j < 2; ++j) {
    const ComplexField image = commutator_apply(bc, chi[j], CommutatorMode::fft);
    s[9] += morrey_norm(image, w, params, fam) * wq_factor;
    s[10] += rep.proxy.value * morrey_norm(chi[j], w, params, fam) * wq_factor;
    s[11] += rep.proxy.value * std::pow(weighted_measure(w, ps.f[j]), (1.0 - kappa) / p) * wq_factor;
  }
  s[12] = rep.proxy.value * std::pow(weighted_measure(w, ps.q_tilde), (1.0 - kappa) / p) * wq_factor;
  s[13] = rep.proxy.value;
  for (std::size_t i = 0; i + 1 < kChainSteps; ++i) rep.ratios[i] = ratio(s[i], s[i + 1]);
  for (double v : s)
    if (!std::isfinite(v)) throw NumericalError("chain quantity is not finite");
  return rep;
}

}  // namespace beurling
