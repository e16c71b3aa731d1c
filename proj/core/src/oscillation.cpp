#include "beurling/oscillation.hpp"

#include <algorithm>
#include <cmath>

#include "beurling/parallel.hpp"

namespace beurling {

namespace {

SampleBox nonempty_box(const GridSpec& spec, const Square& q) {
  if (!intersects_window(spec, q)) throw std::domain_error("square lies outside the window");
  const SampleBox box = sample_box(spec, q);
  if (box.empty()) throw std::domain_error("square holds no samples");
  return box;
}

template <class T>
double oscillation(const Field<T>& f, const Square& q) {
  const SampleBox box = nonempty_box(f.spec(), q);
  T s{};
  for (int k = box.k_begin; k < box.k_end; ++k)
    for (int j = box.j_begin; j < box.j_end; ++j) s += f.at(j, k);
  const double count = static_cast<double>(box.count());
  const T avg = s / count;
  double d = 0.0;
  for (int k = box.k_begin; k < box.k_end; ++k)
    for (int j = box.j_begin; j < box.j_end; ++j) d += std::abs(f.at(j, k) - avg);
  return d / count;
}

template <class T>
double family_max(const Field<T>& f, const SquareFamily& family) {
  std::vector<double> o(family.size());
  parallel_for(family.size(), [&](std::size_t i) { o[i] = oscillation(f, family[i]); });
  double m = 0.0;
  for (double v : o) m = std::max(m, v);
  return m;
}

}  // namespace

double median_value(const RealField& f, const Square& q) {
  const SampleBox box = nonempty_box(f.spec(), q);
  std::vector<double> v;
  v.reserve(box.count());
  for (int k = box.k_begin; k < box.k_end; ++k)
    for (int j = box.j_begin; j < box.j_end; ++j) v.push_back(f.at(j, k));
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>((v.size() - 1) / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

double median_value(const ComplexField& f, const Square& q) {
  const SampleBox box = nonempty_box(f.spec(), q);
  for (int k = box.k_begin; k < box.k_end; ++k)
    for (int j = box.j_begin; j < box.j_end; ++j)
      if (f.at(j, k).imag() != 0.0) throw std::invalid_argument("median value needs a real-valued field");
  return median_value(real_part(f), q);
}

double mean_oscillation(const RealField& f, const Square& q) { return oscillation(f, q); }
double mean_oscillation(const ComplexField& f, const Square& q) { return oscillation(f, q); }

double mean_deviation(const RealField& f, const Square& q, double c) {
  const SampleBox box = nonempty_box(f.spec(), q);
  double d = 0.0;
  for (int k = box.k_begin; k < box.k_end; ++k)
    for (int j = box.j_begin; j < box.j_end; ++j) d += std::abs(f.at(j, k) - c);
  return d / static_cast<double>(box.count());
}

OscillationReport oscillation_report(const RealField& f, const SquareFamily& family) {
  OscillationReport report;
  report.family = family;
  report.squares.resize(family.size());
  parallel_for(family.size(), [&](std::size_t i) {
    SquareOscillation& s = report.squares[i];
    s.mean = mean_over_square(f, family[i]);
    s.median = median_value(f, family[i]);
    s.oscillation = mean_deviation(f, family[i], s.mean);
    s.median_oscillation = mean_deviation(f, family[i], s.median);
  });
  for (const auto& s : report.squares) report.bmo = std::max(report.bmo, s.oscillation);
  return report;
}

double bmo_norm(const RealField& f, const SquareFamily& family) { return family_max(f, family); }
double bmo_norm(const ComplexField& f, const SquareFamily& family) { return family_max(f, family); }

CmoProbe cmo_probe(const RealField& f, const SquareFamily& small_area, const SquareFamily& large_area,
                   const SquareFamily& translated) {
  if (small_area.empty() || large_area.empty() || translated.empty())
    throw std::invalid_argument("CMO probe families must be nonempty");
  return {family_max(f, small_area), family_max(f, large_area), family_max(f, translated)};
}

std::vector<double> oscillation_trend(const RealField& f, const std::vector<SquareFamily>& sequence) {
  std::vector<double> out;
  out.reserve(sequence.size());
  for (const auto& family : sequence) {
    if (family.empty()) throw std::invalid_argument("empty family in oscillation trend");
    out.push_back(family_max(f, family));
  }
  return out;
}

}  // namespace beurling
