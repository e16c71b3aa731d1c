#include "beurling/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace beurling {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Smallest index whose coordinate is >= bound, clipped to [0, n].
int first_at_or_above(const GridSpec& spec, double bound) {
  const int n = spec.n();
  double t = std::floor((bound + spec.half_width()) / spec.spacing());
  if (t < 0.0) return 0;
  if (t > n) return n;
  int j = static_cast<int>(t);
  while (j < n && spec.coord(j) < bound) ++j;
  while (j > 0 && spec.coord(j - 1) >= bound) --j;
  return j;
}

template <class T>
T sum_box(const Field<T>& f, const SampleBox& box) {
  T total{};
  for (int k = box.k_begin; k < box.k_end; ++k) {
    T row{};
    for (int j = box.j_begin; j < box.j_end; ++j) row += f.at(j, k);
    total += row;
  }
  return total;
}

template <class T>
SampleBox checked_box(const Field<T>& f, const Square& q) {
  if (!intersects_window(f.spec(), q)) throw std::domain_error("square lies outside the window");
  return sample_box(f.spec(), q);
}

}  // namespace

GridSpec::GridSpec(int n, double half_width) : n_(n), half_width_(half_width), spacing_(2.0 * half_width / n) {
  if (n < 8 || !is_power_of_two(n))
    throw std::invalid_argument("grid size n must be a power of two >= 8, got " + std::to_string(n));
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::invalid_argument("grid half-width L must be positive");
}

GridSpec make_grid(int n, double half_width) { return GridSpec(n, half_width); }

template <class T>
Field<T>::Field(const GridSpec& spec, std::vector<T> values) : spec_(spec), values_(std::move(values)) {
  if (values_.size() != spec_.size()) throw std::invalid_argument("field length does not match n^2");
}

template <class T>
bool Field<T>::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](const T& v) {
    if constexpr (std::is_same_v<T, complex>)
      return std::isfinite(v.real()) && std::isfinite(v.imag());
    else
      return std::isfinite(v);
  });
}

template class Field<complex>;
template class Field<double>;

ComplexField sample(const GridSpec& spec, const std::function<complex(complex)>& formula) {
  ComplexField out(spec);
  for (int k = 0; k < spec.n(); ++k) {
    for (int j = 0; j < spec.n(); ++j) {
      const complex v = formula(spec.point(j, k));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NumericalError("formula is not finite at sample (" + std::to_string(j) + ", " +
                             std::to_string(k) + ")");
      out.at(j, k) = v;
    }
  }
  return out;
}

RealField sample_real(const GridSpec& spec, const std::function<double(complex)>& formula) {
  RealField out(spec);
  for (int k = 0; k < spec.n(); ++k) {
    for (int j = 0; j < spec.n(); ++j) {
      const double v = formula(spec.point(j, k));
      if (!std::isfinite(v))
        throw NumericalError("formula is not finite at sample (" + std::to_string(j) + ", " +
                             std::to_string(k) + ")");
      out.at(j, k) = v;
    }
  }
  return out;
}

RealField real_part(const ComplexField& f) {
  RealField out(f.spec());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].real();
  return out;
}

RealField modulus(const ComplexField& f) {
  RealField out(f.spec());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  return out;
}

ComplexField to_complex(const RealField& f) {
  ComplexField out(f.spec());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  return out;
}

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw std::invalid_argument("fields live on different grids");
}

Square::Square(complex c, double r) : center(c), half_side(r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("square half-side must be positive");
}

SampleBox sample_box(const GridSpec& spec, const Square& q) {
  SampleBox box;
  box.j_begin = first_at_or_above(spec, q.x_min());
  box.j_end = first_at_or_above(spec, q.x_max());
  box.k_begin = first_at_or_above(spec, q.y_min());
  box.k_end = first_at_or_above(spec, q.y_max());
  return box;
}

bool intersects_window(const GridSpec& spec, const Square& q) {
  const double L = spec.half_width();
  return q.x_max() > -L && q.x_min() < L && q.y_max() > -L && q.y_min() < L;
}

bool in_central_half(const GridSpec& spec, const Square& q) {
  const double h = 0.5 * spec.half_width();
  return q.x_min() >= -h && q.x_max() <= h && q.y_min() >= -h && q.y_max() <= h;
}

std::vector<std::size_t> sample_indices(const GridSpec& spec, const Square& q) {
  const SampleBox box = sample_box(spec, q);
  std::vector<std::size_t> out;
  out.reserve(box.count());
  for (int k = box.k_begin; k < box.k_end; ++k)
    for (int j = box.j_begin; j < box.j_end; ++j) out.push_back(spec.flat(j, k));
  return out;
}

complex integrate_over_square(const ComplexField& f, const Square& q) {
  return f.spec().cell_area() * sum_box(f, checked_box(f, q));
}

double integrate_over_square(const RealField& f, const Square& q) {
  return f.spec().cell_area() * sum_box(f, checked_box(f, q));
}

complex mean_over_square(const ComplexField& f, const Square& q) {
  const SampleBox box = checked_box(f, q);
  if (box.empty()) throw std::domain_error("square holds no samples");
  return sum_box(f, box) / static_cast<double>(box.count());
}

double mean_over_square(const RealField& f, const Square& q) {
  const SampleBox box = checked_box(f, q);
  if (box.empty()) throw std::domain_error("square holds no samples");
  return sum_box(f, box) / static_cast<double>(box.count());
}

SquareFamily dyadic_family(const GridSpec& spec, int min_level, int max_level, int refine) {
  if (min_level > max_level || refine < 1) throw std::invalid_argument("empty dyadic family");
  const double L = spec.half_width();
  SquareFamily family;
  for (int level = min_level; level <= max_level; ++level) {
    const double r = std::ldexp(L, -level);
    const double step = r / refine;
    const int count = static_cast<int>(std::lround((2.0 * L - 2.0 * r) / step));
    for (int b = 0; b <= count; ++b)
      for (int a = 0; a <= count; ++a) family.emplace_back(complex(-L + r + a * step, -L + r + b * step), r);
  }
  return family;
}

SquareFamily centered_family(std::span<const double> radii) {
  SquareFamily family;
  for (double r : radii) family.emplace_back(complex(0.0, 0.0), r);
  return family;
}

template <class T>
Field<T> roll(const Field<T>& f, int dj, int dk) {
  const int n = f.spec().n();
  Field<T> out(f.spec());
  const int sj = ((dj % n) + n) % n;
  const int sk = ((dk % n) + n) % n;
  for (int k = 0; k < n; ++k) {
    const int src_k = (k + sk) % n;
    for (int j = 0; j < n; ++j) out.at(j, k) = f.at((j + sj) % n, src_k);
  }
  return out;
}

template ComplexField roll(const ComplexField&, int, int);
template RealField roll(const RealField&, int, int);

double l2_norm(const ComplexField& f) {
  double s = 0.0;
  for (const auto& v : f.values()) s += std::norm(v);
  return std::sqrt(s * f.spec().cell_area());
}

double l2_norm(const RealField& f) {
  double s = 0.0;
  for (double v : f.values()) s += v * v;
  return std::sqrt(s * f.spec().cell_area());
}

complex mean(const ComplexField& f) {
  complex s{};
  for (const auto& v : f.values()) s += v;
  return s / static_cast<double>(f.size());
}

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a.spec(), b.spec());
  ComplexField out(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a.spec(), b.spec());
  ComplexField out(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

ComplexField operator*(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a.spec(), b.spec());
  ComplexField out(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

ComplexField operator*(complex c, const ComplexField& a) {
  ComplexField out(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

ComplexField operator*(const RealField& a, const ComplexField& b) {
  require_same_grid(a.spec(), b.spec());
  ComplexField out(a.spec());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace beurling
