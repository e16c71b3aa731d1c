#pragma once

// Periodic uniform sampling of the square window [-L, L)^2 of the complex
// plane, the fields that live on it, and square geometry.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace beurling {

using complex = std::complex<double>;

/// Non-finite value produced where a finite one is required.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square window [-L, L)^2 sampled at n points per axis; sample (j, k) sits at
/// (-L + j h) + i (-L + k h) with h = 2L / n.
class GridSpec {
 public:
  GridSpec(int n, double half_width);

  int n() const { return n_; }
  double half_width() const { return half_width_; }
  double spacing() const { return spacing_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }
  double cell_area() const { return spacing_ * spacing_; }

  double coord(int index) const { return -half_width_ + index * spacing_; }
  complex point(int j, int k) const { return {coord(j), coord(k)}; }
  std::size_t flat(int j, int k) const {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  bool operator==(const GridSpec&) const = default;

 private:
  int n_;
  double half_width_;
  double spacing_;
};

/// Throws std::invalid_argument unless n is a power of two >= 8 and L > 0.
GridSpec make_grid(int n, double half_width);

/// Row-major samples over a GridSpec; index (j, k) maps to values[k * n + j].
template <class T>
class Field {
 public:
  using value_type = T;

  explicit Field(const GridSpec& spec, T fill = T{}) : spec_(spec), values_(spec.size(), fill) {}
  Field(const GridSpec& spec, std::vector<T> values);

  const GridSpec& spec() const { return spec_; }
  std::size_t size() const { return values_.size(); }

  T& operator[](std::size_t i) { return values_[i]; }
  const T& operator[](std::size_t i) const { return values_[i]; }
  T& at(int j, int k) { return values_[spec_.flat(j, k)]; }
  const T& at(int j, int k) const { return values_[spec_.flat(j, k)]; }

  std::span<T> values() { return values_; }
  std::span<const T> values() const { return values_; }
  std::vector<T>& storage() { return values_; }
  const std::vector<T>& storage() const { return values_; }

  bool all_finite() const;

 private:
  GridSpec spec_;
  std::vector<T> values_;
};

using ComplexField = Field<complex>;
using RealField = Field<double>;

extern template class Field<complex>;
extern template class Field<double>;

/// Samples formula at every grid point; throws NumericalError on a
/// non-finite sample.
ComplexField sample(const GridSpec& spec, const std::function<complex(complex)>& formula);
RealField sample_real(const GridSpec& spec, const std::function<double(complex)>& formula);

RealField real_part(const ComplexField& f);
RealField modulus(const ComplexField& f);
ComplexField to_complex(const RealField& f);

/// Throws std::invalid_argument when the two fields live on different grids.
void require_same_grid(const GridSpec& a, const GridSpec& b);

/// Axis-aligned square with centre z0 and side 2r.
struct Square {
  complex center;
  double half_side;

  Square(complex c, double r);

  double area() const { return 4.0 * half_side * half_side; }
  double x_min() const { return center.real() - half_side; }
  double x_max() const { return center.real() + half_side; }
  double y_min() const { return center.imag() - half_side; }
  double y_max() const { return center.imag() + half_side; }

  /// Q(z0, t r).
  Square scaled(double t) const { return {center, t * half_side}; }
  /// Q + z.
  Square translated(complex z) const { return {center + z, half_side}; }

  /// Half-open membership [x0 - r, x0 + r) x [y0 - r, y0 + r).
  bool contains(complex z) const {
    return z.real() >= x_min() && z.real() < x_max() && z.imag() >= y_min() && z.imag() < y_max();
  }
  /// Closed-box inclusion of other inside this square.
  bool encloses(const Square& other) const {
    return other.x_min() >= x_min() && other.x_max() <= x_max() && other.y_min() >= y_min() &&
           other.y_max() <= y_max();
  }
  /// Open-box intersection test.
  bool overlaps(const Square& other) const {
    return other.x_min() < x_max() && x_min() < other.x_max() && other.y_min() < y_max() &&
           y_min() < other.y_max();
  }
};

/// Finite stand-in for a supremum over all squares.
using SquareFamily = std::vector<Square>;

/// Index box [j_begin, j_end) x [k_begin, k_end) of the samples inside a square
/// (clipped to the window). Membership is decided per sample point.
struct SampleBox {
  int j_begin = 0;
  int j_end = 0;
  int k_begin = 0;
  int k_end = 0;

  bool empty() const { return j_end <= j_begin || k_end <= k_begin; }
  std::size_t count() const {
    return empty() ? 0
                   : static_cast<std::size_t>(j_end - j_begin) * static_cast<std::size_t>(k_end - k_begin);
  }
  bool contains(int j, int k) const { return j >= j_begin && j < j_end && k >= k_begin && k < k_end; }
};

SampleBox sample_box(const GridSpec& spec, const Square& q);

/// True when the square meets the closed window [-L, L]^2.
bool intersects_window(const GridSpec& spec, const Square& q);
/// True when the closed square lies in the central half-window [-L/2, L/2]^2.
bool in_central_half(const GridSpec& spec, const Square& q);

/// Flat indices of the samples inside q, in row-major order.
std::vector<std::size_t> sample_indices(const GridSpec& spec, const Square& q);

/// h^2 times the sum of samples inside Q (half-open membership).
/// Throws std::domain_error when Q lies entirely outside the window.
complex integrate_over_square(const ComplexField& f, const Square& q);
double integrate_over_square(const RealField& f, const Square& q);

/// Discrete average over the samples inside Q; reproduces constants exactly.
/// Throws std::domain_error when Q holds no samples.
complex mean_over_square(const ComplexField& f, const Square& q);
double mean_over_square(const RealField& f, const Square& q);

/// Dyadic family: radii L / 2^level for level in [min_level, max_level], with
/// centres on the lattice of spacing r / refine that keeps each square inside
/// the window.
SquareFamily dyadic_family(const GridSpec& spec, int min_level, int max_level, int refine = 1);

/// Squares Q(0, r) for the given radii.
SquareFamily centered_family(std::span<const double> radii);

/// Periodic roll: result(j, k) = f(j + dj, k + dk), i.e. f(. + xi) for
/// xi = (dj + i dk) h.
template <class T>
Field<T> roll(const Field<T>& f, int dj, int dk);

/// Inner products and norms over the window with the h^2 area element.
double l2_norm(const ComplexField& f);
double l2_norm(const RealField& f);
complex mean(const ComplexField& f);

ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(const ComplexField& a, const ComplexField& b);
ComplexField operator*(complex c, const ComplexField& a);
ComplexField operator*(const RealField& a, const ComplexField& b);

}  // namespace beurling
