#include "beurling/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace beurling {

namespace {

// FFTW planning is not thread-safe; execution on new arrays is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find({n, sign});
    if (it != plans_.end()) return it->second;
    std::vector<complex> scratch(static_cast<std::size_t>(n) * n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_2d(n, n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(std::make_pair(n, sign), plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plans() {
  static PlanCache cache;
  return cache;
}

std::vector<complex> transform(std::span<const complex> data, int n, int sign) {
  if (data.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("fft input is not n x n");
  std::vector<complex> out(data.begin(), data.end());
  auto* buf = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(plans().get(n, sign), buf, buf);
  return out;
}

}  // namespace

std::vector<complex> fft_forward(std::span<const complex> data, int n) { return transform(data, n, FFTW_FORWARD); }

std::vector<complex> fft_inverse(std::span<const complex> data, int n) {
  auto out = transform(data, n, FFTW_BACKWARD);
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (auto& v : out) v *= scale;
  return out;
}

double derivative_frequency(const GridSpec& spec, int index) {
  const int n = spec.n();
  const int k = wavenumber(index, n);
  if (k == -n / 2) return 0.0;
  return M_PI * k / spec.half_width();
}

ComplexField apply_multiplier(const ComplexField& f, const std::function<complex(complex xi)>& symbol) {
  const GridSpec& spec = f.spec();
  const int n = spec.n();
  auto spectrum = fft_forward(f.values(), n);
  std::vector<double> freq(n);
  for (int i = 0; i < n; ++i) freq[i] = derivative_frequency(spec, i);
  for (int ky = 0; ky < n; ++ky)
    for (int kx = 0; kx < n; ++kx) spectrum[spec.flat(kx, ky)] *= symbol(complex(freq[kx], freq[ky]));
  return ComplexField(spec, fft_inverse(spectrum, n));
}

ComplexField linear_convolution(const ComplexField& f, const std::function<complex(complex d)>& kernel) {
  const GridSpec& spec = f.spec();
  const int n = spec.n();
  const int m = 2 * n;
  const double h = spec.spacing();
  const auto pflat = [m](int j, int k) { return static_cast<std::size_t>(k) * m + j; };

  std::vector<complex> padded_f(static_cast<std::size_t>(m) * m);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) padded_f[pflat(j, k)] = f.at(j, k);

  std::vector<complex> padded_k(static_cast<std::size_t>(m) * m);
  for (int b = -(n - 1); b <= n - 1; ++b)
    for (int a = -(n - 1); a <= n - 1; ++a)
      padded_k[pflat((a + m) % m, (b + m) % m)] = kernel(complex(a * h, b * h));

  auto fs = fft_forward(padded_f, m);
  const auto ks = fft_forward(padded_k, m);
  for (std::size_t i = 0; i < fs.size(); ++i) fs[i] *= ks[i];
  const auto conv = fft_inverse(fs, m);

  ComplexField out(spec);
  const double area = spec.cell_area();
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) out.at(j, k) = area * conv[pflat(j, k)];
  return out;
}

}  // namespace beurling
