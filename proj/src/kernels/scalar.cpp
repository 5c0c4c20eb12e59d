#include "pumpsim/kernels.hpp"

#include <limits>

// Reference implementations. Plain forward accumulation, no blocking or
// pairwise tricks: these define the semantics the vector variants are tested
// against.
namespace pumpsim::kernels::scalar {

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double sum_sq_diff(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return acc;
}

CenteredMoments centered_moments(const double* x, const double* y,
                                 std::size_t n, double mean_x, double mean_y) {
  CenteredMoments m{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    m.sxx += dx * dx;
    m.syy += dy * dy;
    m.sxy += dx * dy;
  }
  return m;
}

MinMax minmax(const double* x, std::size_t n) {
  MinMax r{std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] < r.min) r.min = x[i];
    if (x[i] > r.max) r.max = x[i];
  }
  return r;
}

void poly_eval_array(const double* coeffs, std::size_t ncoeff, const double* x,
                     std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = ncoeff; k-- > 0;) acc = acc * x[i] + coeffs[k];
    out[i] = acc;
  }
}

void abs2(const double* reim, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = reim[2 * i];
    const double im = reim[2 * i + 1];
    out[i] = re * re + im * im;
  }
}

}  // namespace pumpsim::kernels::scalar
