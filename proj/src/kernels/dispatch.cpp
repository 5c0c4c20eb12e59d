#include "pumpsim/kernels.hpp"

namespace pumpsim::kernels {

bool avx2_compiled() {
#ifdef PUMPSIM_HAVE_AVX2
  return true;
#else
  return false;
#endif
}

bool avx2_selected() {
#ifdef PUMPSIM_HAVE_AVX2
  static const bool ok =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

const char* active_backend() { return avx2_selected() ? "avx2" : "scalar"; }

#ifndef PUMPSIM_HAVE_AVX2
// Keep the avx2 symbols linkable on toolchains without AVX2 support; the
// equivalence tests then compare scalar against itself.
namespace avx2 {
double sum(const double* x, std::size_t n) { return scalar::sum(x, n); }
double dot(const double* x, const double* y, std::size_t n) {
  return scalar::dot(x, y, n);
}
double sum_sq_diff(const double* x, const double* y, std::size_t n) {
  return scalar::sum_sq_diff(x, y, n);
}
CenteredMoments centered_moments(const double* x, const double* y,
                                 std::size_t n, double mean_x, double mean_y) {
  return scalar::centered_moments(x, y, n, mean_x, mean_y);
}
MinMax minmax(const double* x, std::size_t n) { return scalar::minmax(x, n); }
void poly_eval_array(const double* coeffs, std::size_t ncoeff, const double* x,
                     std::size_t n, double* out) {
  scalar::poly_eval_array(coeffs, ncoeff, x, n, out);
}
void abs2(const double* reim, std::size_t n, double* out) {
  scalar::abs2(reim, n, out);
}
}  // namespace avx2
#endif

double sum(const double* x, std::size_t n) {
  return avx2_selected() ? avx2::sum(x, n) : scalar::sum(x, n);
}

double dot(const double* x, const double* y, std::size_t n) {
  return avx2_selected() ? avx2::dot(x, y, n) : scalar::dot(x, y, n);
}

double sum_sq_diff(const double* x, const double* y, std::size_t n) {
  return avx2_selected() ? avx2::sum_sq_diff(x, y, n)
                         : scalar::sum_sq_diff(x, y, n);
}

CenteredMoments centered_moments(const double* x, const double* y,
                                 std::size_t n, double mean_x, double mean_y) {
  return avx2_selected() ? avx2::centered_moments(x, y, n, mean_x, mean_y)
                         : scalar::centered_moments(x, y, n, mean_x, mean_y);
}

MinMax minmax(const double* x, std::size_t n) {
  return avx2_selected() ? avx2::minmax(x, n) : scalar::minmax(x, n);
}

void poly_eval_array(const double* coeffs, std::size_t ncoeff, const double* x,
                     std::size_t n, double* out) {
  if (avx2_selected()) {
    avx2::poly_eval_array(coeffs, ncoeff, x, n, out);
  } else {
    scalar::poly_eval_array(coeffs, ncoeff, x, n, out);
  }
}

void abs2(const double* reim, std::size_t n, double* out) {
  if (avx2_selected()) {
    avx2::abs2(reim, n, out);
  } else {
    scalar::abs2(reim, n, out);
  }
}

}  // namespace pumpsim::kernels
