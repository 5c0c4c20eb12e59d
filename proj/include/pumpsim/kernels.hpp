#pragma once

#include <cstddef>

// Numeric reduction kernels used by the statistics, fitting, and spectrum
// layers. The scalar versions are the reference; an AVX2/FMA variant is
// picked at runtime when the CPU supports it. Both are exposed so tests can
// assert their equivalence directly.
namespace pumpsim::kernels {

struct MinMax {
  double min;
  double max;
};

// second-order sums about externally supplied means
struct CenteredMoments {
  double sxx;
  double syy;
  double sxy;
};

double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double sum_sq_diff(const double* x, const double* y, std::size_t n);
CenteredMoments centered_moments(const double* x, const double* y,
                                 std::size_t n, double mean_x, double mean_y);
MinMax minmax(const double* x, std::size_t n);

// out[i] = sum_k coeffs[k] * x[i]^k, evaluated by Horner's rule
void poly_eval_array(const double* coeffs, std::size_t ncoeff, const double* x,
                     std::size_t n, double* out);

// interleaved (re, im) pairs -> squared magnitudes; n is the pair count
void abs2(const double* reim, std::size_t n, double* out);

bool avx2_compiled();
bool avx2_selected();
const char* active_backend();  // "avx2" or "scalar"

namespace scalar {
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double sum_sq_diff(const double* x, const double* y, std::size_t n);
CenteredMoments centered_moments(const double* x, const double* y,
                                 std::size_t n, double mean_x, double mean_y);
MinMax minmax(const double* x, std::size_t n);
void poly_eval_array(const double* coeffs, std::size_t ncoeff, const double* x,
                     std::size_t n, double* out);
void abs2(const double* reim, std::size_t n, double* out);
}  // namespace scalar

// Forwards to scalar when the AVX2 translation unit is not compiled in.
namespace avx2 {
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double sum_sq_diff(const double* x, const double* y, std::size_t n);
CenteredMoments centered_moments(const double* x, const double* y,
                                 std::size_t n, double mean_x, double mean_y);
MinMax minmax(const double* x, std::size_t n);
void poly_eval_array(const double* coeffs, std::size_t ncoeff, const double* x,
                     std::size_t n, double* out);
void abs2(const double* reim, std::size_t n, double* out);
}  // namespace avx2

}  // namespace pumpsim::kernels
