#include "pumpsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pumpsim/errors.hpp"
#include "pumpsim/fft.hpp"
#include "pumpsim/kernels.hpp"

namespace pumpsim {

namespace {

void check_stats_pair(const AlignedSeries& s) {
  const std::size_t n = s.reference.size();
  if (n < 2 || s.candidate.size() != n) {
    fail(ErrorCode::InvalidArgument,
         "statistics need two equal-length series of at least 2 samples");
  }
  if (!s.t.empty() && s.t.size() != n) {
    fail(ErrorCode::InvalidArgument, "time grid length does not match series");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(s.reference[i]) || !std::isfinite(s.candidate[i])) {
      fail(ErrorCode::InvalidArgument, "series contain non-finite values");
    }
  }
}

}  // namespace

void validate_aligned(const AlignedSeries& s) {
  const std::size_t n = s.t.size();
  if (n < 8 || s.reference.size() != n || s.candidate.size() != n) {
    fail(ErrorCode::InvalidArgument,
         "aligned series need equal lengths of at least 8");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(s.t[i]) || !std::isfinite(s.reference[i]) ||
        !std::isfinite(s.candidate[i])) {
      fail(ErrorCode::InvalidArgument, "aligned series contain non-finite values");
    }
  }
  const double dt = s.t[1] - s.t[0];
  if (!(dt > 0.0)) {
    fail(ErrorCode::InvalidArgument, "time grid must strictly increase");
  }
  const double tol = 1e-9 * std::max(1.0, std::abs(dt));
  for (std::size_t i = 2; i < n; ++i) {
    if (std::abs((s.t[i] - s.t[i - 1]) - dt) > tol) {
      fail(ErrorCode::InvalidArgument, "time grid is not uniform");
    }
  }
}

double rmse(const AlignedSeries& s) {
  check_stats_pair(s);
  const std::size_t n = s.reference.size();
  const double ssd =
      kernels::sum_sq_diff(s.reference.data(), s.candidate.data(), n);
  return std::sqrt(ssd / static_cast<double>(n));
}

double nrmse(const AlignedSeries& s, Normalizer norm) {
  const double e = rmse(s);
  const std::size_t n = s.reference.size();
  const auto mm = kernels::minmax(s.reference.data(), n);
  const double max_abs = std::max(std::abs(mm.min), std::abs(mm.max));

  double denom = 0.0;
  if (norm == Normalizer::MeanOfReference) {
    denom = std::abs(kernels::sum(s.reference.data(), n) /
                     static_cast<double>(n));
  } else {
    denom = mm.max - mm.min;
  }
  if (denom < 1e-12 * (1.0 + max_abs)) {
    fail(ErrorCode::DegenerateNormalizer,
         "reference series gives a vanishing normalizer");
  }
  return e / denom;
}

double pearson(const AlignedSeries& s) {
  check_stats_pair(s);
  const std::size_t n = s.reference.size();
  const double nd = static_cast<double>(n);
  const double mx = kernels::sum(s.reference.data(), n) / nd;
  const double my = kernels::sum(s.candidate.data(), n) / nd;
  const auto mom =
      kernels::centered_moments(s.reference.data(), s.candidate.data(), n, mx, my);

  // a constant series only differs from its mean by accumulated roundoff, so
  // the cutoff scales with the squared mean
  const double tol_x = 1e-20 * nd * (1.0 + mx * mx);
  const double tol_y = 1e-20 * nd * (1.0 + my * my);
  if (mom.sxx <= tol_x || mom.syy <= tol_y) {
    fail(ErrorCode::ZeroVariance, "correlation of a constant series is undefined");
  }
  return mom.sxy / std::sqrt(mom.sxx * mom.syy);
}

double fundamental_frequency(const std::vector<double>& values, double h) {
  const std::size_t n = values.size();
  if (n < 8) {
    fail(ErrorCode::InvalidArgument,
         "spectral estimate needs at least 8 samples");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    fail(ErrorCode::InvalidArgument, "spectral estimate needs a positive step");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      fail(ErrorCode::InvalidArgument, "series contains non-finite values");
    }
  }

  const double mean = kernels::sum(values.data(), n) / static_cast<double>(n);
  std::vector<double> centered(values);
  for (double& v : centered) v -= mean;

  const std::size_t nfft = next_pow2(n);
  const std::vector<double> mags = spectrum_magnitudes(centered, nfft);
  const std::size_t half = nfft / 2;

  std::size_t k_star = 1;
  for (std::size_t k = 2; k <= half; ++k) {
    if (mags[k] > mags[k_star]) k_star = k;
  }
  if (!(mags[k_star] > 0.0)) {
    fail(ErrorCode::NoDominantPeak, "spectrum is empty after mean removal");
  }

  std::vector<double> sorted(mags.begin() + 1, mags.begin() + half + 1);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();
  const double median = m % 2 == 1
                            ? sorted[m / 2]
                            : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
  if (mags[k_star] < 2.0 * median) {
    fail(ErrorCode::NoDominantPeak,
         "top spectral line does not stand out from the noise floor");
  }

  // the resonant network can amplify a harmonic above the driving line, so
  // check whether the top bin sits on an integer multiple of a weaker but
  // significant line and report that line instead
  std::size_t k_fund = k_star;
  for (std::size_t div = 6; div >= 2; --div) {
    const std::size_t c = static_cast<std::size_t>(std::llround(
        static_cast<double>(k_star) / static_cast<double>(div)));
    if (c < 1) continue;
    const std::size_t lo = c > 1 ? c - 1 : 1;
    const std::size_t hi = std::min(half - 1, c + 1);
    if (lo > hi) continue;
    std::size_t cc = lo;
    for (std::size_t k = lo + 1; k <= hi; ++k) {
      if (mags[k] > mags[cc]) cc = k;
    }
    const double misfit = std::abs(static_cast<double>(cc * div) -
                                   static_cast<double>(k_star));
    if (misfit > static_cast<double>(div)) continue;
    if (mags[cc] >= 0.2 * mags[k_star]) {
      k_fund = cc;
      break;
    }
  }

  return static_cast<double>(k_fund) /
         (static_cast<double>(nfft) * h);
}

std::vector<double> resample_linear(const std::vector<double>& t_src,
                                    const std::vector<double>& v_src,
                                    const std::vector<double>& t_dst) {
  const std::size_t n = t_src.size();
  if (n == 0 || v_src.size() != n) {
    fail(ErrorCode::InvalidArgument, "resampling needs a non-empty source");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(t_src[i] > t_src[i - 1])) {
      fail(ErrorCode::InvalidArgument, "source time stamps must increase");
    }
  }

  std::vector<double> out(t_dst.size());
  for (std::size_t i = 0; i < t_dst.size(); ++i) {
    const double t = t_dst[i];
    if (t <= t_src.front()) {
      out[i] = v_src.front();
      continue;
    }
    if (t >= t_src.back()) {
      out[i] = v_src.back();
      continue;
    }
    const std::size_t hi =
        std::upper_bound(t_src.begin(), t_src.end(), t) - t_src.begin();
    const std::size_t lo = hi - 1;
    const double w = (t - t_src[lo]) / (t_src[hi] - t_src[lo]);
    out[i] = v_src[lo] + w * (v_src[hi] - v_src[lo]);
  }
  return out;
}

}  // namespace pumpsim
