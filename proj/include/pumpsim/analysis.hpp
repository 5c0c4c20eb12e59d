#pragma once

#include <vector>

namespace pumpsim {

// Reference and candidate series on one shared uniform time grid.
struct AlignedSeries {
  std::vector<double> t;
  std::vector<double> reference;
  std::vector<double> candidate;
};

// Full invariant check used at the comparison-report boundary: equal lengths
// of at least 8, finite values, uniform grid. The statistics below only
// require equal finite series of length >= 2 so they stay usable on the
// short hand-checkable examples.
void validate_aligned(const AlignedSeries& s);

enum class Normalizer { MeanOfReference, RangeOfReference };

double rmse(const AlignedSeries& s);

// RMSE over |mean(reference)| or the reference range. Throws
// DegenerateNormalizer when the chosen scale vanishes.
double nrmse(const AlignedSeries& s,
             Normalizer norm = Normalizer::MeanOfReference);

// Throws ZeroVariance when either series is constant.
double pearson(const AlignedSeries& s);

// Frequency of the dominant spectral line [Hz]. The mean is removed and the
// series zero-padded to a power of two. When the top bin is a harmonic of a
// weaker but significant line (at least 20% of the top magnitude, aligned
// with an integer divisor of the top bin), the line's frequency is returned
// instead, so strongly resonant systems still report the driving rate.
// Throws NoDominantPeak when the top bin is under twice the median bin.
double fundamental_frequency(const std::vector<double>& values, double h);

// Linear interpolation of (t_src, v_src) onto t_dst, clamped at the ends.
std::vector<double> resample_linear(const std::vector<double>& t_src,
                                    const std::vector<double>& v_src,
                                    const std::vector<double>& t_dst);

}  // namespace pumpsim
