#include "pumpsim/displacement.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "pumpsim/errors.hpp"
#include "pumpsim/kernels.hpp"

namespace pumpsim {

namespace {

constexpr int kDegree = 5;
constexpr std::size_t kMinSamples = 7;
// fraction of V_max the fitted volume may dip inside the support
constexpr double kMonotoneSlack = 0.05;

double eval(const std::array<double, 6>& c, double theta) {
  double acc = 0.0;
  for (int k = kDegree; k >= 0; --k) acc = acc * theta + c[k];
  return acc;
}

// argmax of the fitted volume over [0, theta_last]: dense scan bracketing a
// golden-section polish
double find_support_end(const std::array<double, 6>& c, double theta_last) {
  constexpr std::size_t kScan = 4001;
  std::vector<double> th(kScan);
  std::vector<double> v(kScan);
  for (std::size_t i = 0; i < kScan; ++i) {
    th[i] = theta_last * static_cast<double>(i) / (kScan - 1);
  }
  kernels::poly_eval_array(c.data(), c.size(), th.data(), kScan, v.data());
  const std::size_t best =
      std::max_element(v.begin(), v.end()) - v.begin();
  double lo = th[best == 0 ? 0 : best - 1];
  double hi = th[std::min(best + 1, kScan - 1)];
  constexpr double kGolden = 0.3819660112501051;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) * kGolden;
    const double m2 = hi - (hi - lo) * kGolden;
    if (eval(c, m1) < eval(c, m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double RollerDisplacementCurve::volume_at(double theta_deg) const {
  return eval(coeffs_, theta_deg);
}

double RollerDisplacementCurve::dv_dtheta(double theta_deg) const {
  double acc = 0.0;
  for (int k = kDegree; k >= 1; --k) {
    acc = acc * theta_deg + static_cast<double>(k) * coeffs_[k];
  }
  return acc;
}

RollerDisplacementCurve fit_displacement(std::vector<DisplacementSample> samples) {
  for (const auto& s : samples) {
    if (!std::isfinite(s.angle_deg) || !std::isfinite(s.volume)) {
      fail(ErrorCode::InvalidArgument, "displacement sample is not finite");
    }
    if (s.angle_deg < 0.0 || s.angle_deg > 360.0) {
      fail(ErrorCode::InvalidArgument,
           "sample angle outside [0, 360] degrees: " +
               std::to_string(s.angle_deg));
    }
    if (s.volume < 0.0) {
      fail(ErrorCode::InvalidArgument, "sample volume must be non-negative");
    }
  }

  // repeated test runs are averaged per angle before fitting
  std::sort(samples.begin(), samples.end(),
            [](const DisplacementSample& a, const DisplacementSample& b) {
              return a.angle_deg < b.angle_deg;
            });
  std::vector<DisplacementSample> averaged;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    double acc = 0.0;
    while (j < samples.size() && samples[j].angle_deg == samples[i].angle_deg) {
      acc += samples[j].volume;
      ++j;
    }
    averaged.push_back(
        {samples[i].angle_deg, acc / static_cast<double>(j - i)});
    i = j;
  }

  if (averaged.size() < kMinSamples) {
    fail(ErrorCode::InsufficientSamples,
         "need at least 7 distinct angles for a degree-5 fit, got " +
             std::to_string(averaged.size()));
  }

  const double span = averaged.back().angle_deg;
  if (!(span > 0.0)) {
    fail(ErrorCode::InsufficientSamples, "angle span is empty");
  }

  // least squares on the scaled domain s = theta/span keeps the Vandermonde
  // matrix well conditioned; coefficients are mapped back afterwards
  const int n = static_cast<int>(averaged.size());
  Eigen::MatrixXd a(n, kDegree + 1);
  Eigen::VectorXd b(n);
  for (int r = 0; r < n; ++r) {
    const double s = averaged[r].angle_deg / span;
    double p = 1.0;
    for (int k = 0; k <= kDegree; ++k) {
      a(r, k) = p;
      p *= s;
    }
    b(r) = averaged[r].volume;
  }
  const Eigen::VectorXd scaled = a.colPivHouseholderQr().solve(b);

  RollerDisplacementCurve curve;
  curve.samples_ = std::move(averaged);
  double scale = 1.0;
  for (int k = 0; k <= kDegree; ++k) {
    curve.coeffs_[k] = scaled(k) / scale;
    scale *= span;
  }

  curve.support_end_deg_ = find_support_end(curve.coeffs_, span);
  curve.v_max_ = eval(curve.coeffs_, curve.support_end_deg_);

  if (curve.v_max_ > 0.0) {
    constexpr std::size_t kScan = 2001;
    std::vector<double> th(kScan);
    std::vector<double> v(kScan);
    for (std::size_t r = 0; r < kScan; ++r) {
      th[r] = curve.support_end_deg_ * static_cast<double>(r) / (kScan - 1);
    }
    kernels::poly_eval_array(curve.coeffs_.data(), curve.coeffs_.size(),
                             th.data(), kScan, v.data());
    double running_max = v[0];
    for (std::size_t r = 1; r < kScan; ++r) {
      running_max = std::max(running_max, v[r]);
      if (running_max - v[r] > kMonotoneSlack * curve.v_max_) {
        fail(ErrorCode::NonMonotoneData,
             "fitted volume dips more than 5% of V_max inside the support");
      }
    }
  }

  return curve;
}

double pulse_duration(const RollerDisplacementCurve& curve, MotorSpeed speed) {
  if (!(speed.omega() > 0.0)) {
    fail(ErrorCode::InvalidArgument, "pulse duration needs a positive speed");
  }
  return curve.support_end_deg() / speed.omega_deg();
}

std::vector<double> pulse_shape(const RollerDisplacementCurve& curve,
                                MotorSpeed speed, double h) {
  if (!(speed.omega() > 0.0)) {
    fail(ErrorCode::InvalidArgument, "pulse sampling needs a positive speed");
  }
  if (!(h > 0.0)) {
    fail(ErrorCode::InvalidArgument, "pulse sampling needs a positive step");
  }
  const double duration = pulse_duration(curve, speed);
  if (h > duration / 10.0) {
    fail(ErrorCode::InvalidStep,
         "step " + std::to_string(h) + " s resolves the " +
             std::to_string(duration) + " s pulse with fewer than 10 samples");
  }

  const double omega_deg = speed.omega_deg();
  const std::size_t count =
      static_cast<std::size_t>(std::floor(curve.support_end_deg() /
                                          (h * omega_deg))) + 1;

  std::array<double, 5> dcoeffs;
  for (int k = 1; k <= kDegree; ++k) {
    dcoeffs[k - 1] = static_cast<double>(k) * curve.coefficients()[k];
  }

  std::vector<double> theta(count);
  for (std::size_t k = 0; k < count; ++k) {
    theta[k] = static_cast<double>(k) * h * omega_deg;
  }
  std::vector<double> q(count);
  kernels::poly_eval_array(dcoeffs.data(), dcoeffs.size(), theta.data(), count,
                           q.data());
  for (double& v : q) {
    v *= omega_deg;
    // fit wiggle can point against the pulse direction; those samples are
    // dropped rather than renormalized
    if (v < 0.0) v = 0.0;
  }
  return q;
}

}  // namespace pumpsim
