// Small reusable DSP kernels over Eigen dense types.
#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>

namespace msr::dsp {

template <typename Scalar>
using VectorX = Eigen::Vector<Scalar, Eigen::Dynamic>;
template <typename Scalar>
using VectorXc = Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic>;
template <typename Scalar>
using MatrixXc = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

// DFT analysis window, periodic form: w[n] = 0.5 (1 - cos(2 pi n / N)).
template <typename Scalar>
VectorX<Scalar> hann_periodic(Eigen::Index n) {
  VectorX<Scalar> w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    w[i] = Scalar(0.5) * (Scalar(1) - std::cos(Scalar(2) * Scalar(EIGEN_PI) * i / Scalar(n)));
  }
  return w;
}

// Tapering window, symmetric form: w[n] = 0.5 (1 - cos(2 pi n / (N-1))).
template <typename Scalar>
VectorX<Scalar> hann_symmetric(Eigen::Index n) {
  VectorX<Scalar> w(n);
  if (n == 1) {
    w[0] = Scalar(1);
    return w;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    w[i] = Scalar(0.5) *
           (Scalar(1) - std::cos(Scalar(2) * Scalar(EIGEN_PI) * i / Scalar(n - 1)));
  }
  return w;
}

// Forward DFT matrix: X[k] = sum_n x[n] exp(-j 2 pi k n / N).
template <typename Scalar>
MatrixXc<Scalar> dft_matrix(Eigen::Index n) {
  MatrixXc<Scalar> m(n, n);
  const Scalar step = Scalar(-2) * Scalar(EIGEN_PI) / Scalar(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      // reduce k*i mod n before the trig call to keep arguments small
      const auto prod = (static_cast<long long>(k) * i) % n;
      m(k, i) = std::polar(Scalar(1), step * Scalar(prod));
    }
  }
  return m;
}

// In-place unwrap so that successive differences lie in (-pi, pi].
template <typename Scalar>
void unwrap_inplace(VectorX<Scalar>& x) {
  const Scalar pi = Scalar(EIGEN_PI);
  const Scalar two_pi = Scalar(2) * pi;
  Scalar prev_raw = x.size() > 0 ? x[0] : Scalar(0);
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    Scalar d = x[i] - prev_raw;
    prev_raw = x[i];
    Scalar w = std::remainder(d, two_pi);
    if (w <= -pi) w += two_pi;
    x[i] = x[i - 1] + w;
  }
}

// Remove mean and best-fit line (least squares over uniform sample index).
template <typename Scalar>
void remove_mean_and_trend(VectorX<Scalar>& x) {
  const Eigen::Index n = x.size();
  if (n == 0) return;
  if (n == 1) {
    x[0] = Scalar(0);
    return;
  }
  const Scalar tmean = Scalar(n - 1) / Scalar(2);
  Scalar xmean = x.mean();
  Scalar num = Scalar(0), den = Scalar(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Scalar dt = Scalar(i) - tmean;
    num += dt * (x[i] - xmean);
    den += dt * dt;
  }
  const Scalar slope = num / den;
  for (Eigen::Index i = 0; i < n; ++i) {
    x[i] -= xmean + slope * (Scalar(i) - tmean);
  }
}

// Pearson correlation of two equal-length segments; 0 when either variance is 0.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar pearson(const Eigen::MatrixBase<DerivedA>& a,
                                  const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const auto n = a.size();
  if (n == 0) return Scalar(0);
  const Scalar ma = a.mean();
  const Scalar mb = b.mean();
  const Scalar cov = ((a.array() - ma) * (b.array() - mb)).sum();
  const Scalar va = (a.array() - ma).square().sum();
  const Scalar vb = (b.array() - mb).square().sum();
  if (!(va > Scalar(0)) || !(vb > Scalar(0))) return Scalar(0);
  return cov / std::sqrt(va * vb);
}

// Single-bin DFT magnitude at an arbitrary frequency (test oracle helper).
template <typename Derived>
typename Derived::Scalar dft_magnitude_at(const Eigen::MatrixBase<Derived>& x,
                                          typename Derived::Scalar freq_hz,
                                          typename Derived::Scalar rate_hz) {
  using Scalar = typename Derived::Scalar;
  std::complex<Scalar> acc(0, 0);
  const Scalar w = Scalar(-2) * Scalar(EIGEN_PI) * freq_hz / rate_hz;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    acc += x[i] * std::polar(Scalar(1), w * Scalar(i));
  }
  return std::abs(acc);
}

}  // namespace msr::dsp
