#pragma once

#include <cmath>
#include <span>

namespace rbm {

// Fields grow large late in training, so every probability goes through one
// of these saturating forms.

inline double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double softplus(double x) {
  // log(1 + e^x) without overflow for large |x|.
  return std::fmax(x, 0.0) + std::log1p(std::exp(-std::fabs(x)));
}

// In-place max-shifted softmax.
inline void softmax(std::span<double> logits) {
  double mx = logits[0];
  for (double v : logits) mx = std::fmax(mx, v);
  double total = 0.0;
  for (double& v : logits) {
    v = std::exp(v - mx);
    total += v;
  }
  for (double& v : logits) v /= total;
}

// Index sampled from a normalized probability vector by CDF walk; the last
// index absorbs any rounding slack.
inline int sample_categorical(std::span<const double> probs, double u) {
  double acc = 0.0;
  const int n = int(probs.size());
  for (int s = 0; s < n; ++s) {
    acc += probs[s];
    if (u < acc) return s;
  }
  return n - 1;
}

}  // namespace rbm
