#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rbm/layout.hpp"

namespace rbm {

// Sufficient statistics matching every parameter group: means of indicators
// or of conditional probabilities, so every entry lies in [0, 1].
//   a: <delta(v_i = s)>      b: <p(h_mu = 1)>       c: <delta(l = m)>
//   w: <delta(v_i = s) p(h_mu = 1)>                 d: <delta(l = m) p(h_mu = 1)>
struct MomentStats {
  Layout layout;
  std::vector<double> a, b, c, w, d;
  double sample_count = 0.0;

  MomentStats() = default;
  explicit MomentStats(const Layout& l)
      : layout(l),
        a(l.a_size(), 0.0),
        b(l.b_size(), 0.0),
        c(l.c_size(), 0.0),
        w(l.w_size(), 0.0),
        d(l.d_size(), 0.0) {}
};

// Contiguous row-major view over labeled categorical samples.
struct BatchView {
  const std::uint8_t* states = nullptr;  // n_rows x n_visible
  const std::uint8_t* labels = nullptr;  // n_rows
  std::size_t n_rows = 0;
  int n_visible = 0;

  std::span<const std::uint8_t> row(std::size_t r) const {
    return {states + r * std::size_t(n_visible), std::size_t(n_visible)};
  }
};

}  // namespace rbm
