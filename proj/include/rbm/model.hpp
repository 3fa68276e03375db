#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rbm/layout.hpp"

namespace rbm {

// One Markov chain configuration.
struct ChainState {
  std::vector<std::uint8_t> visible;  // entries in [0, q)
  std::vector<std::uint8_t> hidden;   // entries in {0, 1}
  int label = 0;                      // in [0, n_labels)
};

// All Hamiltonian parameters. Binary data is the q = 2 special case with the
// convention that state 0 carries zero field and weight; the trainer keeps
// those entries pinned at zero so that state 1 carries the field.
//
// Immutable during any sampling pass: safe to share read-only across workers.
// Mutation happens only between passes by a single writer.
struct ModelParams {
  Layout layout;
  std::vector<double> a;  // visible fields, [i * q + s]
  std::vector<double> b;  // hidden fields, [mu]
  std::vector<double> c;  // label fields, [m]
  std::vector<double> w;  // weights, [(i * q + s) * n_hidden + mu]
  std::vector<double> d;  // label couplings, [m * n_hidden + mu]

  ModelParams() = default;
  explicit ModelParams(const Layout& l)
      : layout(l),
        a(l.a_size(), 0.0),
        b(l.b_size(), 0.0),
        c(l.c_size(), 0.0),
        w(l.w_size(), 0.0),
        d(l.d_size(), 0.0) {
    layout.validate();
  }

  double a_at(int i, int s) const { return a[std::size_t(i) * layout.n_states + s]; }
  double& a_at(int i, int s) { return a[std::size_t(i) * layout.n_states + s]; }

  const double* w_row(int i, int s) const {
    return w.data() + (std::size_t(i) * layout.n_states + s) * layout.n_hidden;
  }
  double* w_row(int i, int s) {
    return w.data() + (std::size_t(i) * layout.n_states + s) * layout.n_hidden;
  }

  const double* d_row(int m) const { return d.data() + std::size_t(m) * layout.n_hidden; }
  double* d_row(int m) { return d.data() + std::size_t(m) * layout.n_hidden; }

  bool all_finite() const;

  // Throws if the arrays are inconsistent with the layout.
  void validate() const;
};

// E = -sum_i a_{i,v_i} - sum_mu b_mu h_mu - sum_{i,mu} w_{i,v_i,mu} h_mu
//     - c_l - sum_mu d_{l,mu} h_mu
double energy(const ChainState& state, const ModelParams& params);

// Hidden input field I_mu = b_mu + sum_i w_{i,v_i,mu} + d_{l,mu}.
// The accumulation order (b, then sites ascending, then d) is fixed so that
// cached-field sampling paths reproduce it bit for bit.
void hidden_field(std::span<const std::uint8_t> visible, int label,
                  const ModelParams& params, std::span<double> field);

// p(h_mu = 1 | v, l) = logistic(I_mu).
std::vector<double> hidden_activation(std::span<const std::uint8_t> visible, int label,
                                      const ModelParams& params);

// Per-site conditional p(v_i = s | h), an n_visible x q row-major matrix.
std::vector<double> visible_activation(std::span<const std::uint8_t> hidden,
                                       const ModelParams& params);

// p(l = m | h), length n_labels.
std::vector<double> label_activation(std::span<const std::uint8_t> hidden,
                                     const ModelParams& params);

// F(v, l) = -log sum_h exp(-E(v, h, l))
//         = -sum_i a_{i,v_i} - c_l - sum_mu softplus(I_mu).
double free_energy(std::span<const std::uint8_t> visible, int label,
                   const ModelParams& params);

}  // namespace rbm
