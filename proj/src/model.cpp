#include "rbm/model.hpp"

#include <cmath>
#include <stdexcept>

#include "rbm/mathutil.hpp"

namespace rbm {

namespace {

void check_state_dims(std::size_t n_visible, std::size_t n_hidden, int label,
                      const Layout& layout) {
  if (n_visible != std::size_t(layout.n_visible))
    throw std::invalid_argument("state/model mismatch: visible size " +
                                std::to_string(n_visible) + " vs layout " + layout.describe());
  if (n_hidden != std::size_t(layout.n_hidden))
    throw std::invalid_argument("state/model mismatch: hidden size " +
                                std::to_string(n_hidden) + " vs layout " + layout.describe());
  if (label < 0 || label >= layout.n_labels)
    throw std::invalid_argument("state/model mismatch: label " + std::to_string(label) +
                                " vs layout " + layout.describe());
}

void check_visible_dims(std::size_t n_visible, int label, const Layout& layout) {
  if (n_visible != std::size_t(layout.n_visible))
    throw std::invalid_argument("visible size " + std::to_string(n_visible) +
                                " does not match layout " + layout.describe());
  if (label < 0 || label >= layout.n_labels)
    throw std::invalid_argument("label " + std::to_string(label) +
                                " out of range for layout " + layout.describe());
}

void check_hidden_dims(std::size_t n_hidden, const Layout& layout) {
  if (n_hidden != std::size_t(layout.n_hidden))
    throw std::invalid_argument("hidden size " + std::to_string(n_hidden) +
                                " does not match layout " + layout.describe());
}

}  // namespace

bool ModelParams::all_finite() const {
  auto ok = [](const std::vector<double>& v) {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  };
  return ok(a) && ok(b) && ok(c) && ok(w) && ok(d);
}

void ModelParams::validate() const {
  layout.validate();
  if (a.size() != layout.a_size() || b.size() != layout.b_size() ||
      c.size() != layout.c_size() || w.size() != layout.w_size() ||
      d.size() != layout.d_size())
    throw std::invalid_argument("model arrays inconsistent with layout " + layout.describe());
  if (!all_finite()) throw std::invalid_argument("model contains non-finite parameters");
}

double energy(const ChainState& state, const ModelParams& params) {
  const Layout& l = params.layout;
  check_state_dims(state.visible.size(), state.hidden.size(), state.label, l);

  double e = 0.0;
  for (int i = 0; i < l.n_visible; ++i) e -= params.a_at(i, state.visible[i]);
  for (int mu = 0; mu < l.n_hidden; ++mu)
    if (state.hidden[mu]) e -= params.b[mu];
  for (int i = 0; i < l.n_visible; ++i) {
    const double* row = params.w_row(i, state.visible[i]);
    for (int mu = 0; mu < l.n_hidden; ++mu)
      if (state.hidden[mu]) e -= row[mu];
  }
  e -= params.c[state.label];
  const double* drow = params.d_row(state.label);
  for (int mu = 0; mu < l.n_hidden; ++mu)
    if (state.hidden[mu]) e -= drow[mu];
  return e;
}

void hidden_field(std::span<const std::uint8_t> visible, int label,
                  const ModelParams& params, std::span<double> field) {
  const Layout& l = params.layout;
  const int nh = l.n_hidden;
  for (int mu = 0; mu < nh; ++mu) field[mu] = params.b[mu];
  for (int i = 0; i < l.n_visible; ++i) {
    const double* row = params.w_row(i, visible[i]);
    for (int mu = 0; mu < nh; ++mu) field[mu] += row[mu];
  }
  const double* drow = params.d_row(label);
  for (int mu = 0; mu < nh; ++mu) field[mu] += drow[mu];
}

std::vector<double> hidden_activation(std::span<const std::uint8_t> visible, int label,
                                      const ModelParams& params) {
  check_visible_dims(visible.size(), label, params.layout);
  std::vector<double> p(params.layout.n_hidden);
  hidden_field(visible, label, params, p);
  for (double& x : p) x = logistic(x);
  return p;
}

std::vector<double> visible_activation(std::span<const std::uint8_t> hidden,
                                       const ModelParams& params) {
  const Layout& l = params.layout;
  check_hidden_dims(hidden.size(), l);
  std::vector<double> probs(l.a_size());
  for (int i = 0; i < l.n_visible; ++i) {
    double* site = probs.data() + std::size_t(i) * l.n_states;
    for (int s = 0; s < l.n_states; ++s) {
      double logit = params.a_at(i, s);
      const double* row = params.w_row(i, s);
      for (int mu = 0; mu < l.n_hidden; ++mu)
        if (hidden[mu]) logit += row[mu];
      site[s] = logit;
    }
    softmax({site, std::size_t(l.n_states)});
  }
  return probs;
}

std::vector<double> label_activation(std::span<const std::uint8_t> hidden,
                                     const ModelParams& params) {
  const Layout& l = params.layout;
  check_hidden_dims(hidden.size(), l);
  std::vector<double> probs(l.n_labels);
  for (int m = 0; m < l.n_labels; ++m) {
    double logit = params.c[m];
    const double* row = params.d_row(m);
    for (int mu = 0; mu < l.n_hidden; ++mu)
      if (hidden[mu]) logit += row[mu];
    probs[m] = logit;
  }
  softmax(probs);
  return probs;
}

double free_energy(std::span<const std::uint8_t> visible, int label,
                   const ModelParams& params) {
  const Layout& l = params.layout;
  check_visible_dims(visible.size(), label, params.layout);
  std::vector<double> field(l.n_hidden);
  hidden_field(visible, label, params, field);
  double f = 0.0;
  for (int i = 0; i < l.n_visible; ++i) f -= params.a_at(i, visible[i]);
  f -= params.c[label];
  for (int mu = 0; mu < l.n_hidden; ++mu) f -= softplus(field[mu]);
  return f;
}

}  // namespace rbm
