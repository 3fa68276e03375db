#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbm {

// Shape of a semi-supervised RBM: categorical visible sites, binary hidden
// units, one categorical label unit.
struct Layout {
  int n_visible = 0;
  int n_states = 0;  // q; 2 = binary data, >2 = Potts (21 protein, 5 RNA)
  int n_hidden = 0;
  int n_labels = 0;

  bool operator==(const Layout&) const = default;

  void validate() const {
    if (n_visible <= 0 || n_states <= 0 || n_hidden <= 0 || n_labels <= 0)
      throw std::invalid_argument("layout: all counts must be strictly positive");
    if (n_states < 2)
      throw std::invalid_argument("layout: n_states must be >= 2");
    // States and labels are stored as single bytes throughout.
    if (n_states > 255 || n_labels > 255)
      throw std::invalid_argument("layout: n_states and n_labels are limited to 255");
  }

  std::size_t a_size() const { return std::size_t(n_visible) * n_states; }
  std::size_t b_size() const { return std::size_t(n_hidden); }
  std::size_t c_size() const { return std::size_t(n_labels); }
  std::size_t w_size() const { return a_size() * n_hidden; }
  std::size_t d_size() const { return std::size_t(n_labels) * n_hidden; }

  std::string describe() const {
    return "Nv=" + std::to_string(n_visible) + " q=" + std::to_string(n_states) +
           " Nh=" + std::to_string(n_hidden) + " Nl=" + std::to_string(n_labels);
  }
};

}  // namespace rbm
