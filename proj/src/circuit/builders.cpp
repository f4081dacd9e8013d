#include "dctc/circuit/builders.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dctc::circuit {

using core::Complex;
using core::PureState;
using std::numbers::pi;

namespace {

void require_width(std::size_t value, const char* what) {
  if (value == 0) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

double register_size(std::size_t bits) { return std::ldexp(1.0, static_cast<int>(bits)); }

/// Bit value of wire position i in a register of the given width (MSB first).
std::size_t bit_value(std::size_t width, std::size_t i) { return std::size_t{1} << (width - 1 - i); }

RegisterLayout make_layout(std::size_t n, std::size_t m) {
  RegisterLayout l{n, m, {}, {}};
  for (std::size_t i = 0; i < n + m; ++i) {
    l.cr_wires.push_back(i);
    l.ctc_wires.push_back(n + m + i);
  }
  return l;
}

// T, W and C are shared between the decoder and the cloner.
void append_tail(Circuit& c, const RegisterLayout& l) {
  const std::size_t width = l.width();
  const std::size_t head = l.ctc_wires[0];

  c.begin_slice(std::string(slice_names::kHadamard));
  for (auto w : l.ctc_tail()) c.append(Gate::ch(head, w));
  c.close_slice();

  c.begin_slice(std::string(slice_names::kWeight));
  for (auto w : l.ctc_tail()) c.append(Gate::cry(w, head, pi / static_cast<double>(width)));
  c.close_slice();

  c.begin_slice(std::string(slice_names::kCopy));
  for (std::size_t i = 0; i < width; ++i) c.append(Gate::cnot(l.cr_wires[i], l.ctc_wires[i]));
  c.close_slice();
}

void append_swap(Circuit& c, const RegisterLayout& l) {
  c.begin_slice(std::string(slice_names::kSwap));
  for (std::size_t i = 0; i < l.width(); ++i) c.append(Gate::swap(l.cr_wires[i], l.ctc_wires[i]));
  c.close_slice();
}

}  // namespace

PureState psi_k(std::size_t n, std::size_t k) {
  require_width(n, "register width n");
  if (n >= 63 || k >= (std::size_t{1} << n)) {
    throw std::out_of_range("psi_k: k=" + std::to_string(k) + " outside [0, 2^" +
                            std::to_string(n) + ")");
  }
  const double angle = pi * static_cast<double>(k) / register_size(n);
  return PureState(1, {std::cos(angle), std::sin(angle)});
}

PureState bloch_state(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= pi)) throw std::out_of_range("bloch_state: theta outside [0, pi]");
  if (!(phi >= 0.0 && phi < 2 * pi)) throw std::out_of_range("bloch_state: phi outside [0, 2pi)");
  return PureState(1, {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
}

PureState padded_input(const PureState& psi, std::size_t width) {
  require_width(width, "register width");
  if (width == 1) return psi;
  return core::tensor(psi, PureState::basis(width - 1, 0));
}

Circuit build_encoder(std::size_t n, std::size_t k) {
  require_width(n, "register width n");
  if (n >= 63 || k >= (std::size_t{1} << n)) {
    throw std::out_of_range("build_encoder: k outside [0, 2^n)");
  }
  Circuit c(n + 1);
  c.begin_slice(std::string(slice_names::kPrepare));
  for (std::size_t i = 0; i < n; ++i) {
    if (k & bit_value(n, i)) c.append(Gate::x(1 + i));
  }
  c.close_slice();

  c.begin_slice(std::string(slice_names::kEncode));
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2 * pi * static_cast<double>(bit_value(n, i)) / register_size(n);
    c.append(Gate::cry(1 + i, 0, angle));
  }
  c.close_slice();
  return c;
}

Circuit build_decoder(std::size_t n) {
  require_width(n, "register width n");
  const auto layout = make_layout(n, 0);
  Circuit c(2 * n, layout);

  append_swap(c, layout);
  const std::size_t v_begin = c.gates().size();

  c.begin_slice(std::string(slice_names::kRotate));
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = -2 * pi * static_cast<double>(bit_value(n, i)) / register_size(n);
    c.append(Gate::cry(layout.cr_wires[i], layout.ctc_wires[0], angle));
  }
  c.close_slice();

  append_tail(c, layout);
  c.add_slice({std::string(slice_names::kInteraction), v_begin, c.gates().size()});
  return c;
}

Circuit build_cloner(std::size_t n, std::size_t m) {
  require_width(n, "polar width n");
  require_width(m, "azimuthal width m");
  const auto layout = make_layout(n, m);
  Circuit c(2 * (n + m), layout);

  append_swap(c, layout);
  const std::size_t v_begin = c.gates().size();
  const std::size_t head = layout.ctc_wires[0];

  c.begin_slice(std::string(slice_names::kRotate));
  for (std::size_t i = 0; i < m; ++i) {
    const double angle = -2 * pi * static_cast<double>(bit_value(m, i)) / register_size(m);
    c.append(Gate::crz(layout.cr_wires[n + i], head, angle));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = -pi * static_cast<double>(bit_value(n, i)) / register_size(n);
    c.append(Gate::cry(layout.cr_wires[i], head, angle));
  }
  c.close_slice();

  append_tail(c, layout);
  c.add_slice({std::string(slice_names::kInteraction), v_begin, c.gates().size()});
  return c;
}

BlochAngles cloner_outcome_angles(std::size_t n, std::size_t m, std::size_t outcome) {
  const std::size_t k = outcome >> m;
  const std::size_t l = outcome & ((std::size_t{1} << m) - 1);
  if (k >= (std::size_t{1} << n)) throw std::out_of_range("cloner outcome out of range");
  return {pi * static_cast<double>(k) / register_size(n),
          2 * pi * static_cast<double>(l) / register_size(m)};
}

}  // namespace dctc::circuit
