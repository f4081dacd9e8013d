#include "dctc/circuit/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace dctc::circuit {

Circuit::Circuit(std::size_t qubit_count, std::optional<RegisterLayout> layout)
    : qubit_count_(qubit_count), layout_(std::move(layout)) {
  if (!layout_) return;
  const auto& l = *layout_;
  if (l.cr_wires.size() != l.width() || l.ctc_wires.size() != l.width()) {
    throw std::invalid_argument("RegisterLayout: CR and CTC registers must each have n+m wires");
  }
  std::vector<bool> seen(qubit_count_, false);
  for (auto w : l.cr_wires) {
    if (w >= qubit_count_ || seen[w]) throw std::invalid_argument("RegisterLayout: bad CR wire");
    seen[w] = true;
  }
  for (auto w : l.ctc_wires) {
    if (w >= qubit_count_ || seen[w]) throw std::invalid_argument("RegisterLayout: bad CTC wire");
    seen[w] = true;
  }
}

void Circuit::append(Gate gate) {
  for (auto w : gate.wires()) {
    if (w >= qubit_count_) {
      throw std::out_of_range("gate wire " + std::to_string(w) + " outside a " +
                              std::to_string(qubit_count_) + "-qubit circuit");
    }
  }
  gates_.push_back(gate);
}

void Circuit::begin_slice(std::string name) {
  if (open_slice_) throw std::logic_error("slice '" + slices_[*open_slice_].name + "' still open");
  slices_.push_back({std::move(name), gates_.size(), gates_.size()});
  open_slice_ = slices_.size() - 1;
}

void Circuit::close_slice() {
  if (!open_slice_) throw std::logic_error("no open slice");
  slices_[*open_slice_].end = gates_.size();
  open_slice_.reset();
}

void Circuit::add_slice(Slice slice) {
  if (slice.begin > slice.end || slice.end > gates_.size()) {
    throw std::out_of_range("slice '" + slice.name + "' exceeds the gate list");
  }
  slices_.push_back(std::move(slice));
}

const Slice& Circuit::slice(std::string_view name) const {
  auto it = std::find_if(slices_.begin(), slices_.end(),
                         [&](const Slice& s) { return s.name == name; });
  if (it == slices_.end()) throw std::out_of_range("no slice named '" + std::string(name) + "'");
  return *it;
}

std::span<const Gate> Circuit::slice_gates(std::string_view name) const {
  const auto& s = slice(name);
  return std::span<const Gate>(gates_).subspan(s.begin, s.size());
}

Circuit Circuit::remapped(std::span<const std::size_t> wire_map, std::size_t new_qubit_count) const {
  if (wire_map.size() != qubit_count_) {
    throw std::invalid_argument("remapped: wire map must cover every wire");
  }
  std::optional<RegisterLayout> layout;
  if (layout_) {
    layout = *layout_;
    for (auto& w : layout->cr_wires) w = wire_map[w];
    for (auto& w : layout->ctc_wires) w = wire_map[w];
  }
  Circuit out(new_qubit_count, std::move(layout));
  for (const auto& g : gates_) out.append(g.remapped(wire_map));
  for (const auto& s : slices_) out.add_slice(s);
  return out;
}

std::size_t two_qubit_gate_count(const Circuit& c) {
  return static_cast<std::size_t>(std::count_if(
      c.gates().begin(), c.gates().end(), [](const Gate& g) { return g.wires().size() == 2; }));
}

Circuit condition_on_cr(const Circuit& c, std::span<const Gate> gates, std::size_t cr_value) {
  if (!c.layout()) throw std::invalid_argument("condition_on_cr: circuit has no register layout");
  const auto& layout = *c.layout();
  const std::size_t width = layout.width();
  if (cr_value >= (std::size_t{1} << width)) {
    throw std::out_of_range("condition_on_cr: CR value out of range");
  }

  constexpr std::size_t kNotCtc = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ctc_index(c.qubit_count(), kNotCtc);
  std::vector<int> cr_bit(c.qubit_count(), -1);
  for (std::size_t i = 0; i < width; ++i) {
    ctc_index[layout.ctc_wires[i]] = i;
    cr_bit[layout.cr_wires[i]] = static_cast<int>((cr_value >> (width - 1 - i)) & 1U);
  }

  Circuit out(width);
  for (const auto& g : gates) {
    const auto wires = g.wires();
    const bool touches_cr = std::any_of(wires.begin(), wires.end(),
                                        [&](std::size_t w) { return cr_bit[w] >= 0; });
    if (!touches_cr) {
      std::vector<std::size_t> mapped;
      for (auto w : wires) {
        if (ctc_index[w] == kNotCtc) {
          throw std::invalid_argument("condition_on_cr: gate touches a wire outside CR and CTC");
        }
        mapped.push_back(ctc_index[w]);
      }
      out.append(Gate(g.kind(), mapped, g.angle()));
      continue;
    }
    const bool controlled = wires.size() == 2 && g.kind() != GateKind::kSwap;
    if (!controlled || cr_bit[wires[1]] >= 0 || ctc_index[wires[1]] == kNotCtc) {
      throw std::invalid_argument("condition_on_cr: " + std::string(to_string(g.kind())) +
                                  " acts on a CR wire as target");
    }
    if (cr_bit[wires[0]] == 0) continue;
    const std::size_t target = ctc_index[wires[1]];
    switch (g.kind()) {
      case GateKind::kCRy:
        out.append(Gate::ry(target, *g.angle()));
        break;
      case GateKind::kCRz:
        out.append(Gate::rz(target, *g.angle()));
        break;
      case GateKind::kCH:
        out.append(Gate::h(target));
        break;
      case GateKind::kCNOT:
        out.append(Gate::x(target));
        break;
      default:
        throw std::logic_error("condition_on_cr: unexpected controlled kind");
    }
  }
  return out;
}

}  // namespace dctc::circuit
