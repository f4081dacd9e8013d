#include "dctc/circuit/gate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dctc::circuit {

using core::Complex;
using core::ComplexMatrix;

namespace {

struct KindName {
  GateKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {GateKind::kH, "H"},       {GateKind::kX, "X"},       {GateKind::kRy, "Ry"},
    {GateKind::kRz, "Rz"},     {GateKind::kSwap, "SWAP"}, {GateKind::kCRy, "CRy"},
    {GateKind::kCRz, "CRz"},   {GateKind::kCH, "CH"},     {GateKind::kCNOT, "CNOT"},
};

}  // namespace

std::string_view to_string(GateKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "?";
}

GateKind gate_kind_from_string(std::string_view name) {
  for (const auto& kn : kKindNames) {
    if (kn.name == name) return kn.kind;
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

std::size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::kH:
    case GateKind::kX:
    case GateKind::kRy:
    case GateKind::kRz:
      return 1;
    default:
      return 2;
  }
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::kRy || kind == GateKind::kRz || kind == GateKind::kCRy ||
         kind == GateKind::kCRz;
}

Gate::Gate(GateKind kind, std::array<std::size_t, 2> wires, std::optional<double> angle)
    : kind_(kind), wires_(wires), angle_(angle) {
  if (arity(kind_) == 2 && wires_[0] == wires_[1]) {
    throw std::invalid_argument(std::string(to_string(kind_)) + ": wires must be distinct");
  }
  if (arity(kind_) == 1) wires_[1] = 0;
  if (is_rotation(kind_)) {
    if (!angle_ || !std::isfinite(*angle_)) {
      throw std::invalid_argument(std::string(to_string(kind_)) + ": requires a finite angle");
    }
  } else if (angle_) {
    throw std::invalid_argument(std::string(to_string(kind_)) + ": takes no angle");
  }
}

Gate::Gate(GateKind kind, std::span<const std::size_t> wires, std::optional<double> angle)
    : Gate(kind,
           [&] {
             if (wires.size() != arity(kind)) {
               throw std::invalid_argument(std::string(to_string(kind)) + ": expects " +
                                           std::to_string(arity(kind)) + " wire(s), got " +
                                           std::to_string(wires.size()));
             }
             return std::array<std::size_t, 2>{wires[0], wires.size() > 1 ? wires[1] : 0};
           }(),
           angle) {}

Gate Gate::h(std::size_t q) { return Gate(GateKind::kH, {q, 0}, {}); }
Gate Gate::x(std::size_t q) { return Gate(GateKind::kX, {q, 0}, {}); }
Gate Gate::ry(std::size_t q, double theta) { return Gate(GateKind::kRy, {q, 0}, theta); }
Gate Gate::rz(std::size_t q, double theta) { return Gate(GateKind::kRz, {q, 0}, theta); }
Gate Gate::swap(std::size_t a, std::size_t b) { return Gate(GateKind::kSwap, {a, b}, {}); }
Gate Gate::cry(std::size_t control, std::size_t target, double theta) {
  return Gate(GateKind::kCRy, {control, target}, theta);
}
Gate Gate::crz(std::size_t control, std::size_t target, double theta) {
  return Gate(GateKind::kCRz, {control, target}, theta);
}
Gate Gate::ch(std::size_t control, std::size_t target) {
  return Gate(GateKind::kCH, {control, target}, {});
}
Gate Gate::cnot(std::size_t control, std::size_t target) {
  return Gate(GateKind::kCNOT, {control, target}, {});
}

ComplexMatrix Gate::matrix() const {
  switch (kind_) {
    case GateKind::kH:
      return gates::hadamard();
    case GateKind::kX:
      return gates::pauli_x();
    case GateKind::kRy:
      return gates::ry(*angle_);
    case GateKind::kRz:
      return gates::rz(*angle_);
    case GateKind::kSwap:
      return gates::swap();
    case GateKind::kCRy:
      return gates::controlled(gates::ry(*angle_));
    case GateKind::kCRz:
      return gates::controlled(gates::rz(*angle_));
    case GateKind::kCH:
      return gates::controlled(gates::hadamard());
    case GateKind::kCNOT:
      return gates::controlled(gates::pauli_x());
  }
  throw std::logic_error("unhandled gate kind");
}

Gate Gate::remapped(std::span<const std::size_t> wire_map) const {
  std::array<std::size_t, 2> w = wires_;
  for (std::size_t i = 0; i < arity(kind_); ++i) w[i] = wire_map[wires_[i]];
  return Gate(kind_, w, angle_);
}

namespace gates {

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix(2, 2, {s, s, s, -s});
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }

ComplexMatrix ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return ComplexMatrix(2, 2, {c, -s, s, c});
}

ComplexMatrix rz(double theta) {
  return ComplexMatrix(2, 2, {std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2)});
}

ComplexMatrix controlled(const ComplexMatrix& u) {
  ComplexMatrix m(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) m(2 + r, 2 + c) = u(r, c);
  }
  return m;
}

ComplexMatrix swap() {
  ComplexMatrix m(4, 4);
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

}  // namespace gates
}  // namespace dctc::circuit
