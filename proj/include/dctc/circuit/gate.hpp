#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "dctc/core/matrix.hpp"

namespace dctc::circuit {

enum class GateKind { kH, kX, kRy, kRz, kSwap, kCRy, kCRz, kCH, kCNOT };

std::string_view to_string(GateKind kind);
/// Inverse of to_string; throws std::invalid_argument on unknown names.
GateKind gate_kind_from_string(std::string_view name);

std::size_t arity(GateKind kind);
bool is_rotation(GateKind kind);

/// A one- or two-wire gate. For controlled kinds the control is wires()[0].
class Gate {
 public:
  /// Validates arity, wire distinctness and angle presence/finiteness.
  Gate(GateKind kind, std::span<const std::size_t> wires, std::optional<double> angle = {});

  static Gate h(std::size_t q);
  static Gate x(std::size_t q);
  static Gate ry(std::size_t q, double theta);
  static Gate rz(std::size_t q, double theta);
  static Gate swap(std::size_t a, std::size_t b);
  static Gate cry(std::size_t control, std::size_t target, double theta);
  static Gate crz(std::size_t control, std::size_t target, double theta);
  static Gate ch(std::size_t control, std::size_t target);
  static Gate cnot(std::size_t control, std::size_t target);

  GateKind kind() const { return kind_; }
  std::span<const std::size_t> wires() const { return {wires_.data(), arity(kind_)}; }
  std::optional<double> angle() const { return angle_; }

  /// 2x2 or 4x4 unitary; for two-wire gates wires()[0] is the high index bit.
  core::ComplexMatrix matrix() const;

  /// Same gate acting on remapped wires (wire_map[old] = new).
  Gate remapped(std::span<const std::size_t> wire_map) const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::array<std::size_t, 2> wires, std::optional<double> angle);

  GateKind kind_;
  std::array<std::size_t, 2> wires_{};
  std::optional<double> angle_;
};

namespace gates {
core::ComplexMatrix hadamard();
core::ComplexMatrix pauli_x();
/// exp(-i theta Y / 2): |0> -> cos(theta/2)|0> + sin(theta/2)|1>.
core::ComplexMatrix ry(double theta);
/// exp(-i theta Z / 2) = diag(e^{-i theta/2}, e^{i theta/2}).
core::ComplexMatrix rz(double theta);
/// |0><0| (x) I + |1><1| (x) u.
core::ComplexMatrix controlled(const core::ComplexMatrix& u);
core::ComplexMatrix swap();
}  // namespace gates

}  // namespace dctc::circuit
