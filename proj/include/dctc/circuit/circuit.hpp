#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dctc/circuit/gate.hpp"

namespace dctc::circuit {

/// Wire assignment of the chronology-respecting (CR) and CTC registers.
/// For the decoder m == 0 and both registers have n wires; for the cloner
/// each register has n polar wires followed by m azimuthal wires.
struct RegisterLayout {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> cr_wires;
  std::vector<std::size_t> ctc_wires;

  std::size_t width() const { return n + m; }
  /// CTC register without its first qubit.
  std::span<const std::size_t> ctc_tail() const {
    return std::span<const std::size_t>(ctc_wires).subspan(1);
  }

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;
};

/// Half-open gate index range [begin, end) realizing one named operator.
struct Slice {
  std::string name;
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const Slice&, const Slice&) = default;
};

namespace slice_names {
inline constexpr std::string_view kSwap = "S";
inline constexpr std::string_view kRotate = "R";
inline constexpr std::string_view kHadamard = "T";
inline constexpr std::string_view kWeight = "W";
inline constexpr std::string_view kCopy = "C";
/// Everything after the swap: V = C W T R.
inline constexpr std::string_view kInteraction = "V";
inline constexpr std::string_view kPrepare = "prepare";
inline constexpr std::string_view kEncode = "encode";
}  // namespace slice_names

class Circuit {
 public:
  explicit Circuit(std::size_t qubit_count, std::optional<RegisterLayout> layout = {});

  /// Throws std::out_of_range if a wire is outside the register.
  void append(Gate gate);
  /// Opens a named slice at the current end; close_slice() ends it.
  void begin_slice(std::string name);
  void close_slice();
  /// Records a slice over an explicit, already-emitted range.
  void add_slice(Slice slice);

  std::size_t qubit_count() const { return qubit_count_; }
  std::span<const Gate> gates() const { return gates_; }
  const std::optional<RegisterLayout>& layout() const { return layout_; }
  std::span<const Slice> slices() const { return slices_; }

  /// Throws std::out_of_range for an unknown slice name.
  const Slice& slice(std::string_view name) const;
  std::span<const Gate> slice_gates(std::string_view name) const;

  /// Circuit over new_qubit_count wires with every gate moved to wire_map[old].
  Circuit remapped(std::span<const std::size_t> wire_map, std::size_t new_qubit_count) const;

 private:
  std::size_t qubit_count_;
  std::optional<RegisterLayout> layout_;
  std::vector<Gate> gates_;
  std::vector<Slice> slices_;
  std::optional<std::size_t> open_slice_;
};

std::size_t two_qubit_gate_count(const Circuit& c);

/// Freezes the CR register of a decoder/cloner circuit to the basis value
/// cr_value and returns the induced circuit on the CTC register alone (wires
/// renumbered to 0..width-1). Only gates whose CR wires act as controls are
/// admissible; a gate that targets a CR wire throws std::invalid_argument.
Circuit condition_on_cr(const Circuit& c, std::span<const Gate> gates, std::size_t cr_value);

}  // namespace dctc::circuit
