#include <doctest.h>

#include <numbers>

#include "dctc/circuit/builders.hpp"
#include "dctc/circuit/circuit.hpp"
#include "dctc/circuit/gate.hpp"
#include "dctc/circuit/serialize.hpp"
#include "dctc/circuit/simulate.hpp"
#include "oracles.hpp"

using namespace dctc;
using circuit::Gate;
using circuit::GateKind;
using std::numbers::pi;

namespace {

oracle::Mat slice_unitary(const circuit::Circuit& c, std::string_view name) {
  return oracle::to_eigen(circuit::gates_unitary(c.qubit_count(), c.slice_gates(name)));
}

// Cloner rotation block: |k,l><k,l| (x) Ry(-pi k / 2^n) Rz(-2 pi l / 2^m) on the CTC head.
oracle::Mat cloner_r(std::size_t n, std::size_t m) {
  const std::size_t w = n + m;
  const std::size_t d = oracle::dim(w);
  oracle::Mat r = oracle::Mat::Zero(d * d, d * d);
  for (std::size_t k = 0; k < oracle::dim(n); ++k) {
    for (std::size_t l = 0; l < oracle::dim(m); ++l) {
      const std::size_t v = (k << m) | l;
      const oracle::Mat head = oracle::ry(-pi * double(k) / double(oracle::dim(n))) *
                               oracle::rz(-2 * pi * double(l) / double(oracle::dim(m)));
      r += oracle::kron(oracle::ket_bra(d, v, v), oracle::kron(head, oracle::identity(w - 1)));
    }
  }
  return r;
}

}  // namespace

TEST_CASE("gate matrices") {
  const auto ry = oracle::to_eigen(circuit::gates::ry(0.7));
  CHECK(oracle::max_diff(ry, oracle::ry(0.7)) < 1e-15);
  CHECK(oracle::max_diff(oracle::to_eigen(circuit::gates::rz(0.3)), oracle::rz(0.3)) < 1e-15);
  CHECK(oracle::max_diff(oracle::to_eigen(Gate::cry(0, 1, 0.4).matrix()), oracle::controlled(0, 1, oracle::ry(0.4), 2)) <
        1e-15);
  CHECK(oracle::max_diff(oracle::to_eigen(Gate::ch(0, 1).matrix()), oracle::controlled(0, 1, oracle::hadamard(), 2)) <
        1e-15);
  CHECK(oracle::max_diff(oracle::to_eigen(Gate::cnot(0, 1).matrix()), oracle::controlled(0, 1, oracle::pauli_x(), 2)) <
        1e-15);
  CHECK(oracle::max_diff(oracle::to_eigen(Gate::swap(0, 1).matrix()), oracle::swap(0, 1, 2)) < 1e-15);

  // Ry(theta)|0> = cos(theta/2)|0> + sin(theta/2)|1>
  CHECK(ry(1, 0).real() == doctest::Approx(std::sin(0.35)));
}

TEST_CASE("gate validation and names") {
  const std::size_t same[] = {1, 1};
  CHECK_THROWS_AS(Gate(GateKind::kCNOT, same), std::invalid_argument);
  const std::size_t one[] = {0};
  CHECK_THROWS_AS(Gate(GateKind::kCNOT, one), std::invalid_argument);
  CHECK_THROWS_AS(Gate(GateKind::kRy, one), std::invalid_argument);
  CHECK_THROWS_AS(Gate(GateKind::kH, one, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(Gate::ry(0, std::nan("")), std::invalid_argument);
  for (auto kind : {GateKind::kH, GateKind::kX, GateKind::kRy, GateKind::kRz, GateKind::kSwap, GateKind::kCRy,
                    GateKind::kCRz, GateKind::kCH, GateKind::kCNOT}) {
    CHECK(circuit::gate_kind_from_string(circuit::to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(circuit::gate_kind_from_string("Toffoli"), std::invalid_argument);
}

TEST_CASE("circuit rejects out-of-range wires and bad layouts") {
  circuit::Circuit c(2);
  CHECK_THROWS_AS(c.append(Gate::x(2)), std::out_of_range);
  CHECK_THROWS_AS(circuit::Circuit(2, circuit::RegisterLayout{1, 0, {0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(circuit::Circuit(2, circuit::RegisterLayout{1, 0, {0}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(c.slice("R"), std::out_of_range);
}

TEST_CASE("decoder two-qubit gate count is 5n-2") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(circuit::two_qubit_gate_count(circuit::build_decoder(n)) == 5 * n - 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      CHECK(circuit::two_qubit_gate_count(circuit::build_cloner(n, m)) == 5 * (n + m) - 2);
    }
  }
  CHECK_THROWS(circuit::build_decoder(0));
  CHECK_THROWS(circuit::build_cloner(2, 0));
}

TEST_CASE("decoder slices equal their basis-sum definitions") {
  for (std::size_t n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const auto dec = circuit::build_decoder(n);
    CHECK(oracle::max_diff(slice_unitary(dec, "S"), oracle::op_swap(n)) < 1e-12);
    CHECK(oracle::max_diff(slice_unitary(dec, "R"), oracle::op_r(n)) < 1e-12);
    CHECK(oracle::max_diff(slice_unitary(dec, "T"), oracle::op_t(n)) < 1e-12);
    CHECK(oracle::max_diff(slice_unitary(dec, "W"), oracle::op_w(n)) < 1e-12);
    CHECK(oracle::max_diff(slice_unitary(dec, "C"), oracle::op_c(n)) < 1e-12);
  }
}

TEST_CASE("n=2 decoder unitary equals C W T R S") {
  const auto u = oracle::to_eigen(circuit::circuit_unitary(circuit::build_decoder(2)));
  CHECK(u.rows() == 16);
  CHECK(oracle::max_diff(u, oracle::decoder_unitary(2)) < 1e-12);
  CHECK(oracle::max_diff(u * u.adjoint(), oracle::Mat::Identity(16, 16)) < 1e-12);
}

TEST_CASE("n=1 decoder has empty T and W") {
  const auto dec = circuit::build_decoder(1);
  CHECK(dec.slice("T").size() == 0);
  CHECK(dec.slice("W").size() == 0);
  CHECK(oracle::max_diff(oracle::to_eigen(circuit::circuit_unitary(dec)), oracle::op_c(1) * oracle::op_r(1) * oracle::op_swap(1)) <
        1e-12);
}

TEST_CASE("cloner equals its operator definition") {
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    CAPTURE(n);
    CAPTURE(m);
    const std::size_t w = n + m;
    const auto c = circuit::build_cloner(n, m);
    const oracle::Mat expected = oracle::op_c(w) * oracle::op_w(w) * oracle::op_t(w) * cloner_r(n, m) * oracle::op_swap(w);
    CHECK(oracle::max_diff(oracle::to_eigen(circuit::circuit_unitary(c)), expected) < 1e-12);
  }
}

TEST_CASE("property: built circuits are unitary") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(circuit::circuit_unitary(circuit::build_decoder(n)).is_unitary(1e-10));
  CHECK(circuit::circuit_unitary(circuit::build_cloner(2, 2)).is_unitary(1e-10));
  CHECK(circuit::circuit_unitary(circuit::build_cloner(3, 2)).is_unitary(1e-10));
}

TEST_CASE("encoder prepares psi_k on the encoding qubit") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 0; k < oracle::dim(n); ++k) {
      const auto enc = circuit::build_encoder(n, k);
      const auto out = circuit::apply_circuit(enc, core::PureState::basis(n + 1, 0));
      const oracle::Vec expected = oracle::kron(oracle::psi_k(n, k), oracle::basis(n, k));
      CHECK((oracle::to_eigen(out.amplitudes()) - expected).norm() < 1e-12);
    }
  }
  CHECK_THROWS_AS(circuit::build_encoder(2, 4), std::out_of_range);
}

TEST_CASE("psi_k and bloch_state") {
  const auto p = circuit::psi_k(2, 1);
  CHECK(p[0].real() == doctest::Approx(std::cos(pi / 4)));
  CHECK(p[1].real() == doctest::Approx(std::sin(pi / 4)));
  const auto b = circuit::bloch_state(pi / 2, pi / 2);
  CHECK(std::abs(b[1] - std::complex<double>(0, std::sqrt(0.5))) < 1e-15);
  CHECK_THROWS(circuit::bloch_state(-0.1, 0));
  CHECK_THROWS(circuit::bloch_state(0, 2 * pi));
  const auto a = circuit::cloner_outcome_angles(2, 2, (1 << 2) | 3);
  CHECK(a.theta == doctest::Approx(pi / 4));
  CHECK(a.phi == doctest::Approx(3 * pi / 2));
}

TEST_CASE("conditioning on CR reproduces the block of V") {
  const std::size_t n = 3;
  const auto dec = circuit::build_decoder(n);
  const oracle::Mat v = slice_unitary(dec, "V");
  const std::size_t d = oracle::dim(n);
  for (std::size_t j = 0; j < d; ++j) {
    const auto vj = circuit::condition_on_cr(dec, dec.slice_gates("V"), j);
    CHECK(vj.qubit_count() == n);
    CHECK(oracle::max_diff(oracle::to_eigen(circuit::circuit_unitary(vj)), v.block(j * d, j * d, d, d)) < 1e-12);
  }
  CHECK_THROWS_AS(circuit::condition_on_cr(dec, dec.slice_gates("S"), 0), std::invalid_argument);
  CHECK_THROWS_AS(circuit::condition_on_cr(dec, dec.slice_gates("V"), d), std::out_of_range);
}

TEST_CASE("density simulation agrees with the unitary") {
  std::mt19937_64 rng(42);
  const auto dec = circuit::build_decoder(2);
  const auto rho = oracle::random_density(4, rng);
  const auto out = circuit::apply_circuit(dec, oracle::density(4, rho));
  const auto u = oracle::decoder_unitary(2);
  CHECK(oracle::max_diff(oracle::to_eigen(out.matrix()), u * rho * u.adjoint()) < 1e-12);
  CHECK_THROWS(circuit::apply_circuit(dec, core::PureState::basis(3, 0)));
}

TEST_CASE("circuit JSON round trip") {
  const auto c = circuit::build_cloner(2, 1);
  const auto j = circuit::to_json(c);
  CHECK(j["qubit_count"] == 6);
  CHECK(j["gates"][0]["kind"] == "SWAP");
  const auto back = circuit::circuit_from_json(j);
  CHECK(back.qubit_count() == c.qubit_count());
  CHECK(std::equal(back.gates().begin(), back.gates().end(), c.gates().begin(), c.gates().end()));
  CHECK(back.layout() == c.layout());
  CHECK(std::equal(back.slices().begin(), back.slices().end(), c.slices().begin(), c.slices().end()));
  CHECK(circuit::to_json(back).dump() == j.dump());

  auto broken = j;
  broken["gates"][0]["kind"] = "nope";
  CHECK_THROWS(circuit::circuit_from_json(broken));
}
