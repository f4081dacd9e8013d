#include "dctc/core/state.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace dctc::core {
namespace {

std::size_t checked_dimension(std::size_t qubits) {
  if (qubits > kMaxQubits) {
    throw std::invalid_argument("register of " + std::to_string(qubits) +
                                " qubits exceeds the " + std::to_string(kMaxQubits) +
                                "-qubit limit");
  }
  return dimension_of(qubits);
}

std::size_t bit_position(std::size_t total_qubits, std::size_t wire) {
  return total_qubits - 1 - wire;
}

void check_wires(std::size_t total_qubits, std::span<const std::size_t> wires) {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] >= total_qubits) {
      throw std::out_of_range("wire " + std::to_string(wires[i]) + " out of range for " +
                              std::to_string(total_qubits) + " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (wires[i] == wires[j]) {
        throw std::invalid_argument("duplicate wire " + std::to_string(wires[i]));
      }
    }
  }
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

}  // namespace

PureState::PureState(std::size_t qubit_count, std::vector<Complex> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != checked_dimension(qubit_count_)) {
    throw std::invalid_argument("PureState: expected " + std::to_string(dimension_of(qubit_count_)) +
                                " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  double norm = 0.0;
  for (const auto& a : amplitudes_) norm += std::norm(a);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("PureState: squared norm " + std::to_string(norm) + " is not 1");
  }
}

PureState PureState::basis(std::size_t qubit_count, std::size_t index) {
  const std::size_t dim = checked_dimension(qubit_count);
  if (index >= dim) {
    throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return PureState(qubit_count, std::move(amps));
}

Complex PureState::inner(const PureState& other) const {
  if (other.dimension() != dimension()) throw std::invalid_argument("PureState: dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) acc += std::conj(amplitudes_[i]) * other[i];
  return acc;
}

double PureState::probability(std::size_t index) const { return std::norm(amplitudes_.at(index)); }

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<Complex> amps(a.dimension() * b.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < b.dimension(); ++j) amps[i * b.dimension() + j] = a[i] * b[j];
  }
  return PureState(a.qubit_count() + b.qubit_count(), std::move(amps));
}

DensityMatrix::DensityMatrix(std::size_t qubit_count, ComplexMatrix matrix)
    : qubit_count_(qubit_count), matrix_(std::move(matrix)) {
  const std::size_t dim = checked_dimension(qubit_count_);
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("DensityMatrix: expected side " + std::to_string(dim));
  }
  if (!matrix_.is_hermitian(kHermitianTolerance)) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (matrix_(i, i).real() < -kPsdTolerance) {
      throw std::invalid_argument("DensityMatrix: negative diagonal entry at " + std::to_string(i));
    }
  }
}

DensityMatrix::DensityMatrix(const PureState& psi)
    : DensityMatrix(psi.qubit_count(), ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes())) {}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t qubit_count) {
  const std::size_t dim = checked_dimension(qubit_count);
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix(qubit_count, std::move(m));
}

DensityMatrix DensityMatrix::basis(std::size_t qubit_count, std::size_t index) {
  return DensityMatrix(PureState::basis(qubit_count, index));
}

std::vector<double> DensityMatrix::diagonal() const {
  std::vector<double> d(dimension());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = matrix_(i, i).real();
  return d;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(a.qubit_count() + b.qubit_count(), kron(a.matrix(), b.matrix()));
}

ComplexMatrix hermitize(ComplexMatrix m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    m(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < m.cols(); ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m(r, c) = avg;
      m(c, r) = std::conj(avg);
    }
  }
  return m;
}

bool satisfies_psd_proxy(const DensityMatrix& rho, std::size_t samples) {
  for (double d : rho.diagonal()) {
    if (d < -kPsdTolerance) return false;
  }
  std::mt19937_64 rng(0x5eedULL + rho.dimension());
  std::normal_distribution<double> gauss;
  std::vector<Complex> v(rho.dimension());
  for (std::size_t s = 0; s < samples; ++s) {
    double norm = 0.0;
    for (auto& z : v) {
      z = {gauss(rng), gauss(rng)};
      norm += std::norm(z);
    }
    for (auto& z : v) z /= std::sqrt(norm);
    const auto rv = rho.matrix().apply(v);
    Complex q = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) q += std::conj(v[i]) * rv[i];
    if (q.real() < -kPsdTolerance) return false;
  }
  return true;
}

void apply_local_operator(std::span<Complex> amplitudes, std::size_t total_qubits,
                          std::span<const std::size_t> wires, const ComplexMatrix& op) {
  check_wires(total_qubits, wires);
  if (amplitudes.size() != dimension_of(total_qubits)) {
    throw std::invalid_argument("apply_local_operator: amplitude count does not match register");
  }
  const std::size_t local_dim = dimension_of(wires.size());
  if (op.rows() != local_dim || op.cols() != local_dim) {
    throw std::invalid_argument("apply_local_operator: operator side does not match wire count");
  }

  if (wires.size() == 1) {
    const std::size_t mask = std::size_t{1} << bit_position(total_qubits, wires[0]);
    const Complex u00 = op(0, 0), u01 = op(0, 1), u10 = op(1, 0), u11 = op(1, 1);
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
      if (i & mask) continue;
      const Complex a0 = amplitudes[i];
      const Complex a1 = amplitudes[i | mask];
      amplitudes[i] = u00 * a0 + u01 * a1;
      amplitudes[i | mask] = u10 * a0 + u11 * a1;
    }
    return;
  }

  if (wires.size() == 2) {
    const std::size_t hi = std::size_t{1} << bit_position(total_qubits, wires[0]);
    const std::size_t lo = std::size_t{1} << bit_position(total_qubits, wires[1]);
    const std::size_t offsets[4] = {0, lo, hi, hi | lo};
    Complex in[4];
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
      if (i & (hi | lo)) continue;
      for (std::size_t a = 0; a < 4; ++a) in[a] = amplitudes[i | offsets[a]];
      for (std::size_t r = 0; r < 4; ++r) {
        Complex acc = 0.0;
        for (std::size_t c = 0; c < 4; ++c) acc += op(r, c) * in[c];
        amplitudes[i | offsets[r]] = acc;
      }
    }
    return;
  }

  throw std::invalid_argument("apply_local_operator: only 1- and 2-wire operators are supported");
}

PureState apply_operator(const PureState& psi, std::span<const std::size_t> wires,
                         const ComplexMatrix& op) {
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  apply_local_operator(amps, psi.qubit_count(), wires, op);
  return PureState(psi.qubit_count(), std::move(amps));
}

DensityMatrix apply_operator(const DensityMatrix& rho, std::span<const std::size_t> wires,
                             const ComplexMatrix& op) {
  const std::size_t n = rho.qubit_count();
  check_wires(n, wires);
  // Row-major storage is a 2n-wire vector: row wires first, column wires after.
  ComplexMatrix m = rho.matrix();
  std::vector<std::size_t> col_wires(wires.begin(), wires.end());
  for (auto& w : col_wires) w += n;
  apply_local_operator(m.entries(), 2 * n, wires, op);
  apply_local_operator(m.entries(), 2 * n, col_wires, op.conjugate());
  return DensityMatrix(n, hermitize(std::move(m)));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const std::size_t n = rho.qubit_count();
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  check_wires(n, keep);

  std::vector<bool> kept(n, false);
  for (auto w : keep) kept[w] = true;
  std::vector<std::size_t> traced;
  for (std::size_t w = 0; w < n; ++w) {
    if (!kept[w]) traced.push_back(w);
  }

  // Full-register bit patterns for each value of the kept / traced sub-registers.
  auto patterns = [n](std::span<const std::size_t> wires) {
    std::vector<std::size_t> out(dimension_of(wires.size()));
    for (std::size_t v = 0; v < out.size(); ++v) {
      std::size_t full = 0;
      for (std::size_t b = 0; b < wires.size(); ++b) {
        if (v & (std::size_t{1} << (wires.size() - 1 - b))) {
          full |= std::size_t{1} << bit_position(n, wires[b]);
        }
      }
      out[v] = full;
    }
    return out;
  };
  const auto keep_pat = patterns(keep);
  const auto trace_pat = patterns(traced);

  ComplexMatrix out(keep_pat.size(), keep_pat.size());
  for (std::size_t r = 0; r < keep_pat.size(); ++r) {
    for (std::size_t c = 0; c < keep_pat.size(); ++c) {
      Complex acc = 0.0;
      for (auto t : trace_pat) acc += rho(keep_pat[r] | t, keep_pat[c] | t);
      out(r, c) = acc;
    }
  }
  return DensityMatrix(keep.size(), hermitize(std::move(out)));
}

double fidelity(const PureState& psi, const DensityMatrix& rho) {
  if (psi.dimension() != rho.dimension()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const auto rv = rho.matrix().apply(psi.amplitudes());
  Complex f = 0.0;
  for (std::size_t i = 0; i < rv.size(); ++i) f += std::conj(psi[i]) * rv[i];
  return std::clamp(f.real(), 0.0, 1.0);
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(hermitize(a - b)),
                                                               Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return std::clamp(trace_distance(a.matrix(), b.matrix()), 0.0, 1.0);
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("hermitian_eigen: matrix is not square");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m));
  HermitianEigen out{std::vector<double>(m.rows()), ComplexMatrix(m.rows(), m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out.values[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out.vectors(r, i) = solver.eigenvectors()(static_cast<Eigen::Index>(r),
                                                static_cast<Eigen::Index>(i));
    }
  }
  return out;
}

}  // namespace dctc::core
