#pragma once

// Reference constructions used only by the tests. Everything here is built
// from dense Kronecker products and explicit index sums, independent of the
// library's in-place kernels.

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include "dctc/core/matrix.hpp"
#include "dctc/core/state.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

inline std::size_t dim(std::size_t q) { return std::size_t{1} << q; }

inline Mat identity(std::size_t q) { return Mat::Identity(dim(q), dim(q)); }

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Mat ket_bra(std::size_t d, std::size_t row, std::size_t col) {
  Mat m = Mat::Zero(d, d);
  m(row, col) = 1.0;
  return m;
}

inline Mat ry(double t) {
  Mat m(2, 2);
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}
inline Mat rz(double t) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -t / 2);
  m(1, 1) = std::polar(1.0, t / 2);
  return m;
}
inline Mat hadamard() {
  Mat m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}
inline Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Mat pauli_y() {
  Mat m(2, 2);
  m << 0, cd(0, -1), cd(0, 1), 0;
  return m;
}
inline Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// Single-qubit u on `wire` of a `total`-qubit register (wire 0 = MSB).
inline Mat embed1(const Mat& u, std::size_t wire, std::size_t total) {
  return kron(kron(identity(wire), u), identity(total - wire - 1));
}

inline Mat controlled(std::size_t c, std::size_t t, const Mat& u, std::size_t total) {
  return embed1(ket_bra(2, 0, 0), c, total) + embed1(ket_bra(2, 1, 1), c, total) * embed1(u, t, total);
}

/// (I + XX + YY + ZZ) / 2
inline Mat swap(std::size_t a, std::size_t b, std::size_t total) {
  Mat s = identity(total);
  for (const Mat& p : {pauli_x(), pauli_y(), pauli_z()}) s += embed1(p, a, total) * embed1(p, b, total);
  return s / 2.0;
}

/// Entry-wise definition of an operator on an arbitrary wire list:
/// full(r, c) = op(sub(r), sub(c)) when r and c agree off the listed wires.
inline Mat embed_wires(const Mat& op, const std::vector<std::size_t>& wires, std::size_t total) {
  const std::size_t d = dim(total);
  auto sub = [&](std::size_t idx) {
    std::size_t s = 0;
    for (std::size_t w : wires) s = (s << 1) | ((idx >> (total - 1 - w)) & 1);
    return s;
  };
  std::size_t mask = 0;
  for (std::size_t w : wires) mask |= std::size_t{1} << (total - 1 - w);
  Mat full = Mat::Zero(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if ((r & ~mask) == (c & ~mask)) full(r, c) = op(sub(r), sub(c));
    }
  }
  return full;
}

/// Trace over the leading `qa` qubits of a (qa + qb)-qubit operator.
inline Mat trace_leading(const Mat& rho, std::size_t qa, std::size_t qb) {
  const std::size_t da = dim(qa), db = dim(qb);
  Mat out = Mat::Zero(db, db);
  for (std::size_t k = 0; k < da; ++k) out += rho.block(k * db, k * db, db, db);
  return out;
}

/// Trace over the trailing `qb` qubits.
inline Mat trace_trailing(const Mat& rho, std::size_t qa, std::size_t qb) {
  const std::size_t da = dim(qa), db = dim(qb);
  Mat out = Mat::Zero(da, da);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) out(i, j) = rho.block(i * db, j * db, db, db).trace();
  }
  return out;
}

inline std::size_t popcount(std::size_t v) { return static_cast<std::size_t>(std::popcount(v)); }

// Decoder operators written as the basis sums that define them. CR occupies
// the leading n qubits, CTC the trailing n; CTC's first qubit is the target.
inline Mat op_swap(std::size_t n) {
  Mat s = identity(2 * n);
  for (std::size_t i = 0; i < n; ++i) s = swap(i, n + i, 2 * n) * s;
  return s;
}
inline Mat op_r(std::size_t n) {
  const std::size_t d = dim(n);
  Mat r = Mat::Zero(d * d, d * d);
  for (std::size_t j = 0; j < d; ++j) {
    r += kron(ket_bra(d, j, j), kron(ry(-2 * pi * double(j) / double(d)), identity(n - 1)));
  }
  return r;
}
inline Mat op_t(std::size_t n) {
  Mat hs = identity(0);
  for (std::size_t i = 1; i < n; ++i) hs = kron(hs, hadamard());
  return kron(identity(n), kron(ket_bra(2, 0, 0), identity(n - 1)) + kron(ket_bra(2, 1, 1), hs));
}
inline Mat op_w_ctc(std::size_t n) {
  const std::size_t dt = dim(n - 1);
  Mat w = Mat::Zero(2 * dt, 2 * dt);
  for (std::size_t j = 0; j < dt; ++j) w += kron(ry(double(popcount(j)) * pi / double(n)), ket_bra(dt, j, j));
  return w;
}
inline Mat op_w(std::size_t n) { return kron(identity(n), op_w_ctc(n)); }
inline Mat op_c(std::size_t n) {
  const std::size_t d = dim(n);
  Mat c = Mat::Zero(d * d, d * d);
  for (std::size_t j = 0; j < d; ++j) {
    Mat shift = Mat::Zero(d, d);
    for (std::size_t i = 0; i < d; ++i) shift(i ^ j, i) = 1.0;
    c += kron(ket_bra(d, j, j), shift);
  }
  return c;
}
inline Mat decoder_unitary(std::size_t n) { return op_c(n) * op_w(n) * op_t(n) * op_r(n) * op_swap(n); }

inline Vec psi_k(std::size_t n, std::size_t k) {
  const double a = pi * double(k) / double(dim(n));
  Vec v(2);
  v << std::cos(a), std::sin(a);
  return v;
}
inline Vec basis(std::size_t q, std::size_t i) {
  Vec v = Vec::Zero(dim(q));
  v(i) = 1.0;
  return v;
}
inline Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}
/// psi (x) |0>^(n-1)
inline Vec padded(const Vec& psi, std::size_t n) { return kron(psi, basis(n - 1, 0)); }

/// Tr_CR(U (|in><in| (x) omega) U^dagger) with CR leading.
inline Mat channel(const Mat& u, const Vec& in, const Mat& omega, std::size_t w) {
  const Mat joint = kron(Mat(in * in.adjoint()), omega);
  return trace_leading(u * joint * u.adjoint(), w, w);
}

inline Mat to_eigen(const dctc::core::ComplexMatrix& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}
inline Vec to_eigen(std::span<const dctc::core::Complex> v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i];
  return out;
}
inline dctc::core::ComplexMatrix from_eigen(const Mat& m) {
  dctc::core::ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}
inline std::vector<dctc::core::Complex> from_eigen(const Vec& v) { return {v.data(), v.data() + v.size()}; }

inline double max_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline Vec random_vector(std::size_t q, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(dim(q));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cd(g(rng), g(rng));
  return v.normalized();
}
inline Mat random_density(std::size_t q, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(dim(q), dim(q));
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = cd(g(rng), g(rng));
  Mat rho = a * a.adjoint();
  return rho / rho.trace();
}
inline Mat random_unitary(std::size_t q, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(dim(q), dim(q));
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = cd(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(a);
  return qr.householderQ();
}

/// Library density matrix from an Eigen matrix, Hermitized against round-off.
inline dctc::core::DensityMatrix density(std::size_t q, const Mat& m) {
  const Mat h = (m + m.adjoint()) / 2.0;
  return dctc::core::DensityMatrix(q, from_eigen(h));
}

}  // namespace oracle
