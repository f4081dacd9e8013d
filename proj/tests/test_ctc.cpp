#include <doctest.h>

#include "dctc/circuit/builders.hpp"
#include "dctc/circuit/simulate.hpp"
#include "dctc/ctc/channel.hpp"
#include "dctc/ctc/readout.hpp"
#include "dctc/ctc/serialize.hpp"
#include "dctc/ctc/solver.hpp"
#include "oracles.hpp"

using namespace dctc;

namespace {

ctc::CtcChannel decoder_channel(std::size_t n, std::size_t k) {
  return ctc::kraus_from(circuit::build_decoder(n), circuit::padded_input(circuit::psi_k(n, k), n));
}

circuit::RegisterLayout single_layout() { return {1, 0, {0}, {1}}; }

}  // namespace

TEST_CASE("Kraus operators of the decoder are single-column and complete") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 0; k < oracle::dim(n); k += (n > 2 ? 3 : 1)) {
      const auto ch = decoder_channel(n, k);
      CHECK(ch.kraus().size() == oracle::dim(n));
      for (const auto& op : ch.kraus()) CHECK(op.support().size() <= 1);
      const auto id = core::ComplexMatrix::identity(ch.dimension());
      CHECK(ctc::kraus_completeness(ch).max_abs_diff(id) <= 1e-12);
    }
  }
}

TEST_CASE("Kraus channel equals full conjugation followed by the partial trace") {
  std::mt19937_64 rng(8);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto ch = decoder_channel(2, k);
    const auto u = oracle::decoder_unitary(2);
    const oracle::Vec in = oracle::padded(oracle::psi_k(2, k), 2);
    for (int t = 0; t < 5; ++t) {
      const auto omega = oracle::random_density(2, rng);
      const auto got = ctc::apply_channel(ch, oracle::density(2, omega));
      CHECK(oracle::max_diff(oracle::to_eigen(got.matrix()), oracle::channel(u, in, omega, 2)) < 1e-12);
    }
  }
  // Dense Kraus matrices against (<i| (x) I) U (|in> (x) I).
  const auto ch = decoder_channel(2, 1);
  const auto u = oracle::decoder_unitary(2);
  const oracle::Vec in = oracle::padded(oracle::psi_k(2, 1), 2);
  const oracle::Mat embed_in = oracle::kron(oracle::Mat(in), oracle::identity(2));
  for (std::size_t i = 0; i < 4; ++i) {
    const oracle::Mat bra = oracle::kron(oracle::Mat(oracle::basis(2, i).adjoint()), oracle::identity(2));
    CHECK(oracle::max_diff(oracle::to_eigen(ch.kraus()[i].dense()), bra * u * embed_in) < 1e-12);
  }
}

TEST_CASE("property: channel preserves trace and Hermiticity") {
  std::mt19937_64 rng(77);
  const auto cloner = circuit::build_cloner(2, 1);
  const auto ch_clone = ctc::kraus_from(cloner, circuit::padded_input(circuit::bloch_state(1.1, 4.0), 3));
  for (int t = 0; t < 10; ++t) {
    const auto& ch = t % 2 ? ch_clone : decoder_channel(3, static_cast<std::size_t>(t % 8));
    const std::size_t q = ch.ctc_qubits();
    const auto out = ctc::apply_channel(ch, oracle::density(q, oracle::random_density(q, rng)));
    CHECK(std::abs(out.matrix().trace() - 1.0) <= 1e-12);
    CHECK(out.matrix().is_hermitian(1e-12));
    CHECK(core::satisfies_psd_proxy(out));
  }
}

TEST_CASE("kraus_from validates its inputs") {
  const auto dec = circuit::build_decoder(2);
  CHECK_THROWS_AS(ctc::kraus_from(dec, core::PureState::basis(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(ctc::kraus_from(circuit::Circuit(4), core::PureState::basis(2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(ctc::kraus_from(dec, core::DensityMatrix::maximally_mixed(2)), std::invalid_argument);
  CHECK_NOTHROW(ctc::kraus_from(dec, core::DensityMatrix::basis(2, 0)));
}

TEST_CASE("measure-prepare form reproduces the channel") {
  std::mt19937_64 rng(4);
  const auto ch = decoder_channel(3, 5);
  const auto form = ctc::measure_prepare_form(ch);
  REQUIRE(form.has_value());
  for (std::size_t c = 0; c < form->dimension; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < form->dimension; ++r) col += form->transition_at(r, c);
    CHECK(col == doctest::Approx(1.0).epsilon(1e-12));
  }
  const auto omega = oracle::density(3, oracle::random_density(3, rng));
  const auto weights = omega.diagonal();
  CHECK(form->prepare(weights).max_abs_diff(ctc::apply_channel(ch, omega).matrix()) < 1e-12);
}

TEST_CASE("solver finds the decoder fixed point") {
  const auto ch = decoder_channel(2, 1);
  const auto r = ctc::solve_fixed_point(ch, core::DensityMatrix::maximally_mixed(2), 1e-10, 1000);
  CHECK(r.converged);
  CHECK(r.residual <= 1e-10);
  CHECK(r.trace.size() == r.iterations + 1);
  CHECK(r.sigma(1, 1).real() > 1 - 1e-8);
  CHECK(core::trace_distance(ctc::apply_channel(ch, r.sigma), r.sigma) == doctest::Approx(r.residual));

  // Starting on the fixed point converges after a single application.
  const auto fixed = ctc::solve_fixed_point(decoder_channel(2, 0), core::DensityMatrix::basis(2, 0));
  CHECK(fixed.converged);
  CHECK(fixed.iterations == 1);
  CHECK(fixed.residual == 0.0);
}

TEST_CASE("solver reports non-convergence without throwing") {
  const auto ch = decoder_channel(3, 5);
  const auto r = ctc::solve_fixed_point(ch, core::DensityMatrix::maximally_mixed(3), 1e-10, 5);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 5);
  CHECK(r.residual > 1e-10);
  CHECK_THROWS(ctc::solve_fixed_point(ch, core::DensityMatrix::maximally_mixed(3), 0.0, 5));
  CHECK_THROWS(ctc::solve_fixed_point(ch, core::DensityMatrix::maximally_mixed(2)));
}

TEST_CASE("oscillating channel falls back to Cesaro averaging") {
  // CTC-only X: N(omega) = X omega X never settles from |0>.
  circuit::Circuit flip(2, single_layout());
  flip.append(circuit::Gate::x(1));
  const auto ch = ctc::kraus_from(flip, core::PureState::basis(1, 0));
  CHECK_FALSE(ctc::measure_prepare_form(ch).has_value());
  const auto r = ctc::solve_fixed_point(ch, core::DensityMatrix::basis(1, 0), 1e-10, 1000);
  CHECK(r.used_averaging);
  CHECK(r.converged);
  CHECK(r.sigma(0, 0).real() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.residual <= 1e-10);
}

TEST_CASE("periodic measure-prepare chain uses averaged doubling") {
  // Copy the CTC bit into CR (measurement), then flip CTC: |c> -> |1-c>.
  circuit::Circuit c(2, single_layout());
  c.append(circuit::Gate::cnot(1, 0));
  c.append(circuit::Gate::x(1));
  const auto ch = ctc::kraus_from(c, core::PureState::basis(1, 0));
  const auto form = ctc::measure_prepare_form(ch);
  REQUIRE(form.has_value());
  const auto r = ctc::solve_by_doubling(ch, *form, core::DensityMatrix::basis(1, 0));
  CHECK(r.used_averaging);
  CHECK(r.converged);
  CHECK(r.sigma(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("doubling agrees with plain iteration") {
  for (std::size_t k : {0u, 3u, 6u}) {
    const auto ch = decoder_channel(3, k);
    const auto form = ctc::measure_prepare_form(ch);
    REQUIRE(form.has_value());
    const auto init = core::DensityMatrix::maximally_mixed(3);
    const auto fast = ctc::solve_by_doubling(ch, *form, init);
    const auto slow = ctc::solve_fixed_point(ch, init, 1e-13, 100000);
    CHECK(fast.converged);
    CHECK(slow.converged);
    CHECK(core::trace_distance(fast.sigma, slow.sigma) < 1e-9);
  }
}

TEST_CASE("probe: accelerated and plain agree; residuals within tolerance") {
  const auto cloner = circuit::build_cloner(1, 1);
  const auto ch = ctc::kraus_from(cloner, circuit::padded_input(circuit::bloch_state(0.0, 0.0), 2));
  const auto fast = ctc::probe_fixed_points(ch, {1e-10, 1000, true});
  const auto slow = ctc::probe_fixed_points(ch, {1e-10, 100000, false});
  CHECK(fast.starts == 5);
  CHECK(fast.fixed_points.size() == slow.fixed_points.size());
  for (const auto& f : fast.fixed_points) {
    CHECK(f.residual <= 1e-10);
    const bool matched = std::any_of(slow.fixed_points.begin(), slow.fixed_points.end(), [&](const auto& s) {
      return core::trace_distance(f.sigma, s.sigma) < 1e-6;
    });
    CHECK(matched);
  }
  for (const auto& s : slow.fixed_points) CHECK(s.residual <= 1e-10);
}

TEST_CASE("readout matches the joint density matrix") {
  std::mt19937_64 rng(31);
  const auto dec = circuit::build_decoder(2);
  const auto input = circuit::padded_input(circuit::psi_k(2, 2), 2);
  const auto sigma = oracle::random_density(2, rng);
  const auto probs = ctc::readout(dec, input, oracle::density(2, sigma));
  const oracle::Vec in = oracle::to_eigen(input.amplitudes());
  const oracle::Mat u = oracle::decoder_unitary(2);
  const oracle::Mat out = u * oracle::kron(oracle::Mat(in * in.adjoint()), sigma) * u.adjoint();
  const oracle::Mat cr = oracle::trace_trailing(out, 2, 2);
  double total = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(probs[i] == doctest::Approx(cr(i, i).real()).epsilon(1e-12));
    total += probs[i];
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("init spec parsing") {
  CHECK(ctc::parse_init_spec("mixed") == ctc::InitSpec::mixed());
  CHECK(ctc::parse_init_spec("plus") == ctc::InitSpec::plus());
  CHECK(ctc::parse_init_spec("basis:3") == ctc::InitSpec::basis(3));
  CHECK_THROWS_AS(ctc::parse_init_spec("basis:"), std::invalid_argument);
  CHECK_THROWS_AS(ctc::parse_init_spec("basis:2x"), std::invalid_argument);
  CHECK_THROWS_AS(ctc::parse_init_spec("random"), std::invalid_argument);
  CHECK(ctc::to_string(ctc::InitSpec::basis(7)) == "basis:7");
  const auto plus = ctc::make_initial_state(ctc::InitSpec::plus(), 2);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) CHECK(plus(r, c).real() == doctest::Approx(0.25));
  }
}

TEST_CASE("fixed point JSON") {
  const auto r = ctc::solve_fixed_point(decoder_channel(2, 0), core::DensityMatrix::basis(2, 0));
  const auto j = ctc::to_json(r);
  CHECK(j["converged"] == true);
  CHECK(j["iterations"] == 1);
  CHECK(j["sigma_diagonal"].size() == 4);
  CHECK(j["trace"].size() == 2);
}
