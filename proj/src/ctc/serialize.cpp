#include "dctc/ctc/serialize.hpp"

namespace dctc::ctc {

Json to_json(const FixedPointResult& r) {
  Json out;
  out["residual"] = r.residual;
  out["iterations"] = r.iterations;
  out["converged"] = r.converged;
  out["used_averaging"] = r.used_averaging;
  out["sigma_diagonal"] = r.sigma.diagonal();
  out["trace"] = r.trace;
  return out;
}

Json to_json(const core::ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dctc::ctc
