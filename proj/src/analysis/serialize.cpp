#include "dctc/analysis/serialize.hpp"

#include "dctc/ctc/serialize.hpp"

namespace dctc::analysis {

Json to_json(const OverlapReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["j"] = r.j;
  j["theta_kj"] = r.theta_kj;
  j["popcount"] = r.popcount;
  j["alpha"] = r.alpha ? Json(*r.alpha) : Json(nullptr);
  j["closed_form"] = r.closed_form;
  j["numeric"] = Json::array({r.numeric.real(), r.numeric.imag()});
  j["agree"] = r.agree;
  return j;
}

Json to_json(const std::vector<OverlapReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

Json to_json(const DecodeResult& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["distribution"] = r.distribution;
  j["decoded"] = r.decoded;
  j["success_prob"] = r.success_prob;
  j["fixed_point"] = ctc::to_json(r.fixed_point);
  return j;
}

Json to_json(const CloneResult& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["input"] = {{"theta", r.theta}, {"phi", r.phi}};
  j["min_fidelity"] = r.min_fidelity;
  j["max_fidelity"] = r.max_fidelity;
  j["probe"] = {{"starts", r.probe_starts}, {"dropped", r.probe_dropped}};
  Json points = Json::array();
  for (const auto& p : r.per_fixed_point) {
    Json fp;
    fp["distribution"] = p.distribution;
    fp["reconstructed"] = ctc::to_json(p.reconstructed.matrix());
    fp["fidelity"] = p.fidelity;
    fp["residual"] = p.residual;
    fp["iterations"] = p.iterations;
    points.push_back(std::move(fp));
  }
  j["per_fixed_point"] = std::move(points);
  return j;
}

}  // namespace dctc::analysis
