#include "dctc/circuit/serialize.hpp"

#include <string>
#include <vector>

namespace dctc::circuit {

Json to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const auto& g : c.gates()) {
    Json jg;
    jg["kind"] = std::string(to_string(g.kind()));
    jg["wires"] = std::vector<std::size_t>(g.wires().begin(), g.wires().end());
    if (g.angle()) jg["angle"] = *g.angle();
    gates.push_back(std::move(jg));
  }

  Json layout = nullptr;
  if (const auto& l = c.layout()) {
    layout = Json{{"n", l->n}, {"m", l->m}, {"cr_wires", l->cr_wires}, {"ctc_wires", l->ctc_wires}};
  }

  Json slices = Json::array();
  for (const auto& s : c.slices()) {
    slices.push_back(Json{{"name", s.name}, {"begin", s.begin}, {"end", s.end}});
  }

  Json out;
  out["qubit_count"] = c.qubit_count();
  out["gates"] = std::move(gates);
  out["layout"] = std::move(layout);
  out["slices"] = std::move(slices);
  return out;
}

Circuit circuit_from_json(const Json& j) {
  std::optional<RegisterLayout> layout;
  if (j.contains("layout") && !j.at("layout").is_null()) {
    const auto& jl = j.at("layout");
    layout = RegisterLayout{jl.at("n").get<std::size_t>(), jl.at("m").get<std::size_t>(),
                            jl.at("cr_wires").get<std::vector<std::size_t>>(),
                            jl.at("ctc_wires").get<std::vector<std::size_t>>()};
  }
  Circuit c(j.at("qubit_count").get<std::size_t>(), std::move(layout));
  for (const auto& jg : j.at("gates")) {
    const auto wires = jg.at("wires").get<std::vector<std::size_t>>();
    std::optional<double> angle;
    if (jg.contains("angle")) angle = jg.at("angle").get<double>();
    c.append(Gate(gate_kind_from_string(jg.at("kind").get<std::string>()), wires, angle));
  }
  for (const auto& js : j.at("slices")) {
    c.add_slice({js.at("name").get<std::string>(), js.at("begin").get<std::size_t>(),
                 js.at("end").get<std::size_t>()});
  }
  return c;
}

Json to_json(const core::PureState& psi) {
  Json amps = Json::array();
  for (const auto& a : psi.amplitudes()) amps.push_back({a.real(), a.imag()});
  return Json{{"qubit_count", psi.qubit_count()}, {"amplitudes", std::move(amps)}};
}

}  // namespace dctc::circuit
