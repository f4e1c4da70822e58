#include "kdwork/json_io.hpp"

namespace kdwork {

namespace {

nlohmann::json complex_json(complex_t z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json real_list(const std::vector<complex_t> &v) {
  auto out = nlohmann::json::array();
  for (const auto &z : v) out.push_back(z.real());
  return out;
}

} // namespace

nlohmann::json complex_matrix_json(const CMatrix &m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const KdqTable &t) {
  return {{"dim", t.dim},
          {"entries", complex_matrix_json(t.entries)},
          {"row_marginals", real_list(t.row_marginals())},
          {"col_marginals", real_list(t.col_marginals())}};
}

nlohmann::json to_json(const KdqSplit &s) {
  return {{"population", to_json(s.population)}, {"coherent", to_json(s.coherent)}};
}

nlohmann::json to_json(const WorkReport &r) {
  nlohmann::json j = {{"total", r.total}, {"population", r.population}, {"coherent", r.coherent}};
  auto comps = nlohmann::json::object();
  for (const auto &[key, value] : r.components) {
    comps[std::to_string(key.first) + "-" + std::to_string(key.second)] = value;
  }
  j["components"] = comps;
  if (r.has_norms) {
    j["norms"] = {{"pos_up", r.norms.pos_up},
                  {"neg_up", r.norms.neg_up},
                  {"pos_down", r.norms.pos_down},
                  {"neg_down", r.norms.neg_down}};
  } else {
    j["norms"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const JarzynskiReport &r) {
  return {{"beta", r.beta},
          {"expectation", complex_json(r.expectation)},
          {"gamma_correction", complex_json(r.gamma_correction)}};
}

nlohmann::json to_json(const DecompositionReport &r) {
  auto per_gate = nlohmann::json::array();
  for (const auto &g : r.per_gate) {
    per_gate.push_back({{"j", g.j}, {"table", to_json(g.constituent)}, {"gap", complex_matrix_json(g.gap)}});
  }
  return {{"full", to_json(r.full)},
          {"per_gate", per_gate},
          {"correction", complex_matrix_json(r.correction)},
          {"residual_max", r.residual_max}};
}

nlohmann::json to_json(const CommutationReport &r) {
  auto checks = nlohmann::json::array();
  for (const auto &c : r.checks) {
    checks.push_back({{"label", c.label}, {"norms", c.norms}, {"max_norm", c.max_norm}, {"vanishes", c.vanishes}});
  }
  auto conds = nlohmann::json::array();
  for (const auto &c : r.conditions) {
    conds.push_back({{"label", c.label}, {"checks", c.checks}, {"satisfied", c.satisfied}});
  }
  return {{"num_gates", r.num_gates}, {"checks", checks}, {"conditions", conds}};
}

std::string dump_json(const nlohmann::json &j, int indent) { return j.dump(indent <= 0 ? -1 : indent); }

} // namespace kdwork
