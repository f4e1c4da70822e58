#pragma once

// JSON views of the result types.

#include "kdwork/decomposition.hpp"
#include "kdwork/kdq.hpp"
#include "kdwork/thermo.hpp"

#include <json.hpp>

namespace kdwork {

nlohmann::json to_json(const KdqTable &t);
nlohmann::json to_json(const KdqSplit &s);
nlohmann::json to_json(const WorkReport &r);
nlohmann::json to_json(const JarzynskiReport &r);
nlohmann::json to_json(const DecompositionReport &r);
nlohmann::json to_json(const CommutationReport &r);
nlohmann::json complex_matrix_json(const CMatrix &m);

/// indent <= 0 gives a single line.
std::string dump_json(const nlohmann::json &j, int indent);

} // namespace kdwork
