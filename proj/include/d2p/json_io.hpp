#pragma once

#include <string>

#include "json.hpp"

#include "d2p/basis.hpp"
#include "d2p/report.hpp"

namespace d2p {

// All external JSON shapes in one place. ordered_json keeps object keys in
// insertion order, so rendered reports are byte-stable across runs.
using Json = nlohmann::ordered_json;

Json field_to_json(const BinaryFieldDescriptor& field);
BinaryFieldDescriptor field_from_json(const Json& j);

Json rep_to_json(const DihedralRep& rep);
DihedralRep rep_from_json(const Json& j);

Json order_to_json(const MonomialOrder& order);
MonomialOrder order_from_json(const Json& j);

Json generator_set_to_json(const VarLayout& layout, const GeneratorSet& gens);
GeneratorSet generator_set_from_json(const VarLayout& layout, const Json& j);

Json config_to_json(const RunConfig& config);
RunConfig config_from_json(const Json& j);

Json report_to_json(const Report& report);
Report report_from_json(const Json& j);

// dump with 2-space indent and a trailing newline.
std::string dump_pretty(const Json& j);

}  // namespace d2p
