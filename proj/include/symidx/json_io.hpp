#pragma once

#include <json.hpp>

#include "symidx/prover.hpp"

// Stable-key-order JSON for every report type, with parsers that invert the
// emitters exactly (parse(emit(x)) == x).
namespace symidx {

using Json = nlohmann::ordered_json;

Json to_json(const RestrictedRootSystem& r);
RestrictedRootSystem root_system_from_json(const Json& j);

Json to_json(const SpaceRecord& s);
SpaceRecord space_from_json(const Json& j);

Json to_json(const ProductSpace& p);
ProductSpace product_from_json(const Json& j);

Json to_json(const BoundBreakdown& b);
BoundBreakdown bound_from_json(const Json& j);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const Candidate& c);
Candidate candidate_from_json(const Json& j);

Json to_json(const PipelineReport& p);
PipelineReport pipeline_from_json(const Json& j);

Json to_json(const Step& s);
Step step_from_json(const Json& j);

Json to_json(const TheoremReport& t);
TheoremReport theorem_from_json(const Json& j);

// Catalog export: one object per record, dim <= dim_max, scan order.
Json catalog_to_json(int dim_max);
std::vector<SpaceRecord> catalog_from_json(const Json& j);

}  // namespace symidx
