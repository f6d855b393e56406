#pragma once

#include <json.hpp>

#include "pinclass/classify.hpp"
#include "pinclass/cperm.hpp"
#include "pinclass/oracle.hpp"
#include "pinclass/pipeline.hpp"
#include "pinclass/roots.hpp"
#include "pinclass/series.hpp"

namespace pinclass {

using Json = nlohmann::json;

/// {"filled":[...], "origin": k} with k 1-based.
Json to_json(const CentredPerm& p);
CentredPerm perm_from_json(const Json& j);

/// Ascending coefficient array of rational strings.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"num":[...], "den":[...], "text": "..."}
Json to_json(const RatGF& f);
RatGF ratgf_from_json(const Json& j);

/// {"interval":["p/q","r/s"], "decimal":"...", "polynomial":[...]}
Json to_json(const GrowthResult& g);
GrowthResult growth_from_json(const Json& j);

Json to_json(const PipelineResult& r);

/// {"method", "counts", "n_max"}; adds "description" and, for the subset
/// method, "depth".
Json to_json(const ClassCensus& c);
ClassCensus census_from_json(const Json& j);

Json to_json(const ClassificationReport& r);

}  // namespace pinclass
