// JSON wire formats for every value the CLI reads or writes.
#pragma once

#include <clusterx/completion.hpp>
#include <clusterx/lamination.hpp>
#include <clusterx/tropical.hpp>

#include <json.hpp>

namespace clusterx {

using Json = nlohmann::json;

Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json graph_to_json(const ExchangeGraph& g, bool with_transitions);

Json tropical_point_to_json(const TropicalPoint& p);
TropicalPoint tropical_point_from_json(const Json& j);

Json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const Json& j);

Json lamination_to_json(const Lamination& l);
Lamination lamination_from_json(const Json& j);

/// Strata poset with covering relations; cut diagonals and sub-polygon
/// decompositions are attached when the graph aligns with a polygon.
Json poset_to_json(const StrataPoset& poset, const ExchangeGraph& g,
                   const std::optional<PolygonAlignment>& alignment, int polygon_size);

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

}  // namespace clusterx
