#pragma once

#include <string>

#include <json.hpp>

#include "chabgraph/augmented.hpp"
#include "chabgraph/chabauty.hpp"
#include "chabgraph/clifford.hpp"
#include "chabgraph/rank.hpp"
#include "chabgraph/reduction.hpp"

namespace chabgraph::io {

using json = nlohmann::ordered_json;

/// Parses the graph description format:
///   { "vertices": [ {"id": "v", "genus": 0}, ... ],
///     "edges":    [ ["v","w"], ... ] }
/// "genus" defaults to 0; repeated edge pairs are parallel edges and
/// ["v","v"] is a loop. Unknown keys are rejected.
AugmentedCurve curve_from_json(const json& j);
AugmentedCurve load_curve(const std::string& path);

/// Parses a divisor file: an object mapping vertex id -> integer. Missing
/// vertices default to 0; unknown ids and unknown value types are rejected.
Divisor divisor_from_json(const json& j, const Multigraph& g);
Divisor load_divisor(const std::string& path, const Multigraph& g);

json divisor_to_json(const Divisor& d, const Multigraph& g);
json twist_to_json(const Twist& t, const Multigraph& g);
json reduced_to_json(const ReducedDivisor& r, const Multigraph& g);
json certificate_to_json(const CliffordCertificate& cert, const Multigraph& g);
json rank_bounds_to_json(const RankBounds& b);
json report_to_json(const ChabautyReport& r);
json profile_to_json(const TwistH0Profile& p, const Multigraph& g);

} // namespace chabgraph::io
