#pragma once

#include <json.hpp>

#include <gwci/calabi_yau.hpp>
#include <gwci/mirror_map.hpp>
#include <gwci/relative.hpp>

namespace gwci {

using json = nlohmann::json;

// Rationals are strings "p/q" or "p", never floating point.
json rational_to_json(const Rational &r);
Rational rational_from_json(const json &j);

// [{"base": {"s1": 2, ...}, "c": "p/q"}, ...]
json base_to_json(const BaseClass &b);
BaseClass base_from_json(const json &j, const RingSpec::Ptr &spec);

// Absolute rings: [{"t": int, "h": ["c_0", ..., "c_n"]}, ...]
// Relative rings: [{"t": int, "terms": [{"h": int, "base": {...}, "c": "p/q"}]}, ...]
// Entries are sorted by decreasing t.
json laurent_to_json(const LaurentPoly &p);
LaurentPoly laurent_from_json(const json &j, const RingSpec::Ptr &spec);

json model_to_json(const CIModel &model);
json lambda_to_json(const LambdaForm &l);
LambdaForm lambda_from_json(const json &j);
json report_to_json(const ThreefoldReport &report);
json mirror_to_json(const CIModel &model, const MirrorReport &report, int D);

} // namespace gwci
