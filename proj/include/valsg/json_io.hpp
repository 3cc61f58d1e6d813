#pragma once

// JSON encodings shared by every report:
//   Rat       "n/d" (integers as "n")
//   QuadRat   {"a": "n/d", "b": "n/d"}
//   GroupElem [scalar, ...]

#include <json.hpp>

#include "valsg/group.hpp"

namespace valsg {

using json = nlohmann::json;

json rat_json(const Rat& r);
Rat rat_from_json(const json& j);

json scalar_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json elem_json(const GroupElem& g);
GroupElem elem_from_json(const json& j);

json rats_json(const std::vector<Rat>& v);
json elems_json(const std::vector<GroupElem>& v);

}  // namespace valsg
