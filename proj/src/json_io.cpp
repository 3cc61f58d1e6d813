#include "valsg/json_io.hpp"

namespace valsg {

json rat_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw structural_error("expected a rational encoded as \"n/d\", got " + j.dump());
}

json scalar_json(const Scalar& s) {
  if (const Rat* r = std::get_if<Rat>(&s)) return rat_json(*r);
  const auto& q = std::get<QuadRat>(s);
  return json{{"a", rat_json(q.a)}, {"b", rat_json(q.b)}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_object()) return QuadRat(rat_from_json(j.at("a")), rat_from_json(j.at("b")));
  return rat_from_json(j);
}

json elem_json(const GroupElem& g) {
  json a = json::array();
  for (const auto& c : g.coords()) a.push_back(scalar_json(c));
  return a;
}

GroupElem elem_from_json(const json& j) {
  if (!j.is_array()) return GroupElem::rat(rat_from_json(j));
  std::vector<Scalar> c;
  for (const auto& e : j) c.push_back(scalar_from_json(e));
  return GroupElem(std::move(c));
}

json rats_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(rat_json(r));
  return a;
}

json elems_json(const std::vector<GroupElem>& v) {
  json a = json::array();
  for (const auto& g : v) a.push_back(elem_json(g));
  return a;
}

}  // namespace valsg
