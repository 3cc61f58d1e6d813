#include "valsg/gen_stream.hpp"

#include <algorithm>

#include "valsg/skp.hpp"

namespace valsg {

GenStream GenStream::finite(std::vector<GroupElem> gens, bool allow_zero) {
  for (const auto& g : gens)
    if (!g.is_positive() && !(allow_zero && g.is_zero())) throw domain_error("generator " + to_string(g) + " is not strictly positive");
  GenStream s;
  json arr = json::array();
  for (const auto& g : gens) arr.push_back(g.rank() == 1 ? scalar_json(g[0]) : elem_json(g));
  s.params_ = json{{"gens", arr}};
  if (allow_zero) s.params_["allow_zero"] = true;
  s.length_ = gens.size();
  s.list_ = std::move(gens);
  s.monotone_ = std::is_sorted(s.list_.begin(), s.list_.end());
  return s;
}

GenStream GenStream::finite(const std::vector<Rat>& gens) {
  std::vector<GroupElem> g;
  g.reserve(gens.size());
  for (const auto& r : gens) g.push_back(GroupElem::rat(r));
  return finite(std::move(g));
}

GenStream GenStream::rule(std::string name, json params, Rule gen, bool monotone, std::optional<std::size_t> length,
                          std::optional<Rat> limit) {
  GenStream s;
  s.name_ = std::move(name);
  s.params_ = std::move(params);
  s.gen_ = std::move(gen);
  s.monotone_ = monotone;
  s.length_ = length;
  s.limit_ = std::move(limit);
  return s;
}

std::optional<GroupElem> GenStream::at(std::size_t i) const {
  if (length_ && i >= *length_) return std::nullopt;
  if (!gen_) return list_[i];
  GroupElem g = gen_(i);
  if (!g.is_positive() && !(allow_zero_ && g.is_zero()) && !limit_) throw domain_error("rule " + name_ + " produced a non-positive generator");
  return g;
}

json GenStream::to_json() const { return json{{"rule", name_}, {"params", params_}}; }

long long int_sequence(const std::string& name, long long i) {
  if (name == "pow2") return 1LL << i;
  if (name == "linear") return i;
  if (name == "triangular") return i * (i - 1) / 2 - 2;
  throw structural_error("unknown integer sequence '" + name + "' (expected pow2, linear, triangular)");
}

GenStream dyadic_beta_stream() {
  return GenStream::rule("dyadic-beta", json::object(), [](std::size_t i) { return GroupElem::rat(dyadic_beta(i)); },
                         true);
}

GenStream spq_stream(long p, long q, std::size_t depth) {
  std::vector<Rat> g;
  Rat pp = 1, qq = 1;
  for (std::size_t i = 1; i <= depth; ++i) {
    pp *= p;
    qq *= q;
    g.push_back(1 - 1 / pp);
    g.push_back(2 - 1 / qq);
  }
  std::sort(g.begin(), g.end());
  std::vector<GroupElem> ge;
  for (auto& r : g) ge.push_back(GroupElem::rat(r));
  return GenStream::rule(
      "spq", json{{"p", p}, {"q", q}, {"depth", depth}}, [ge](std::size_t i) { return ge[i]; }, true, ge.size());
}

GenStream geometric_limit_stream(long base, const Rat& limit) {
  if (base < 2) throw domain_error("geometric-limit base must be at least 2");
  return GenStream::rule(
      "geometric-limit", json{{"base", base}, {"limit", rat_json(limit)}},
      [base, limit](std::size_t i) {
        Int b = 1;
        mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(base), i);
        return GroupElem::rat(limit - Rat(Int(1), b));
      },
      true, std::nullopt, limit);
}

GenStream z2_stream(const std::string& a_rule, const std::string& b_rule, std::optional<std::size_t> depth) {
  int_sequence(a_rule, 3);
  int_sequence(b_rule, 3);
  std::optional<std::size_t> length;
  if (depth) length = *depth;
  json params{{"a_rule", a_rule}, {"b_rule", b_rule}};
  if (depth) params["depth"] = *depth;
  return GenStream::rule(
      "z2-example", params,
      [a_rule, b_rule](std::size_t k) {
        std::size_t i = k + 1;  // generator index gamma_i
        if (i == 1) return GroupElem{Rat(0), Rat(1)};
        if (i == 2) return GroupElem{Rat(1), Rat(0)};
        long long prev = i == 3 ? 0 : int_sequence(a_rule, static_cast<long long>(i) - 1);
        long long a = int_sequence(a_rule, static_cast<long long>(i));
        long long b = int_sequence(b_rule, static_cast<long long>(i));
        return GroupElem{Rat(static_cast<long>(b)), Rat(static_cast<long>(prev - a))};
      },
      true, length);
}

GenStream gen_stream_from_json(const json& j) {
  const std::string name = j.at("rule").get<std::string>();
  const json params = j.value("params", json::object());
  if (name == "finite") {
    std::vector<GroupElem> g;
    for (const auto& e : params.at("gens")) g.push_back(elem_from_json(e));
    return GenStream::finite(std::move(g), params.value("allow_zero", false));
  }
  if (name == "dyadic-beta") return dyadic_beta_stream();
  if (name == "spq")
    return spq_stream(params.at("p").get<long>(), params.at("q").get<long>(), params.at("depth").get<std::size_t>());
  if (name == "geometric-limit")
    return geometric_limit_stream(params.value("base", 2L), rat_from_json(params.value("limit", json("1"))));
  if (name == "z2-example") {
    std::optional<std::size_t> depth;
    if (params.contains("depth")) depth = params.at("depth").get<std::size_t>();
    return z2_stream(params.value("a_rule", std::string("pow2")), params.value("b_rule", std::string("linear")), depth);
  }
  if (name == "mn-cosets") return mn_coset_stream(params.at("n").get<unsigned>());
  throw structural_error("unknown generator rule '" + name + "'");
}

}  // namespace valsg
