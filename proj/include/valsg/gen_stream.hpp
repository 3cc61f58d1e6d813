#pragma once

// Generator streams: either a finite list of positive group elements or a
// named rule that produces the i-th generator on demand.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "valsg/group.hpp"
#include "valsg/json_io.hpp"

namespace valsg {

class GenStream {
public:
  using Rule = std::function<GroupElem(std::size_t)>;

  GenStream() = default;

  // `allow_zero` is for module generator lists, which may contain 0
  static GenStream finite(std::vector<GroupElem> gens, bool allow_zero = false);
  static GenStream finite(const std::vector<Rat>& gens);

  // `monotone` promises that first coordinates never decrease along the
  // stream, which is what lets enumeration stop consulting it.
  static GenStream rule(std::string name, json params, Rule gen, bool monotone,
                        std::optional<std::size_t> length = std::nullopt, std::optional<Rat> limit = std::nullopt);

  // lets a rule produce 0 (module generator streams)
  GenStream& allow_zero() {
    allow_zero_ = true;
    return *this;
  }

  // nullopt past the end of a finite stream
  std::optional<GroupElem> at(std::size_t i) const;

  bool is_finite() const { return length_.has_value(); }
  std::optional<std::size_t> length() const { return length_; }
  bool monotone() const { return monotone_; }
  const std::optional<Rat>& limit() const { return limit_; }
  const std::string& name() const { return name_; }
  const json& params() const { return params_; }

  // {"rule": name, "params": {...}}; finite lists as {"rule": "finite", "params": {"gens": [...]}}
  json to_json() const;

private:
  std::string name_ = "finite";
  json params_ = json::object();
  std::vector<GroupElem> list_;
  Rule gen_;
  bool monotone_ = false;
  bool allow_zero_ = false;
  std::optional<std::size_t> length_ = 0;
  std::optional<Rat> limit_;
};

// Integer sequences used as rule parameters ("pow2", "linear", "triangular").
long long int_sequence(const std::string& name, long long i);

// Builds a stream from its JSON description; see the README for rule names.
GenStream gen_stream_from_json(const json& j);

GenStream dyadic_beta_stream();
// p,q-family: 1 - p^-i and 2 - q^-i for 1 <= i <= depth, sorted
GenStream spq_stream(long p, long q, std::size_t depth);
// lambda_i = limit - base^-i, i >= 0
GenStream geometric_limit_stream(long base, const Rat& limit);
// (0,1), (1,0), then (b_i, a_{i-1} - a_i) for i >= 3 with a_2 = 0
GenStream z2_stream(const std::string& a_rule, const std::string& b_rule, std::optional<std::size_t> depth = std::nullopt);

}  // namespace valsg
