#include "valsg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "valsg/composite.hpp"
#include "valsg/fatpoints.hpp"
#include "valsg/parser.hpp"
#include "valsg/semigroup.hpp"
#include "valsg/skp.hpp"
#include "valsg/transcend.hpp"

namespace valsg {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  for (const auto& s : split_commas(text)) out.push_back(parse_rat(s));
  return out;
}

// "6" or "12,64"
GroupElem parse_bound(const std::string& text) {
  std::vector<Scalar> coords;
  for (const auto& r : parse_rat_list(text)) coords.emplace_back(r);
  return GroupElem(std::move(coords));
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& s : split_commas(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::logic_error&) {
      throw parse_error("bad seed '" + s + "'", 0);
    }
  }
  return out;
}

// JSON rule text or shorthand: dyadic-beta, spq:p,q,depth, geometric-limit:base,limit,
// mn-cosets:n, z2-example:a_rule,b_rule,depth
GenStream parse_rule(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw parse_error("bad rule JSON: " + std::string(e.what()), e.byte);
    }
    return gen_stream_from_json(j);
  }
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::vector<std::string> args;
  if (colon != std::string::npos) args = split_commas(text.substr(colon + 1));
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw parse_error("rule '" + name + "' takes " + std::to_string(k) + " arguments", colon == std::string::npos ? text.size() : colon + 1);
  };
  json params = json::object();
  if (name == "dyadic-beta") {
    need(0);
  } else if (name == "spq") {
    need(3);
    params = {{"p", std::stol(args[0])}, {"q", std::stol(args[1])}, {"depth", std::stoul(args[2])}};
  } else if (name == "geometric-limit") {
    need(2);
    params = {{"base", std::stol(args[0])}, {"limit", args[1]}};
  } else if (name == "mn-cosets") {
    need(1);
    params = {{"n", std::stoul(args[0])}};
  } else if (name == "z2-example") {
    need(3);
    params = {{"a_rule", args[0]}, {"b_rule", args[1]}, {"depth", std::stoul(args[2])}};
  } else {
    throw parse_error("unknown rule '" + name + "'", 0);
  }
  return gen_stream_from_json(json{{"rule", name}, {"params", params}});
}

GenStream gens_or_rule(const std::string& gens, const std::string& rule) {
  if (!gens.empty() && !rule.empty()) throw parse_error("give --gens or --rule, not both", 0);
  if (!gens.empty()) return GenStream::finite(parse_rat_list(gens));
  if (!rule.empty()) return parse_rule(rule);
  throw parse_error("one of --gens or --rule is required", 0);
}

void echo_options(const CLI::App* app, json& cfg) {
  for (const CLI::Option* opt : app->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "h") continue;
    const auto& res = opt->results();
    if (!res.empty()) {
      std::string joined;
      for (std::size_t k = 0; k < res.size(); ++k) joined += (k ? "," : "") + res[k];
      cfg[name] = joined;
    } else {
      cfg[name] = opt->get_default_str();
    }
  }
}

struct Globals {
  std::uint64_t seed = 1;
  std::string precision = "32";
  std::string json_out;
  unsigned jobs = 1;
};

struct Action {
  std::string paper_ref;
  std::function<std::pair<json, int>()> run;  // result and exit code
};

// rank-one elements as bare scalars, like table output
json elems_out(const std::vector<GroupElem>& v) {
  json a = json::array();
  for (const auto& g : v) a.push_back(g.rank() == 1 ? scalar_json(g[0]) : elem_json(g));
  return a;
}

std::string short_dump(const json& j) {
  std::string s = j.dump();
  return s.size() > 160 ? s.substr(0, 157) + "..." : s;
}

}  // namespace

CliOutcome run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact computations with valuations, value semigroups and key polynomials", "valsg"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "random seed")->envname("VALSG_SEED");
  app.add_option("--precision", g.precision, "series precision (a rational)")->envname("VALSG_PRECISION");
  app.add_option("--json-out", g.json_out, "write the report here instead of stdout");
  app.add_option("--jobs", g.jobs, "worker threads where supported")->check(CLI::Range(1u, 256u));

  Action action;
  std::vector<std::string> command;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    return sub;
  };
  auto bind = [&](CLI::App* sub, std::vector<std::string> words, std::string ref,
                  std::function<std::pair<json, int>()> run) {
    sub->callback([&action, &command, words, ref, run] {
      command = words;
      action.paper_ref = ref;
      action.run = run;
    });
  };

  // ---- poly ----
  CLI::App* poly = app.add_subcommand("poly", "polynomial input")->require_subcommand(1);
  std::string poly_text, poly_vars = "x,y";
  {
    CLI::App* s = leaf(poly, "parse", "parse and normalise a polynomial");
    s->add_option("--poly", poly_text)->required();
    s->add_option("--vars", poly_vars);
    bind(s, {"poly", "parse"}, "invented: polynomial input grammar", [&] {
      MPoly p = parse_poly(poly_text, split_commas(poly_vars));
      return std::pair{json{{"poly", p.to_string()}, {"terms", p.to_json()}}, 0};
    });
  }

  // ---- semigroup ----
  CLI::App* semi = app.add_subcommand("semigroup", "value semigroups")->require_subcommand(1);
  std::string sg_gens, sg_rule, sg_bound = "6", sg_threshold = "1/64";
  long sg_p = 2, sg_q = 3, sg_m = 2, sg_grid = 10;
  std::size_t sg_depth = 2, sg_run = 5;
  unsigned sg_n = 1;
  {
    CLI::App* s = leaf(semi, "enumerate", "elements below a bound");
    s->add_option("--gens", sg_gens, "comma-separated rationals");
    s->add_option("--rule", sg_rule, "generator rule");
    s->add_option("--bound", sg_bound, "bound, e.g. 6 or 12,64");
    bind(s, {"semigroup", "enumerate"}, "semigroup generated by a sequence of values", [&] {
      SemiTable t = enumerate_below(gens_or_rule(sg_gens, sg_rule), parse_bound(sg_bound));
      return std::pair{t.to_json(), 0};
    });
  }
  {
    CLI::App* s = leaf(semi, "min-gens", "minimal generators below a bound");
    s->add_option("--gens", sg_gens);
    s->add_option("--rule", sg_rule);
    s->add_option("--bound", sg_bound);
    bind(s, {"semigroup", "min-gens"}, "unique minimal system of generators", [&] {
      SemiTable t = enumerate_below(gens_or_rule(sg_gens, sg_rule), parse_bound(sg_bound));
      return std::pair{json{{"generators", elems_out(minimal_generators(t))}, {"table_size", t.size()},
                            {"status", t.status}},
                       0};
    });
  }
  {
    CLI::App* s = leaf(semi, "plane-check", "plane branch criterion");
    s->add_option("--gens", sg_gens)->required();
    bind(s, {"semigroup", "plane-check"}, "plane branch semigroup criterion s_i = n_i and growth",
         [&] { return std::pair{plane_branch_check(parse_rat_list(sg_gens)).to_json(), 0}; });
  }
  {
    CLI::App* s = leaf(semi, "probe", "module generators of M_n over M_0");
    s->add_option("--n", sg_n);
    s->add_option("--bound", sg_bound);
    bind(s, {"semigroup", "probe"}, "finite generation of value modules over the value semigroup", [&] {
      return std::pair{module_fin_gen_probe(mn_module(sg_n), parse_bound(sg_bound)).to_json(), 0};
    });
  }
  {
    CLI::App* s = leaf(semi, "spq", "two-prime semigroup");
    s->add_option("--p", sg_p);
    s->add_option("--q", sg_q);
    s->add_option("--depth", sg_depth);
    s->add_option("--bound", sg_bound);
    bind(s, {"semigroup", "spq"}, "semigroup generated by 1 - p^-i and 2 - q^-i", [&] {
      return std::pair{spq_build(sg_p, sg_q, sg_depth, parse_rat(sg_bound)).to_json(), 0};
    });
  }
  {
    CLI::App* s = leaf(semi, "scan", "accumulation scan");
    s->add_option("--gens", sg_gens);
    s->add_option("--rule", sg_rule);
    s->add_option("--bound", sg_bound);
    s->add_option("--threshold", sg_threshold);
    s->add_option("--run-length", sg_run);
    bind(s, {"semigroup", "scan"}, "accumulation points of value semigroups", [&] {
      SemiTable t = enumerate_below(gens_or_rule(sg_gens, sg_rule), parse_bound(sg_bound));
      json r = accumulation_scan(t, parse_rat(sg_threshold), sg_run).to_json();
      r["table_size"] = t.size();
      return std::pair{r, 0};
    });
  }
  {
    CLI::App* s = leaf(semi, "omega-embed", "well-ordered embedding of type omega^m");
    s->add_option("--m", sg_m);
    s->add_option("--grid", sg_grid);
    s->add_option("--rule", sg_rule, "increasing sequence with a limit (default geometric-limit:2,1)");
    bind(s, {"semigroup", "omega-embed"}, "embedding of ordinal type omega^m into sums of m terms", [&] {
      OmegaTable t = omega_embedding(parse_rule(sg_rule.empty() ? "geometric-limit:2,1" : sg_rule), sg_m, sg_grid);
      return std::pair{t.to_json(), t.order_preserving && t.sums_certified ? 0 : 2};
    });
  }

  // ---- skp ----
  CLI::App* skp = app.add_subcommand("skp", "dyadic key polynomials")->require_subcommand(1);
  std::size_t skp_count = 5, skp_max_j = 10;
  unsigned skp_n = 1;
  std::string skp_poly, skp_bound = "6";
  {
    CLI::App* s = leaf(skp, "betas", "values of the key polynomials");
    s->add_option("--count", skp_count);
    bind(s, {"skp", "betas"}, "values of the dyadic key polynomial sequence", [&] {
      std::vector<Rat> b;
      for (std::size_t i = 0; i < skp_count; ++i) b.push_back(dyadic_beta(i));
      return std::pair{rats_json(b), 0};
    });
  }
  {
    CLI::App* s = leaf(skp, "polys", "the key polynomials");
    s->add_option("--count", skp_count)->check(CLI::Range(1, 16));
    bind(s, {"skp", "polys"}, "dyadic key polynomial sequence",
         [&] { return std::pair{shared_key_polys(skp_count).to_json(), 0}; });
  }
  {
    CLI::App* s = leaf(skp, "value", "residual valuation of a polynomial in x, y");
    s->add_option("--poly", skp_poly)->required();
    bind(s, {"skp", "value"}, "valuation defined by the key polynomial sequence", [&] {
      MPoly f = parse_xy(skp_poly);
      return std::pair{json{{"poly", f.to_string()}, {"value", rat_json(nu_bar(f))}}, 0};
    });
  }
  {
    CLI::App* s = leaf(skp, "expand", "standard expansion");
    s->add_option("--poly", skp_poly)->required();
    bind(s, {"skp", "expand"}, "standard expansion in key polynomials",
         [&] { return std::pair{standard_expansion(parse_xy(skp_poly)).to_json(), 0}; });
  }
  {
    CLI::App* s = leaf(skp, "module", "the module M_n below a bound");
    s->add_option("--n", skp_n);
    s->add_option("--bound", skp_bound);
    bind(s, {"skp", "module"}, "value modules M_n over M_0",
         [&] { return std::pair{module_Mn(skp_n, parse_rat(skp_bound)).to_json(), 0}; });
  }
  {
    CLI::App* s = leaf(skp, "witness", "new module generators beta_j - n");
    s->add_option("--n", skp_n);
    s->add_option("--max-j", skp_max_j);
    bind(s, {"skp", "witness"}, "M_n is not finitely generated over M_0", [&] {
      json arr = json::array();
      bool ok = true;
      for (const auto& w : new_generator_witness(skp_n, skp_max_j)) {
        arr.push_back(json{{"j", w.j},
                           {"value", rat_json(w.value)},
                           {"denominator", w.denominator.get_str()},
                           {"psi_denominator", w.psi_denominator.get_str()},
                           {"in_module", w.in_module},
                           {"certified", w.certified}});
        if (w.j >= skp_n && !w.certified) ok = false;
      }
      return std::pair{json{{"witnesses", arr}, {"all_certified", ok}}, ok ? 0 : 2};
    });
  }

  // ---- z2 ----
  CLI::App* z2 = app.add_subcommand("z2", "rank-two example in Z^2")->require_subcommand(1);
  std::string z2_a = "pow2", z2_b = "linear", z2_lambda = "one", z2_bound = "12,64";
  std::size_t z2_depth = 10;
  {
    CLI::App* s = leaf(z2, "build", "build the series and check every gamma_i");
    s->add_option("--a-rule", z2_a);
    s->add_option("--b-rule", z2_b);
    s->add_option("--lambda-rule", z2_lambda);
    s->add_option("--depth", z2_depth);
    s->add_option("--bound", z2_bound);
    bind(s, {"z2", "build"}, "rank-two valuation on K[x,y,z] whose value semigroup is not finitely generated", [&] {
      Z2Example ex = z2_build(z2_a, z2_b, z2_lambda, z2_depth);
      Z2Report rep = z2_verify(ex, parse_bound(z2_bound));
      return std::pair{json{{"example", ex.to_json()}, {"verification", rep.to_json()}}, rep.verdict ? 0 : 2};
    });
  }

  // ---- composite ----
  CLI::App* comp = app.add_subcommand("composite", "composite rank-two valuation")->require_subcommand(1);
  std::string comp_poly, comp_level = "1", comp_bound = "6";
  unsigned comp_deg = 3, comp_k = 4;
  std::size_t comp_samples = 40;
  {
    CLI::App* s = leaf(comp, "value", "value of a polynomial in x, y, u, v");
    s->add_option("--poly", comp_poly)->required();
    bind(s, {"composite", "value"}, "composite valuation nu_1 followed by the residual valuation", [&] {
      return std::pair{composite_value(parse_poly(comp_poly, xyuv_vars())).to_json(), 0};
    });
  }
  {
    CLI::App* s = leaf(comp, "slice", "sampled values with a given first component");
    s->add_option("--level", comp_level, "n or n*alpha");
    s->add_option("--deg-bound", comp_deg);
    s->add_option("--bound", comp_bound);
    s->add_option("--samples", comp_samples);
    bind(s, {"composite", "slice"}, "slices F_n and F_{n alpha} of the composite value semigroup", [&] {
      SliceReport r = F_slice(SliceLevel::parse(comp_level), comp_deg, parse_rat(comp_bound), g.seed, comp_samples);
      return std::pair{r.to_json(), r.contained ? 0 : 2};
    });
  }
  {
    CLI::App* s = leaf(comp, "phicheck", "derivative identity for Phi_jk");
    s->add_option("--k", comp_k)->check(CLI::Range(0u, 12u));
    bind(s, {"composite", "phicheck"}, "derivative identity d^j Phi_0k = j! Phi_jk", [&] {
      // the identity is linear in the coefficients; distinct monomials as
      // coefficients check all of them at once
      const std::vector<std::string> xy{"x", "y"};
      json checks = json::array();
      bool ok = true;
      for (unsigned k = 0; k <= comp_k; ++k) {
        std::vector<MPoly> coeffs;
        for (unsigned i = 0; i <= k; ++i) coeffs.push_back(MPoly::monomial(xy, {i, k - i}, Rat(1)));
        bool pass = phi_derivative_check(k, coeffs);
        ok = ok && pass;
        checks.push_back(json{{"k", k}, {"ok", pass}});
      }
      return std::pair{json{{"checks", checks}, {"ok", ok}}, ok ? 0 : 2};
    });
  }

  // ---- transcend ----
  CLI::App* tr = app.add_subcommand("transcend", "transcendental construction")->require_subcommand(1);
  std::size_t tr_depth = 6, tr_spot = 50;
  unsigned tr_spot_n = 3;
  {
    CLI::App* s = leaf(tr, "build", "run the construction and check it");
    s->add_option("--depth", tr_depth)->check(CLI::Range(std::size_t{1}, std::size_t{12}));
    s->add_option("--spot-checks", tr_spot, "random sums checked for distinct leading terms");
    s->add_option("--spot-n", tr_spot_n, "z-degree of the spot checks (capped at depth)");
    bind(s, {"transcend", "build"}, "transcendental z with non-finitely-generated graded algebra", [&] {
      TranscendState st = transcend_build(tr_depth, parse_rat(g.precision));
      TranscendCheck c = transcend_check(st);
      unsigned n = std::min<unsigned>(tr_spot_n, static_cast<unsigned>(tr_depth));
      LeadingTermReport l1 = leading_term_spotcheck(st, n, tr_spot, g.seed);
      bool ok = c.ok() && l1.nonzero == l1.trials && l1.distinct_terms == l1.trials;
      return std::pair{json{{"state", st.to_json()}, {"check", c.to_json()}, {"spot_checks", l1.to_json()}}, ok ? 0 : 2};
    });
  }

  // ---- fatpoints ----
  CLI::App* fp = app.add_subcommand("fatpoints", "fat points in the plane")->require_subcommand(1);
  unsigned fp_d = 4, fp_n = 1, fp_s = 4, fp_dmax = 12, fp_nmax = 3;
  std::size_t fp_r = 16;
  std::string fp_field = "p:2147483647", fp_seeds;
  {
    CLI::App* s = leaf(fp, "dim", "dimension of forms of degree d singular to order n at r points");
    s->add_option("--d", fp_d);
    s->add_option("--n", fp_n);
    s->add_option("--r", fp_r);
    s->add_option("--field", fp_field, "q or p:<prime>");
    bind(s, {"fatpoints", "dim"}, "fat point interpolation in the plane", [&] {
      PointSet ps = random_points(fp_r, g.seed, Field::parse(fp_field));
      return std::pair{fatpoint_dim(fp_d, fp_n, ps).to_json(), 0};
    });
  }
  {
    CLI::App* s = leaf(fp, "scan", "grid of dimensions for r = s^2 points");
    s->add_option("--s", fp_s);
    s->add_option("--dmax", fp_dmax);
    s->add_option("--nmax", fp_nmax);
    s->add_option("--seeds", fp_seeds, "comma-separated seeds (default: seed, seed+1, seed+2)");
    s->add_option("--field", fp_field);
    bind(s, {"fatpoints", "scan"}, "value semigroup of the order valuation at s^2 general points", [&] {
      std::vector<std::uint64_t> seeds = fp_seeds.empty() ? std::vector<std::uint64_t>{g.seed, g.seed + 1, g.seed + 2}
                                                          : parse_seed_list(fp_seeds);
      ScanGrid grid = semigroup_scan(fp_s, fp_dmax, fp_nmax, seeds, Field::parse(fp_field), g.jobs);
      bool ok = grid.vanishing_below_line && grid.graded_zero_below_line && grid.lower_bound_ok && grid.monotone;
      return std::pair{grid.to_json(), ok ? 0 : 2};
    });
  }

  // ---- corpus ----
  CLI::App* corpus = app.add_subcommand("corpus", "test-vector corpus")->require_subcommand(1);
  std::string corpus_path;
  {
    CLI::App* s = leaf(corpus, "run", "re-run every vector and diff the results");
    s->add_option("--path", corpus_path)->required();
    bind(s, {"corpus", "run"}, "invented: artifact plumbing", [&] {
      CorpusReport r = corpus_run_file(corpus_path);
      return std::pair{r.to_json(), r.ok() ? 0 : 2};
    });
  }

  CliOutcome out;
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream so, se;
    int code = app.exit(e, so, se);
    out.exit_code = code == 0 ? 0 : 1;
    out.summary = so.str() + se.str();
    if (code != 0)
      out.report = json{{"schema_version", report_schema_version}, {"error", e.what()}, {"error_kind", "usage"}};
    return out;
  }

  json cfg = json::object();
  echo_options(&app, cfg);
  for (CLI::App* sub = &app; !sub->get_subcommands().empty();) {
    sub = sub->get_subcommands().front();
    echo_options(sub, cfg);
  }
  std::string cmd;
  for (const auto& w : command) cmd += (cmd.empty() ? "" : " ") + w;
  out.json_out = g.json_out;
  cfg.erase("json-out");
  out.report = json{{"schema_version", report_schema_version}, {"command", cmd}, {"config", cfg},
                    {"paper_ref", action.paper_ref}};
  auto fail = [&](const std::string& kind, const std::string& what) {
    out.exit_code = 1;
    out.report["error"] = what;
    out.report["error_kind"] = kind;
    out.summary = cmd + ": " + kind + " error: " + what;
  };
  try {
    auto [result, code] = action.run();
    out.exit_code = code;
    out.report["result"] = result;
    out.summary = cmd + (code == 0 ? ": ok " : ": property violated ") + short_dump(result);
  } catch (const parse_error& e) {
    fail("parse", e.what());
  } catch (const structural_error& e) {
    fail("structural", e.what());
  } catch (const domain_error& e) {
    fail("domain", e.what());
  } catch (const precision_error& e) {
    fail("precision", e.what());
  } catch (const incomplete_error& e) {
    fail("incomplete", e.what());
  } catch (const json::exception& e) {
    fail("input", e.what());
  } catch (const std::logic_error& e) {
    fail("input", e.what());
  }
  return out;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliOutcome out = run_cli(args);
  if (out.report.is_null()) {
    std::cout << out.summary;
    return out.exit_code;
  }
  const std::string text = out.report.dump(2) + "\n";
  if (!out.json_out.empty()) {
    std::ofstream f(out.json_out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out.json_out << "\n";
      return 1;
    }
    f << text;
  } else {
    std::cout << text;
  }
  if (!out.summary.empty()) std::cerr << out.summary << (out.summary.back() == '\n' ? "" : "\n");
  return out.exit_code;
}

json CorpusReport::to_json() const {
  return json{{"total", total}, {"passed", passed}, {"failures", failures}, {"warnings", warnings}, {"ok", ok()}};
}

CorpusReport corpus_run(const json& corpus) {
  CorpusReport rep;
  const json vectors = corpus.value("vectors", json::array());
  if (vectors.empty()) rep.warnings.push_back("corpus has no vectors");
  for (const auto& v : vectors) {
    ++rep.total;
    const std::string name = v.value("name", "vector " + std::to_string(rep.total));
    CliOutcome out = run_cli(v.at("args").get<std::vector<std::string>>());
    bool pass = true;
    const int want_exit = v.value("exit", 0);
    if (out.exit_code != want_exit) {
      rep.failures.push_back(name + ": exit expected " + std::to_string(want_exit) + " got " +
                             std::to_string(out.exit_code));
      pass = false;
    }
    for (const auto& c : v.value("checks", json::array())) {
      const std::string path = c.at("path").get<std::string>();
      const std::string want = c.at("expect").dump();
      json::json_pointer ptr(path);
      std::string got = out.report.contains(ptr) ? out.report.at(ptr).dump() : "<missing>";
      if (got != want) {
        rep.failures.push_back(name + ": " + path + " expected " + want + " got " + got);
        pass = false;
      }
    }
    if (pass) ++rep.passed;
  }
  return rep;
}

CorpusReport corpus_run_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw domain_error("cannot read corpus " + path);
  json corpus;
  try {
    corpus = json::parse(f);
  } catch (const json::parse_error& e) {
    throw parse_error("corpus is not JSON: " + std::string(e.what()), e.byte);
  }
  return corpus_run(corpus);
}

}  // namespace valsg
