#include "valsg/fatpoints.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <random>
#include <thread>

namespace valsg {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 reduce(const Int& v, u64 p) { return mpz_fdiv_ui(v.get_mpz_t(), p); }

std::size_t rank_mod_p(std::vector<std::vector<u64>> m, u64 p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    u64 inv = powmod(m[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      u64 f = mulmod(m[r][c], inv, p);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = (m[r][k] + p - mulmod(f, m[rank][k], p)) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_q(std::vector<std::vector<Rat>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

using Exp3 = std::array<unsigned, 3>;

std::vector<Exp3> exps_of_degree(unsigned d) {
  std::vector<Exp3> out;
  for (unsigned a = 0; a <= d; ++a)
    for (unsigned b = 0; a + b <= d; ++b) out.push_back({a, b, d - a - b});
  return out;
}

// d^beta x^alpha at pt = prod alpha_i!/(alpha_i - beta_i)! pt_i^(alpha_i - beta_i)
Int derivative_entry(const Exp3& alpha, const Exp3& beta, const std::array<Int, 3>& pt) {
  Int v = 1;
  for (int i = 0; i < 3; ++i) {
    if (beta[i] > alpha[i]) return 0;
    for (unsigned k = 0; k < beta[i]; ++k) v *= alpha[i] - k;
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), pt[i].get_mpz_t(), alpha[i] - beta[i]);
    v *= pw;
  }
  return v;
}

bool same_projective_point(const std::array<Int, 3>& a, const std::array<Int, 3>& b, const Field& f) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Int c = a[i] * b[j] - a[j] * b[i];
      if (f.rational() ? c != 0 : reduce(c, f.p) != 0) return false;
    }
  return true;
}

bool zero_point(const std::array<Int, 3>& a, const Field& f) {
  for (const auto& c : a)
    if (f.rational() ? c != 0 : reduce(c, f.p) != 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  Int pi(static_cast<unsigned long>(p));
  if (p < 2 || p >= (u64(1) << 62) || mpz_probab_prime_p(pi.get_mpz_t(), 30) == 0)
    throw domain_error("field characteristic " + std::to_string(p) + " is not a prime below 2^62");
  return Field{p};
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return q();
  if (text.rfind("p:", 0) == 0) {
    try {
      return prime(std::stoull(text.substr(2)));
    } catch (const std::logic_error&) {
      throw parse_error("bad prime in field descriptor '" + text + "'", 2);
    }
  }
  throw parse_error("field must be q or p:<prime>, got '" + text + "'", 0);
}

std::string Field::to_string() const { return rational() ? "q" : "p:" + std::to_string(p); }

json PointSet::to_json() const {
  json pts = json::array();
  for (const auto& pt : points) pts.push_back(json::array({pt[0].get_str(), pt[1].get_str(), pt[2].get_str()}));
  return json{{"points", pts}, {"seed", seed}, {"field", field.to_string()}};
}

PointSet random_points(std::size_t r, std::uint64_t seed, const Field& field) {
  if (r < 1) throw domain_error("need at least one point");
  // projective points over F_p: p^2 + p + 1
  if (!field.rational() && static_cast<long double>(r) > static_cast<long double>(field.p) * field.p + field.p + 1)
    throw domain_error("field too small for " + std::to_string(r) + " distinct points");
  PointSet ps;
  ps.seed = seed;
  ps.field = field;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> mod(0, field.rational() ? 0 : field.p - 1);
  std::uniform_int_distribution<long> small(-(1L << 15), 1L << 15);
  while (ps.points.size() < r) {
    std::array<Int, 3> pt;
    for (auto& c : pt) c = field.rational() ? Int(small(rng)) : Int(static_cast<unsigned long>(mod(rng)));
    if (zero_point(pt, field)) continue;
    bool dup = std::any_of(ps.points.begin(), ps.points.end(),
                           [&](const std::array<Int, 3>& q) { return same_projective_point(pt, q, field); });
    if (!dup) ps.points.push_back(pt);
  }
  return ps;
}

json FatPointSystem::to_json() const {
  return json{{"d", d},
              {"n", n},
              {"r", r},
              {"monomials", monomials},
              {"conditions_rank", conditions_rank},
              {"dim", dim},
              {"field", field.to_string()}};
}

FatPointSystem fatpoint_dim(unsigned d, unsigned n, const PointSet& ps, const std::optional<Field>& over) {
  FatPointSystem sys;
  sys.d = d;
  sys.n = n;
  sys.r = ps.points.size();
  sys.field = over ? *over : ps.field;
  if (!sys.field.rational() && sys.field.p <= d && n >= 2)
    throw domain_error("characteristic " + std::to_string(sys.field.p) + " is at most d = " + std::to_string(d) +
                       "; derivative conditions are unreliable");
  const auto cols = exps_of_degree(d);
  sys.monomials = cols.size();
  std::vector<Exp3> betas;
  for (unsigned m = 0; m < n; ++m)
    for (const auto& b : exps_of_degree(m)) betas.push_back(b);
  if (sys.field.rational()) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& pt : ps.points)
      for (const auto& b : betas) {
        std::vector<Rat> row;
        for (const auto& a : cols) row.push_back(Rat(derivative_entry(a, b, pt)));
        rows.push_back(std::move(row));
      }
    sys.conditions_rank = rank_q(std::move(rows));
  } else {
    const u64 p = sys.field.p;
    std::vector<std::vector<u64>> rows;
    for (const auto& pt : ps.points)
      for (const auto& b : betas) {
        std::vector<u64> row;
        for (const auto& a : cols) row.push_back(reduce(derivative_entry(a, b, pt), p));
        rows.push_back(std::move(row));
      }
    sys.conditions_rank = rank_mod_p(std::move(rows), p);
  }
  sys.dim = sys.monomials - sys.conditions_rank;
  return sys;
}

const ScanEntry& ScanGrid::at(unsigned d, unsigned n) const { return entries.at(d * (n_max + 1) + n); }

namespace {

// dims[d][n] for n <= n_max + 1
std::vector<std::vector<std::size_t>> dim_grid(const PointSet& ps, unsigned d_max, unsigned n_max, unsigned jobs) {
  std::vector<std::vector<std::size_t>> g(d_max + 1, std::vector<std::size_t>(n_max + 2));
  std::atomic<unsigned> next{0};
  auto work = [&] {
    for (unsigned d; (d = next++) <= d_max;)
      for (unsigned n = 0; n <= n_max + 1; ++n) g[d][n] = fatpoint_dim(d, n, ps).dim;
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return g;
}

}  // namespace

ScanGrid semigroup_scan(unsigned s, unsigned d_max, unsigned n_max, const std::vector<std::uint64_t>& seeds,
                        const Field& field, unsigned jobs) {
  if (s < 1) throw domain_error("s must be positive");
  if (seeds.empty()) throw domain_error("semigroup_scan needs at least one seed");
  ScanGrid sg;
  sg.s = s;
  sg.d_max = d_max;
  sg.n_max = n_max;
  sg.seeds = seeds;
  const std::size_t r = static_cast<std::size_t>(s) * s;
  std::vector<std::vector<std::vector<std::size_t>>> grids;
  for (auto seed : seeds) grids.push_back(dim_grid(random_points(r, seed, field), d_max, n_max, jobs));
  sg.seed_stable = std::all_of(grids.begin(), grids.end(), [&](const auto& g) { return g == grids[0]; });
  if (!sg.seed_stable) {
    // two more draws, then a per-entry majority
    for (std::uint64_t k = 1; k <= 2; ++k) {
      std::uint64_t extra = seeds.back() + 7919 * k;
      sg.redraws.push_back("seeds disagree; redrew with seed " + std::to_string(extra));
      grids.push_back(dim_grid(random_points(r, extra, field), d_max, n_max, jobs));
    }
  }
  std::vector<std::vector<std::size_t>> dims(d_max + 1, std::vector<std::size_t>(n_max + 2));
  for (unsigned d = 0; d <= d_max; ++d)
    for (unsigned n = 0; n <= n_max + 1; ++n) {
      std::map<std::size_t, int> votes;
      for (const auto& g : grids) ++votes[g[d][n]];
      dims[d][n] = std::max_element(votes.begin(), votes.end(), [](const auto& a, const auto& b) {
                     return a.second < b.second;
                   })->first;
    }
  for (unsigned d = 0; d <= d_max; ++d)
    for (unsigned n = 0; n <= n_max; ++n) {
      ScanEntry e{d, n, dims[d][n], dims[d][n] > dims[d][n + 1]};
      sg.entries.push_back(e);
      const bool below = n >= 1 && d <= n * s;
      if (below) {
        sg.vanishing_below_line = sg.vanishing_below_line && e.dim == 0;
        sg.graded_zero_below_line = sg.graded_zero_below_line && !e.graded_nonzero;
      }
      long expected = static_cast<long>(d) * (d + 3) / 2 - static_cast<long>(r) * n * (n + 1) / 2;
      if (expected >= 0) sg.lower_bound_ok = sg.lower_bound_ok && e.dim > 0;
      sg.monotone = sg.monotone && dims[d][n + 1] <= dims[d][n] && (d == 0 || dims[d - 1][n] <= dims[d][n]);
      if (n >= 1 && e.graded_nonzero) {
        Rat ratio(Rat(d) / n);
        if (!sg.min_ratio || ratio < *sg.min_ratio) sg.min_ratio = ratio;
        sg.nonzero_above_line = sg.nonzero_above_line && d > n * s;
      }
    }
  return sg;
}

json ScanGrid::to_json() const {
  json grid = json::array();
  for (const auto& e : entries)
    grid.push_back(json{{"d", e.d}, {"n", e.n}, {"dim", e.dim}, {"graded_nonzero", e.graded_nonzero}});
  json j{{"s", s},
         {"r", s * s},
         {"d_max", d_max},
         {"n_max", n_max},
         {"seeds", seeds},
         {"grid", grid},
         {"seed_stable", seed_stable},
         {"redraws", redraws},
         {"vanishing_below_line", vanishing_below_line},
         {"graded_zero_below_line", graded_zero_below_line},
         {"lower_bound_ok", lower_bound_ok},
         {"monotone", monotone},
         {"nonzero_above_line", nonzero_above_line}};
  j["min_ratio"] = min_ratio ? rat_json(*min_ratio) : json(nullptr);
  return j;
}

}  // namespace valsg
