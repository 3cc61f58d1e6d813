#pragma once

// Plane forms of degree d vanishing to order n at r general points.
//
// Points are drawn pseudo-randomly; ranks are exact over Q or over F_p.

#include <cstdint>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "valsg/json_io.hpp"

namespace valsg {

struct Field {
  std::uint64_t p = 0;  // 0 for Q
  bool rational() const { return p == 0; }
  static Field q() { return Field{0}; }
  static Field prime(std::uint64_t p);  // domain_error unless p is a prime below 2^62
  static Field parse(const std::string& text);  // "q" or "p:<prime>"
  std::string to_string() const;
};

constexpr std::uint64_t default_prime = 2147483647;  // 2^31 - 1

struct PointSet {
  std::vector<std::array<Int, 3>> points;
  std::uint64_t seed = 0;
  Field field;
  json to_json() const;
};

// Over F_p coordinates are uniform in [0, p); over Q they are integers in
// [-2^15, 2^15]. Distinctness (as projective points) is enforced by redrawing.
PointSet random_points(std::size_t r, std::uint64_t seed, const Field& field);

struct FatPointSystem {
  unsigned d = 0, n = 0;
  std::size_t r = 0;
  std::size_t monomials = 0;
  std::size_t conditions_rank = 0;
  std::size_t dim = 0;  // vector-space dimension of the forms
  Field field;
  json to_json() const;
};

// Rank of the conditions "every partial derivative of order < n vanishes at
// every point". `over` overrides the field of the point set (points reduced
// mod p). domain_error when the characteristic is at most d and n >= 2.
FatPointSystem fatpoint_dim(unsigned d, unsigned n, const PointSet& points,
                            const std::optional<Field>& over = std::nullopt);

struct ScanEntry {
  unsigned d = 0, n = 0;
  std::size_t dim = 0;
  bool graded_nonzero = false;  // dim(d, n) > dim(d, n + 1)
};

struct ScanGrid {
  unsigned s = 0, d_max = 0, n_max = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<ScanEntry> entries;  // d-major
  bool seed_stable = true;
  std::vector<std::string> redraws;
  bool vanishing_below_line = true;  // d <= n s, n >= 1: dim = 0
  bool graded_zero_below_line = true;
  bool lower_bound_ok = true;  // d(d+3)/2 - r n(n+1)/2 >= 0 implies dim > 0
  bool monotone = true;
  std::optional<Rat> min_ratio;  // least d/n over nonzero graded pieces, n >= 1
  bool nonzero_above_line = true;  // every nonzero graded piece with n >= 1 has d > n s
  const ScanEntry& at(unsigned d, unsigned n) const;
  json to_json() const;
};

// Scans 0 <= d <= d_max, 0 <= n <= n_max for r = s^2 points, once per seed.
ScanGrid semigroup_scan(unsigned s, unsigned d_max, unsigned n_max, const std::vector<std::uint64_t>& seeds,
                        const Field& field = Field::prime(default_prime), unsigned jobs = 1);

}  // namespace valsg
