#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sunchaser/color.hpp"
#include "sunchaser/graph.hpp"

namespace sunchaser {

/// Exhaustive k-class coupon-coloring by backtracking in cycle order, pruning
/// any vertex whose fully colored neighborhood misses a class. Returns the
/// first coloring in deterministic search order, or nullopt after exhausting
/// the space. Caps: n <= 26 for k <= 2, n <= 15 for k >= 3.
std::optional<Coloring> brute_force_coupon(const std::vector<std::vector<int>>& adjacency, int k);
std::optional<Coloring> brute_force_coupon(const OuterplanarTriangulation& g, int k);
std::optional<Coloring> brute_force_coupon(const HamiltonianTriangulation& g, int k);

/// Largest k admitting a k-class coupon-coloring, probed downward from the
/// minimum degree; at least 1 for every graph without isolated vertices.
/// Caps at n <= 15.
int total_domatic_number(const std::vector<std::vector<int>>& adjacency);
int total_domatic_number(const OuterplanarTriangulation& g);
int total_domatic_number(const HamiltonianTriangulation& g);

struct CheckReport {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t generalized_suns = 0;
  std::uint64_t colorable = 0;
  std::vector<std::string> discrepancies;  // canonical chord lists plus what disagreed
};

/// Streams every labeled triangulation of the n-gon and asserts the three-way
/// equivalence: brute-force 2-colorable <=> not a generalized sun <=>
/// color_outerplanar returns a verified coloring. 4 <= n <= 14.
CheckReport check_characterization(int n, int jobs = 1);

}  // namespace sunchaser
