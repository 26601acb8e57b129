#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sunchaser/graph.hpp"
#include "sunchaser/recognize.hpp"

namespace sunchaser {

/// Assignment of one of k class labels to each vertex. 0 is white, 1 is black.
struct Coloring {
  int k = 2;
  std::vector<std::uint8_t> colors;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct CouponViolation {
  int vertex = 0;
  std::vector<int> missing_classes;
};

struct CouponVerdict {
  bool valid = false;
  std::vector<CouponViolation> violations;
};

/// Checks that every vertex has a neighbor of every class in its open
/// neighborhood; lists every violator with its missing classes.
CouponVerdict verify_coupon(const std::vector<std::vector<int>>& adjacency, const Coloring& c);
CouponVerdict verify_coupon(const OuterplanarTriangulation& g, const Coloring& c);
CouponVerdict verify_coupon(const HamiltonianTriangulation& g, const Coloring& c);

/// color(v) = white iff (v + phase) mod 4 is 0 or 1. For n == 0 (mod 4) this
/// coupon-colors every triangulation of the cycle: each vertex's two cycle
/// neighbors already carry both colors.
Coloring wwbb_pattern(int n, int phase);

/// Exactly one branch is set: either a verified 2-coloring or the
/// generalized-sun verdict certifying that none exists.
struct ColoringOutcome {
  std::optional<Coloring> coloring;
  std::optional<SunVerdict> witness;

  bool colored() const { return coloring.has_value(); }
};

/// The characterization in constructive form: a generalized sun yields its
/// witness, anything else a verified pair of disjoint total dominating sets.
ColoringOutcome color_outerplanar(const OuterplanarTriangulation& g);

/// Every Hamiltonian maximal planar graph of order >= 4 has total domatic
/// number at least 2; returns a verified witness coloring.
Coloring color_hamiltonian(const HamiltonianTriangulation& ht);

struct Augmentation {
  Chord added_edge;
  OuterplanarTriangulation exchanged;
  Coloring coloring;
};

/// For a generalized sun, exchanges one edge (delete {v-1, v+1}, add {w, v}
/// at the lowest-index degree-2 vertex v) so the result is no longer a
/// generalized sun, and colors it. The coloring is also valid for the graph
/// with {w, v} simply added, which contains the exchanged graph.
Augmentation augment_generalized_sun(const OuterplanarTriangulation& g);

}  // namespace sunchaser
