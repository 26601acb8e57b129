#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sunchaser/errors.hpp"

namespace sunchaser {

/// Unordered pair of cycle positions, normalized so that a < b.
struct Chord {
  int a = 0;
  int b = 0;

  Chord() = default;
  Chord(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

std::string to_string(const Chord& c);

/// A triangulated polygon: the cycle 0..n-1 (implicit, never stored) plus
/// exactly n-3 pairwise non-crossing chords, kept sorted. Immutable after
/// construction; `make` either returns a fully validated value or throws an
/// Error naming the first violated invariant.
class OuterplanarTriangulation {
 public:
  static OuterplanarTriangulation make(int n, std::vector<Chord> chords);

  int order() const { return n_; }
  const std::vector<Chord>& chords() const { return chords_; }

  bool has_chord(const Chord& c) const;
  /// True for cycle edges and chords alike.
  bool has_edge(int u, int v) const;

  /// Sorted neighbor lists over cycle edges plus chords.
  std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const OuterplanarTriangulation&, const OuterplanarTriangulation&) = default;

 private:
  OuterplanarTriangulation(int n, std::vector<Chord> chords)
      : n_(n), chords_(std::move(chords)) {}

  int n_ = 0;
  std::vector<Chord> chords_;
};

/// The two cycle-arc lengths cut off by a chord; they sum to n and each is >= 2.
/// `side_lengths[0]` is the ascending arc a -> b, `side_lengths[1]` the other.
struct ChordLengths {
  Chord chord;
  std::array<int, 2> side_lengths{};
};

ChordLengths chord_lengths(const OuterplanarTriangulation& g, const Chord& chord);

/// Tree over the n-2 bounded triangular faces; two faces are adjacent exactly
/// when they share a chord.
struct WeakDualTree {
  std::vector<std::array<int, 3>> faces;      // sorted triples, lexicographic order
  std::vector<std::pair<int, int>> edges;     // face-index pairs, first < second
  std::vector<Chord> edge_chords;             // shared chord per dual edge
  std::vector<std::vector<int>> adjacency;    // face index -> adjacent face indices
};

WeakDualTree weak_dual(const OuterplanarTriangulation& g);

std::vector<int> vertex_degrees(const OuterplanarTriangulation& g);

/// One side of a chord cut, relabeled 0..m-1 along its arc. `to_parent[i]` is
/// the original label of piece vertex i.
struct CutPiece {
  OuterplanarTriangulation graph;
  std::vector<int> to_parent;
};

/// Splits g at a chord into the two triangulations it bounds. The first piece
/// covers the ascending arc a..b, the second the arc b..a; both carry the cut
/// chord as the cycle edge {m-1, 0}.
std::pair<CutPiece, CutPiece> cut_along_chord(const OuterplanarTriangulation& g,
                                              const Chord& chord);

enum class EdgeGlue {
  /// Endpoints are identified crosswise (the step u->u+1 of one boundary runs
  /// against the step of the other). This is the inverse of cut_along_chord.
  opposed,
  /// Second graph is reflected first, so the steps run the same way.
  aligned,
};

struct MergeResult {
  OuterplanarTriangulation graph;
  std::vector<int> from_first;   // g1 vertex -> merged vertex
  std::vector<int> from_second;  // g2 vertex -> merged vertex
};

/// Glues g1 and g2 along boundary (cycle) edges, producing the order
/// |g1|+|g2|-2 triangulation in which the identified edge becomes a chord.
MergeResult merge_on_edge(const OuterplanarTriangulation& g1, const Chord& e1,
                          const OuterplanarTriangulation& g2, const Chord& e2,
                          EdgeGlue orientation = EdgeGlue::opposed);

/// A sphere triangulation with a distinguished Hamiltonian cycle, stored as
/// two chord-disjoint polygon triangulations over the same cycle.
class HamiltonianTriangulation {
 public:
  static HamiltonianTriangulation make(int n, std::vector<Chord> inner, std::vector<Chord> outer);

  int order() const { return n_; }
  const OuterplanarTriangulation& inner() const { return inner_; }
  const OuterplanarTriangulation& outer() const { return outer_; }

  /// 3n-6 edges in total.
  std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const HamiltonianTriangulation&, const HamiltonianTriangulation&) = default;

 private:
  HamiltonianTriangulation(OuterplanarTriangulation inner, OuterplanarTriangulation outer)
      : n_(inner.order()), inner_(std::move(inner)), outer_(std::move(outer)) {}

  int n_;
  OuterplanarTriangulation inner_;
  OuterplanarTriangulation outer_;
};

HamiltonianTriangulation glue(const OuterplanarTriangulation& inner,
                              const OuterplanarTriangulation& outer);

/// Piece attached at one side of the deleted triangle face xyz. Order 2 means
/// the degenerate single-edge piece; only then is `graph` empty.
struct SidePiece {
  int order = 0;
  std::vector<int> to_parent;                    // piece label -> parent label
  std::optional<OuterplanarTriangulation> graph; // present iff order >= 3
};

/// Decomposition induced by a chord xy one of whose sides has length 4: the
/// cut-off pentagon (labeled x,p,q,r,y with q adjacent to both x and y), the
/// apex z of the face on xy outside the pentagon, and the two pieces hanging
/// off the edges zx and zy. Roles are assigned so that |G'| <= |G''|.
struct ShortChordDecomposition {
  Chord xy;
  int x = 0, y = 0, z = 0;
  int p = 0, q = 0, r = 0;
  CutPiece g5;               // labels 0..4 = x,p,q,r,y
  SidePiece g_prime;         // labels 0..m'-1 = z,...,x
  SidePiece g_double_prime;  // labels 0..m''-1 = y,...,z
  std::pair<int, int> orders;
};

ShortChordDecomposition short_chord_decomposition(const OuterplanarTriangulation& g,
                                                  const Chord& xy);

}  // namespace sunchaser
