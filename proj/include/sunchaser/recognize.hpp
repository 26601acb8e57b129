#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sunchaser/graph.hpp"

namespace sunchaser {

/// Recognizer output for the generalized-sun check, with the witnessing
/// vertex sets. degree_two and central are always disjoint: a degree-2 vertex
/// sits in its own closed neighborhood, so it can never be central.
struct SunVerdict {
  bool is_generalized_sun = false;
  std::vector<int> degree_two;
  std::vector<int> central;
  int n_mod_4 = 0;
  /// Cycle parity class occupied by degree_two + central; set iff generalized sun.
  std::optional<int> special_parity;
};

std::vector<int> degree_two_vertices(const OuterplanarTriangulation& g);

/// A vertex v is central when no vertex of N[v] has degree 2 and, indexing
/// the cycle from v, every neighbor of v sits at a position == 1 (mod 4).
/// Empty whenever n != 2 (mod 4): the two cycle neighbors sit at positions 1
/// and n-1, congruent mod 4 only then.
std::vector<int> central_vertices(const OuterplanarTriangulation& g);

SunVerdict classify_generalized_sun(const OuterplanarTriangulation& g);

struct ShortChord {
  Chord chord;
  int side_length = 0;  // 3 or 4
  bool forward_arc = false;  // true if the qualifying arc is the ascending a -> b
};

/// A chord one of whose arcs has length 3 or 4; exists for every n >= 6.
/// Tie-break: shortest qualifying arc, then lexicographically smallest chord.
ShortChord find_short_chord(const OuterplanarTriangulation& g);

/// A bounded face whose removal from the weak dual leaves at most one
/// component of order > 3 and at least one of order 2 or 3; exists for every
/// n >= 5. Returns the lexicographically smallest such face.
std::array<int, 3> find_reduction_face(const OuterplanarTriangulation& g);

/// Number of chords with at least one central endpoint; at most k-1 in a
/// generalized sun of order 4k+2.
int central_chord_count(const OuterplanarTriangulation& g);

}  // namespace sunchaser
