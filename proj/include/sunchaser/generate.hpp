#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sunchaser/graph.hpp"

namespace sunchaser {

inline constexpr int kDefaultEnumerationCap = 16;

/// Triangulations of the n-gon are counted by catalan(n-2). Defined up to
/// k = 35, the last value that fits in 64 bits.
std::uint64_t catalan(int k);

/// Chords {0,i} for i in 2..n-2: k copies of a triangle joined in vertex 0.
OuterplanarTriangulation fan(int n);

/// Attaches a new degree-2 ear to every boundary edge of h. Original
/// vertices land on even positions 2i, ears on odd; the result has order 2|h|.
OuterplanarTriangulation sun_of(const OuterplanarTriangulation& h);

/// The canonical parasol of order 4k+2: a k-fan centered at vertex 0 with a
/// 5-vertex triangulation glued onto each fan triangle's outer edge. Copy i
/// (1-based) occupies positions 4i-3..4i+1 with its degree-4 vertex at 4i-1.
OuterplanarTriangulation parasol(int k);

/// Streams every labeled triangulation of the n-gon exactly once, in the
/// lexicographic order of apex choices of the recursion that fixes the
/// triangle on cycle edge {n-1, 0}. Resumable: next() returns false at end.
class EnumerationCursor {
 public:
  explicit EnumerationCursor(int n, int cap = kDefaultEnumerationCap);

  int order() const { return n_; }

  /// Advances to the next triangulation; false once all catalan(n-2) have
  /// been produced.
  bool next(OuterplanarTriangulation& out);

 private:
  struct Choice {
    int l, r, apex;
    std::uint32_t chords_mark;
    std::uint32_t work_mark;
  };

  void apply(int l, int r, int apex);
  void descend();

  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::pair<int, int>> work_;
  std::vector<Choice> choices_;
  std::vector<Chord> chords_;
};

/// Convenience wrapper over EnumerationCursor; stops early when the visitor
/// returns false.
void enumerate_triangulations(int n, const std::function<bool(const OuterplanarTriangulation&)>& visit,
                              int cap = kDefaultEnumerationCap);

/// Uniform over all labeled triangulations of the n-gon, deterministic per
/// seed (Remy-grown uniform binary tree mapped through the standard
/// tree/triangulation bijection).
OuterplanarTriangulation random_triangulation(int n, std::uint64_t seed);

/// Two chord-disjoint random triangulations glued on the shared cycle.
/// Rejection sampling (uniform over disjoint pairs) is attempted first, but
/// disjointness becomes exponentially rare as n grows, so once the retry
/// budget is exhausted the outer half is drawn by apex recursion restricted
/// to chords the inner half does not use, which always completes.
HamiltonianTriangulation random_hamiltonian(int n, std::uint64_t seed);

}  // namespace sunchaser
