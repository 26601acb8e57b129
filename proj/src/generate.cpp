#include "sunchaser/generate.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <string>

namespace sunchaser {

std::uint64_t catalan(int k) {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> t{1};
    // C(k+1) = C(k) * 2(2k+1) / (k+2); exact at every step.
    for (int k = 0; k < 35; ++k)
      t.push_back(t.back() / (k + 2) * 2 * (2 * k + 1) +
                  t.back() % (k + 2) * 2 * (2 * k + 1) / (k + 2));
    return t;
  }();
  if (k < 0 || k >= static_cast<int>(table.size()))
    fail(Errc::too_large, "catalan(" + std::to_string(k) + ") outside the 64-bit table");
  return table[k];
}

OuterplanarTriangulation fan(int n) {
  if (n < 3) fail(Errc::order_too_small, "need n >= 3, got n = " + std::to_string(n));
  std::vector<Chord> chords;
  for (int i = 2; i <= n - 2; ++i) chords.emplace_back(0, i);
  return OuterplanarTriangulation::make(n, std::move(chords));
}

OuterplanarTriangulation sun_of(const OuterplanarTriangulation& h) {
  const int m = h.order();
  std::vector<Chord> chords;
  chords.reserve(2 * m - 3);
  for (int i = 0; i < m; ++i) chords.emplace_back(2 * i, (2 * i + 2) % (2 * m));
  for (const Chord& c : h.chords()) chords.emplace_back(2 * c.a, 2 * c.b);
  return OuterplanarTriangulation::make(2 * m, std::move(chords));
}

OuterplanarTriangulation parasol(int k) {
  if (k < 1) fail(Errc::order_too_small, "need k >= 1, got k = " + std::to_string(k));
  std::vector<Chord> chords;
  for (int i = 1; i <= k - 1; ++i) chords.emplace_back(0, 4 * i + 1);
  for (int i = 1; i <= k; ++i) {
    chords.emplace_back(4 * i - 3, 4 * i + 1);
    chords.emplace_back(4 * i - 3, 4 * i - 1);
    chords.emplace_back(4 * i - 1, 4 * i + 1);
  }
  return OuterplanarTriangulation::make(4 * k + 2, std::move(chords));
}

EnumerationCursor::EnumerationCursor(int n, int cap) : n_(n) {
  if (n < 3) fail(Errc::order_too_small, "need n >= 3, got n = " + std::to_string(n));
  if (n > cap)
    fail(Errc::cap_exceeded,
         "n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
}

void EnumerationCursor::apply(int l, int r, int apex) {
  choices_.push_back({l, r, apex, static_cast<std::uint32_t>(chords_.size()),
                      static_cast<std::uint32_t>(work_.size())});
  if (apex - l >= 2) chords_.emplace_back(l, apex);
  if (r - apex >= 2) chords_.emplace_back(apex, r);
  if (r - apex >= 2) work_.emplace_back(apex, r);
  if (apex - l >= 2) work_.emplace_back(l, apex);
}

void EnumerationCursor::descend() {
  while (!work_.empty()) {
    auto [l, r] = work_.back();
    work_.pop_back();
    apply(l, r, l + 1);
  }
}

bool EnumerationCursor::next(OuterplanarTriangulation& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    work_.emplace_back(0, n_ - 1);
    descend();
  } else {
    bool advanced = false;
    while (!choices_.empty()) {
      const Choice c = choices_.back();
      choices_.pop_back();
      chords_.resize(c.chords_mark);
      work_.resize(c.work_mark);  // state right after this segment was popped
      if (c.apex + 1 <= c.r - 1) {
        apply(c.l, c.r, c.apex + 1);
        descend();
        advanced = true;
        break;
      }
      // Apexes exhausted: the segment goes back so undoing the previous
      // choice sees exactly its pre-apply stack.
      work_.emplace_back(c.l, c.r);
    }
    if (!advanced) {
      done_ = true;
      return false;
    }
  }
  out = OuterplanarTriangulation::make(n_, chords_);
  return true;
}

void enumerate_triangulations(int n,
                              const std::function<bool(const OuterplanarTriangulation&)>& visit,
                              int cap) {
  EnumerationCursor cursor(n, cap);
  OuterplanarTriangulation g = fan(3);
  while (cursor.next(g))
    if (!visit(g)) return;
}

namespace {

// Unbiased draw from [0, bound); mt19937_64's output sequence is pinned by
// the standard, so results are reproducible across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Uniform plane binary tree with `internal` internal nodes, grown by Remy's
// leaf-grafting urn. child[i] holds the encoded children of internal node i:
// internal node j is encoded 2*j, leaf j is encoded 2*j+1.
struct RemyTree {
  std::vector<std::array<int, 2>> child;
  int root;
};

RemyTree remy_tree(int internal, std::mt19937_64& rng) {
  RemyTree t;
  t.child.assign(internal, {-1, -1});
  // Node encoding: 2*i for internal node i, 2*i+1 for leaf i.
  std::vector<int> parent(2 * internal + 2, -1);
  std::vector<int> slot(2 * internal + 2, 0);
  int root = 1;  // single leaf
  for (int k = 0; k < internal; ++k) {
    const int existing = 2 * k + 1;
    const int x_index = static_cast<int>(bounded(rng, existing));
    // Nodes present after k steps: internal 0..k-1, leaves 0..k.
    const int x = x_index < k ? 2 * x_index : 2 * (x_index - k) + 1;
    const int side = static_cast<int>(bounded(rng, 2));
    const int u = 2 * k;                   // new internal node k
    const int new_leaf = 2 * (k + 1) + 1;  // new leaf k+1
    if (parent[x] < 0) {
      root = u;
    } else {
      t.child[parent[x] / 2][slot[x]] = u;
    }
    parent[u] = parent[x];
    slot[u] = slot[x];
    t.child[k][side] = new_leaf;
    t.child[k][1 - side] = x;
    parent[new_leaf] = u;
    slot[new_leaf] = side;
    parent[x] = u;
    slot[x] = 1 - side;
  }
  t.root = root;
  return t;
}

}  // namespace

OuterplanarTriangulation random_triangulation(int n, std::uint64_t seed) {
  if (n < 3) fail(Errc::order_too_small, "need n >= 3, got n = " + std::to_string(n));
  std::mt19937_64 rng(seed);
  const int internal = n - 2;
  const RemyTree tree = remy_tree(internal, rng);

  // Leaf counts per internal node, then arcs: the root spans [0, n-1] and a
  // node spanning [i, j] splits at i + leaves(left child).
  std::vector<int> leaves(internal, 0);
  std::vector<std::pair<int, int>> stack{{tree.root, 0}};
  while (!stack.empty()) {
    auto& [node, phase] = stack.back();
    if (node % 2 == 1) {
      stack.pop_back();
      continue;
    }
    const int id = node / 2;
    if (phase == 0) {
      phase = 1;
      stack.push_back({tree.child[id][0], 0});
    } else if (phase == 1) {
      phase = 2;
      stack.push_back({tree.child[id][1], 0});
    } else {
      auto count = [&](int c) { return c % 2 == 1 ? 1 : leaves[c / 2]; };
      leaves[id] = count(tree.child[id][0]) + count(tree.child[id][1]);
      stack.pop_back();
    }
  }

  std::vector<Chord> chords;
  chords.reserve(n - 3);
  std::vector<std::array<int, 3>> arcs{{tree.root, 0, n - 1}};
  while (!arcs.empty()) {
    auto [node, i, j] = arcs.back();
    arcs.pop_back();
    if (node % 2 == 1) continue;
    const int id = node / 2;
    const int left = tree.child[id][0];
    const int split = i + (left % 2 == 1 ? 1 : leaves[left / 2]);
    if (split - i >= 2) chords.emplace_back(i, split);
    if (j - split >= 2) chords.emplace_back(split, j);
    arcs.push_back({left, i, split});
    arcs.push_back({tree.child[id][1], split, j});
  }
  return OuterplanarTriangulation::make(n, std::move(chords));
}

namespace {

// Triangulates the polygon while avoiding `forbidden`, choosing each apex
// uniformly among the admissible ones. Some apex always remains: blocking
// l+1 needs {l+1, r} in the forbidden set and blocking r-1 needs {l, r-1},
// and those two chords cross.
std::vector<Chord> constrained_triangulation(int n, const std::set<Chord>& forbidden,
                                             std::mt19937_64& rng) {
  std::vector<Chord> chords;
  chords.reserve(n - 3);
  std::vector<std::pair<int, int>> work{{0, n - 1}};
  std::vector<int> apexes;
  while (!work.empty()) {
    auto [l, r] = work.back();
    work.pop_back();
    if (r - l < 2) continue;
    apexes.clear();
    for (int a = l + 1; a < r; ++a) {
      if (a - l >= 2 && forbidden.count(Chord(l, a))) continue;
      if (r - a >= 2 && forbidden.count(Chord(a, r))) continue;
      apexes.push_back(a);
    }
    if (apexes.empty())
      fail(Errc::internal_contradiction, "constrained triangulation has no admissible apex");
    const int a = apexes[bounded(rng, apexes.size())];
    if (a - l >= 2) chords.emplace_back(l, a);
    if (r - a >= 2) chords.emplace_back(a, r);
    work.emplace_back(l, a);
    work.emplace_back(a, r);
  }
  return chords;
}

}  // namespace

HamiltonianTriangulation random_hamiltonian(int n, std::uint64_t seed) {
  if (n < 4) fail(Errc::order_too_small, "need n >= 4, got n = " + std::to_string(n));
  std::mt19937_64 rng(seed);
  constexpr int kRejectionBudget = 64;
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    const OuterplanarTriangulation inner = random_triangulation(n, rng());
    const OuterplanarTriangulation outer = random_triangulation(n, rng());
    std::vector<Chord> shared;
    std::set_intersection(inner.chords().begin(), inner.chords().end(), outer.chords().begin(),
                          outer.chords().end(), std::back_inserter(shared));
    if (shared.empty()) return glue(inner, outer);
  }
  const OuterplanarTriangulation inner = random_triangulation(n, rng());
  const std::set<Chord> forbidden(inner.chords().begin(), inner.chords().end());
  std::vector<Chord> outer_chords = constrained_triangulation(n, forbidden, rng);
  return HamiltonianTriangulation::make(n, inner.chords(), std::move(outer_chords));
}

}  // namespace sunchaser
