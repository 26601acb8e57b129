#include "sunchaser/recognize.hpp"

#include <algorithm>
#include <string>

namespace sunchaser {

std::vector<int> degree_two_vertices(const OuterplanarTriangulation& g) {
  const auto deg = vertex_degrees(g);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (deg[v] == 2) out.push_back(v);
  return out;
}

std::vector<int> central_vertices(const OuterplanarTriangulation& g) {
  const int n = g.order();
  if (n % 4 != 2) return {};
  const auto adj = g.adjacency();
  const auto deg = vertex_degrees(g);
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 2) continue;
    bool central = true;
    for (int u : adj[v]) {
      if (deg[u] == 2 || ((u - v + n) % n) % 4 != 1) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(v);
  }
  return out;
}

SunVerdict classify_generalized_sun(const OuterplanarTriangulation& g) {
  const int n = g.order();
  if (n < 4) fail(Errc::order_too_small, "need n >= 4, got n = " + std::to_string(n));
  SunVerdict v;
  v.degree_two = degree_two_vertices(g);
  v.central = central_vertices(g);
  v.n_mod_4 = n % 4;
  v.is_generalized_sun =
      n % 4 == 2 &&
      static_cast<int>(v.degree_two.size() + v.central.size()) == n / 2;
  if (v.is_generalized_sun) {
    // Every second vertex of the cycle is special, so the special vertices
    // fill exactly one parity class.
    const int parity = (v.degree_two.empty() ? v.central.front() : v.degree_two.front()) % 2;
    for (const auto* set : {&v.degree_two, &v.central})
      for (int u : *set)
        if (u % 2 != parity)
          fail(Errc::internal_contradiction,
               "special vertices of a generalized sun do not fill one parity class");
    v.special_parity = parity;
  }
  return v;
}

ShortChord find_short_chord(const OuterplanarTriangulation& g) {
  const int n = g.order();
  if (n < 6) fail(Errc::order_too_small, "need n >= 6, got n = " + std::to_string(n));
  std::optional<ShortChord> best;
  for (const Chord& c : g.chords()) {
    const int forward = c.b - c.a;
    for (int len : {3, 4}) {
      if (forward != len && n - forward != len) continue;
      ShortChord cand{c, len, forward == len};
      if (!best || len < best->side_length) best = cand;
      break;  // chords are scanned in sorted order, so the first hit per length wins
    }
    if (best && best->side_length == 3) break;
  }
  if (!best)
    fail(Errc::internal_contradiction,
         "no chord of length 3 or 4 in a triangulation of order " + std::to_string(n));
  return *best;
}

std::array<int, 3> find_reduction_face(const OuterplanarTriangulation& g) {
  const int n = g.order();
  if (n < 5) fail(Errc::order_too_small, "need n >= 5, got n = " + std::to_string(n));
  const WeakDualTree dual = weak_dual(g);
  const int faces = static_cast<int>(dual.faces.size());
  std::vector<int> component(faces);
  for (int f = 0; f < faces; ++f) {
    // Component sizes of the dual tree with f removed.
    std::fill(component.begin(), component.end(), -1);
    component[f] = -2;
    int oversized = 0;
    bool has_small = false;
    for (int root : dual.adjacency[f]) {
      int size = 0;
      std::vector<int> queue{root};
      component[root] = root;
      while (!queue.empty()) {
        const int cur = queue.back();
        queue.pop_back();
        ++size;
        for (int next : dual.adjacency[cur])
          if (component[next] == -1) {
            component[next] = root;
            queue.push_back(next);
          }
      }
      if (size > 3) ++oversized;
      if (size == 2 || size == 3) has_small = true;
    }
    if (oversized <= 1 && has_small) return dual.faces[f];
  }
  fail(Errc::internal_contradiction,
       "no reduction face in a triangulation of order " + std::to_string(n));
}

int central_chord_count(const OuterplanarTriangulation& g) {
  const SunVerdict verdict = classify_generalized_sun(g);
  if (!verdict.is_generalized_sun)
    fail(Errc::not_generalized_sun, "central_chord_count requires a generalized sun");
  std::vector<bool> central(g.order(), false);
  for (int v : verdict.central) central[v] = true;
  int count = 0;
  for (const Chord& c : g.chords())
    if (central[c.a] || central[c.b]) ++count;
  return count;
}

}  // namespace sunchaser
