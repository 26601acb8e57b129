#include "sunchaser/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace sunchaser {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::order_too_small: return "OrderTooSmall";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::degenerate_chord: return "DegenerateChord";
    case Errc::wrong_chord_count: return "WrongChordCount";
    case Errc::crossing_chords: return "CrossingChords";
    case Errc::not_a_chord: return "NotAChord";
    case Errc::not_a_boundary_edge: return "NotABoundaryEdge";
    case Errc::shared_chord: return "SharedChord";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::not_distance_4: return "NotDistance4";
    case Errc::distance_3_chord_exists: return "Distance3ChordExists";
    case Errc::g5_shape_violation: return "G5ShapeViolation";
    case Errc::not_generalized_sun: return "NotGeneralizedSun";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::wrong_residue: return "WrongResidue";
    case Errc::too_large: return "TooLarge";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::retry_limit_exceeded: return "RetryLimitExceeded";
    case Errc::bad_format: return "BadFormat";
    case Errc::usage_error: return "UsageError";
    case Errc::internal_contradiction: return "InternalContradiction";
  }
  return "UnknownError";
}

std::string to_string(const Chord& c) {
  return "{" + std::to_string(c.a) + "," + std::to_string(c.b) + "}";
}

OuterplanarTriangulation OuterplanarTriangulation::make(int n, std::vector<Chord> chords) {
  if (n < 3) fail(Errc::order_too_small, "need n >= 3, got n = " + std::to_string(n));
  for (const Chord& c : chords) {
    if (c.a < 0 || c.b >= n)
      fail(Errc::index_out_of_range, "chord " + to_string(c) + " outside 0.." + std::to_string(n - 1));
    const int gap = c.b - c.a;
    if (gap == 0 || gap == 1 || gap == n - 1)
      fail(Errc::degenerate_chord, "chord " + to_string(c) + " is a cycle edge or self-pair");
  }
  std::sort(chords.begin(), chords.end());
  chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
  if (static_cast<int>(chords.size()) != n - 3)
    fail(Errc::wrong_chord_count, "expected " + std::to_string(n - 3) + ", got " +
                                      std::to_string(chords.size()));
  // Non-crossing <=> the intervals [a,b] form a laminar family. Chords sorted
  // by (a asc, b desc) admit a one-pass stack check.
  std::vector<Chord> by_open = chords;
  std::sort(by_open.begin(), by_open.end(),
            [](const Chord& l, const Chord& r) { return l.a != r.a ? l.a < r.a : l.b > r.b; });
  std::vector<Chord> open;
  for (const Chord& c : by_open) {
    while (!open.empty() && open.back().b <= c.a) open.pop_back();
    if (!open.empty() && c.b > open.back().b)
      fail(Errc::crossing_chords, to_string(open.back()) + " and " + to_string(c) + " interleave");
    open.push_back(c);
  }
  return OuterplanarTriangulation(n, std::move(chords));
}

bool OuterplanarTriangulation::has_chord(const Chord& c) const {
  return std::binary_search(chords_.begin(), chords_.end(), c);
}

bool OuterplanarTriangulation::has_edge(int u, int v) const {
  if (u == v) return false;
  const Chord c(u, v);
  const int gap = c.b - c.a;
  if (gap == 1 || gap == n_ - 1) return true;
  return has_chord(c);
}

std::vector<std::vector<int>> OuterplanarTriangulation::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (int i = 0; i < n_; ++i) {
    adj[i].push_back((i + 1) % n_);
    adj[(i + 1) % n_].push_back(i);
  }
  for (const Chord& c : chords_) {
    adj[c.a].push_back(c.b);
    adj[c.b].push_back(c.a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

ChordLengths chord_lengths(const OuterplanarTriangulation& g, const Chord& chord) {
  if (!g.has_chord(chord))
    fail(Errc::not_a_chord, to_string(chord) + " is not a chord of this graph");
  const int forward = chord.b - chord.a;
  return ChordLengths{chord, {forward, g.order() - forward}};
}

namespace {

// Apex of the triangle on the closing edge {l, r} of segment [l, r]: the
// largest neighbor of l strictly inside (l, r). Any larger neighbor would
// cross the edge {apex, r}.
int segment_apex(const std::vector<std::vector<int>>& adj, int l, int r) {
  const auto& row = adj[l];
  auto it = std::lower_bound(row.begin(), row.end(), r);
  assert(it != row.begin());
  const int a = *(it - 1);
  assert(a > l && a < r);
  return a;
}

}  // namespace

WeakDualTree weak_dual(const OuterplanarTriangulation& g) {
  const int n = g.order();
  const auto adj = g.adjacency();

  std::vector<std::array<int, 3>> faces;
  faces.reserve(n - 2);
  std::vector<std::pair<int, int>> stack{{0, n - 1}};
  while (!stack.empty()) {
    auto [l, r] = stack.back();
    stack.pop_back();
    const int a = segment_apex(adj, l, r);
    faces.push_back({l, a, r});
    if (a - l >= 2) stack.push_back({l, a});
    if (r - a >= 2) stack.push_back({a, r});
  }
  std::sort(faces.begin(), faces.end());

  WeakDualTree dual;
  dual.faces = std::move(faces);
  dual.adjacency.assign(n - 2, {});

  // Each chord is shared by exactly two faces; those pairs are the dual edges.
  const auto& chords = g.chords();
  std::vector<std::pair<int, int>> chord_faces(chords.size(), {-1, -1});
  for (int f = 0; f < static_cast<int>(dual.faces.size()); ++f) {
    const auto& t = dual.faces[f];
    const Chord sides[3] = {Chord(t[0], t[1]), Chord(t[1], t[2]), Chord(t[0], t[2])};
    for (const Chord& s : sides) {
      auto it = std::lower_bound(chords.begin(), chords.end(), s);
      if (it == chords.end() || *it != s) continue;
      auto& slot = chord_faces[it - chords.begin()];
      (slot.first < 0 ? slot.first : slot.second) = f;
    }
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    auto [fa, fb] = chord_faces[i];
    assert(fa >= 0 && fb >= 0);
    if (fa > fb) std::swap(fa, fb);
    dual.edges.emplace_back(fa, fb);
    dual.edge_chords.push_back(chords[i]);
    dual.adjacency[fa].push_back(fb);
    dual.adjacency[fb].push_back(fa);
  }
  for (auto& row : dual.adjacency) std::sort(row.begin(), row.end());
  return dual;
}

std::vector<int> vertex_degrees(const OuterplanarTriangulation& g) {
  std::vector<int> deg(g.order(), 2);
  for (const Chord& c : g.chords()) {
    ++deg[c.a];
    ++deg[c.b];
  }
  assert(std::accumulate(deg.begin(), deg.end(), 0) == 2 * (2 * g.order() - 3));
  return deg;
}

namespace {

// Builds the sub-triangulation over `verts` (the piece's cycle order); its
// closing edge is {verts.back(), verts.front()}. Parent chords strictly
// inside relabel to piece chords.
CutPiece make_piece(const OuterplanarTriangulation& g, std::vector<int> verts) {
  const int n = g.order();
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) inverse[verts[i]] = i;
  const Chord closing(verts.front(), verts.back());
  std::vector<Chord> chords;
  for (const Chord& c : g.chords()) {
    if (c == closing) continue;
    if (inverse[c.a] >= 0 && inverse[c.b] >= 0) chords.emplace_back(inverse[c.a], inverse[c.b]);
  }
  return CutPiece{OuterplanarTriangulation::make(static_cast<int>(verts.size()), std::move(chords)),
                  std::move(verts)};
}

std::vector<int> arc_vertices(int n, int from, int to, int step) {
  std::vector<int> verts;
  for (int v = from;; v = (v + step + n) % n) {
    verts.push_back(v);
    if (v == to) break;
  }
  return verts;
}

}  // namespace

std::pair<CutPiece, CutPiece> cut_along_chord(const OuterplanarTriangulation& g,
                                              const Chord& chord) {
  if (!g.has_chord(chord))
    fail(Errc::not_a_chord, to_string(chord) + " is not a chord of this graph");
  const int n = g.order();
  return {make_piece(g, arc_vertices(n, chord.a, chord.b, +1)),
          make_piece(g, arc_vertices(n, chord.b, chord.a, +1))};
}

namespace {

// The directed step u -> u+1 (mod m) represented by a boundary edge.
int boundary_step(const OuterplanarTriangulation& g, const Chord& e) {
  const int m = g.order();
  if (e.b == e.a + 1) return e.a;
  if (e.a == 0 && e.b == m - 1) return m - 1;
  fail(Errc::not_a_boundary_edge, to_string(e) + " is not a cycle edge of this graph");
}

OuterplanarTriangulation reflect(const OuterplanarTriangulation& g, std::vector<int>& map) {
  const int m = g.order();
  map.resize(m);
  for (int v = 0; v < m; ++v) map[v] = (m - v) % m;
  std::vector<Chord> chords;
  chords.reserve(g.chords().size());
  for (const Chord& c : g.chords()) chords.emplace_back(map[c.a], map[c.b]);
  return OuterplanarTriangulation::make(m, std::move(chords));
}

}  // namespace

MergeResult merge_on_edge(const OuterplanarTriangulation& g1, const Chord& e1,
                          const OuterplanarTriangulation& g2, const Chord& e2,
                          EdgeGlue orientation) {
  if (orientation == EdgeGlue::aligned) {
    std::vector<int> refl;
    const OuterplanarTriangulation g2r = reflect(g2, refl);
    const Chord e2r(refl[e2.a], refl[e2.b]);
    MergeResult res = merge_on_edge(g1, e1, g2r, e2r, EdgeGlue::opposed);
    std::vector<int> from_second(g2.order());
    for (int v = 0; v < g2.order(); ++v) from_second[v] = res.from_second[refl[v]];
    res.from_second = std::move(from_second);
    return res;
  }

  const int m1 = g1.order();
  const int m2 = g2.order();
  const int u1 = boundary_step(g1, e1);
  const int u2 = boundary_step(g2, e2);
  const int m = m1 + m2 - 2;

  // g1's u1 is identified with g2's u2+1 and g1's u1+1 with g2's u2; the
  // merged cycle starts at g1's u1+1 and the shared edge becomes a chord.
  std::vector<int> from_first(m1), from_second(m2);
  for (int v = 0; v < m1; ++v) from_first[v] = (v - (u1 + 1) + m1) % m1;
  for (int v = 0; v < m2; ++v) {
    if (v == u2)
      from_second[v] = 0;
    else if (v == (u2 + 1) % m2)
      from_second[v] = m1 - 1;
    else
      from_second[v] = m1 - 1 + (v - (u2 + 1) + m2) % m2;
  }

  std::vector<Chord> chords;
  chords.reserve(static_cast<std::size_t>(m - 3));
  for (const Chord& c : g1.chords()) chords.emplace_back(from_first[c.a], from_first[c.b]);
  for (const Chord& c : g2.chords()) chords.emplace_back(from_second[c.a], from_second[c.b]);
  chords.emplace_back(0, m1 - 1);

  return MergeResult{OuterplanarTriangulation::make(m, std::move(chords)),
                     std::move(from_first), std::move(from_second)};
}

HamiltonianTriangulation HamiltonianTriangulation::make(int n, std::vector<Chord> inner,
                                                        std::vector<Chord> outer) {
  if (n < 4) fail(Errc::order_too_small, "need n >= 4, got n = " + std::to_string(n));
  OuterplanarTriangulation in = OuterplanarTriangulation::make(n, std::move(inner));
  OuterplanarTriangulation out = OuterplanarTriangulation::make(n, std::move(outer));
  std::vector<Chord> shared;
  std::set_intersection(in.chords().begin(), in.chords().end(), out.chords().begin(),
                        out.chords().end(), std::back_inserter(shared));
  if (!shared.empty())
    fail(Errc::shared_chord, "chord " + to_string(shared.front()) + " appears on both sides");
  HamiltonianTriangulation ht(std::move(in), std::move(out));
  for (const auto& row : ht.adjacency())
    if (row.size() < 3)
      fail(Errc::internal_contradiction, "vertex of total degree < 3 despite disjoint chords");
  return ht;
}

std::vector<std::vector<int>> HamiltonianTriangulation::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (int i = 0; i < n_; ++i) {
    adj[i].push_back((i + 1) % n_);
    adj[(i + 1) % n_].push_back(i);
  }
  for (const OuterplanarTriangulation* side : {&inner_, &outer_})
    for (const Chord& c : side->chords()) {
      adj[c.a].push_back(c.b);
      adj[c.b].push_back(c.a);
    }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

HamiltonianTriangulation glue(const OuterplanarTriangulation& inner,
                              const OuterplanarTriangulation& outer) {
  if (inner.order() != outer.order())
    fail(Errc::size_mismatch, "orders " + std::to_string(inner.order()) + " vs " +
                                  std::to_string(outer.order()));
  return HamiltonianTriangulation::make(inner.order(), inner.chords(), outer.chords());
}

ShortChordDecomposition short_chord_decomposition(const OuterplanarTriangulation& g,
                                                  const Chord& xy) {
  const int n = g.order();
  if (!g.has_chord(xy)) fail(Errc::not_a_chord, to_string(xy) + " is not a chord of this graph");
  for (const Chord& c : g.chords()) {
    const int forward = c.b - c.a;
    if (forward == 3 || n - forward == 3)
      fail(Errc::distance_3_chord_exists, "chord " + to_string(c) + " has a side of length 3");
  }
  const int forward = xy.b - xy.a;
  int pa, pb;  // pentagon arc pa -> pb ascending
  if (forward == 4) {
    pa = xy.a;
    pb = xy.b;
  } else if (n - forward == 4) {
    pa = xy.b;
    pb = xy.a + n;
  } else {
    fail(Errc::not_distance_4, to_string(xy) + " has sides " + std::to_string(forward) + " and " +
                                   std::to_string(n - forward));
  }
  const int mid = (pa + 2) % n;
  if (!g.has_chord(Chord(pa % n, mid)) || !g.has_chord(Chord(mid, pb % n)))
    fail(Errc::g5_shape_violation, "endpoint of " + to_string(xy) + " has degree > 3 in the pentagon");

  // xy has exactly two face apexes; one is the pentagon middle, the other is z.
  int z = -1;
  {
    const auto adj = g.adjacency();
    const auto& ra = adj[xy.a];
    const auto& rb = adj[xy.b];
    std::vector<int> common;
    std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(common));
    for (int v : common)
      if (v != mid) z = v;
  }
  if (z < 0) fail(Errc::internal_contradiction, "no face apex opposite the pentagon");

  const int pa_v = pa % n;
  const int pb_v = pb % n;
  const int size_z_to_pa = (pa_v - z + n) % n + 1;  // piece on {z, pa}
  const int size_pb_to_z = (z - pb_v + n) % n + 1;  // piece on {z, pb}

  int x, y, step;
  if (size_z_to_pa < size_pb_to_z || (size_z_to_pa == size_pb_to_z && pa_v < pb_v)) {
    x = pa_v;
    y = pb_v;
    step = +1;  // pentagon read ascending from x
  } else {
    x = pb_v;
    y = pa_v;
    step = -1;
  }

  auto side_piece = [&](std::vector<int> verts) {
    SidePiece piece;
    piece.order = static_cast<int>(verts.size());
    if (piece.order >= 3) {
      CutPiece cp = make_piece(g, std::move(verts));
      piece.to_parent = std::move(cp.to_parent);
      piece.graph = std::move(cp.graph);
    } else {
      piece.to_parent = std::move(verts);
    }
    return piece;
  };
  // G' runs z -> x away from the pentagon, G'' runs y -> z.
  ShortChordDecomposition d{xy,
                            x,
                            y,
                            z,
                            (x + step + n) % n,
                            (x + 2 * step + n) % n,
                            (x + 3 * step + n) % n,
                            make_piece(g, arc_vertices(n, x, y, step)),
                            side_piece(arc_vertices(n, z, x, step)),
                            side_piece(arc_vertices(n, y, z, step)),
                            {0, 0}};
  d.orders = {d.g_prime.order, d.g_double_prime.order};
  if (d.orders.first > d.orders.second || d.orders.first + d.orders.second != n - 2)
    fail(Errc::internal_contradiction, "inconsistent side piece orders");
  return d;
}

}  // namespace sunchaser
