#include "sunchaser/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>
#include <thread>

#include "sunchaser/generate.hpp"
#include "sunchaser/recognize.hpp"

namespace sunchaser {

namespace {

struct Search {
  const std::vector<std::vector<int>>& adj;
  int n;
  int k;
  std::uint32_t full;
  std::vector<std::uint8_t> colors;
  std::vector<std::uint32_t> seen;       // color bits present in each open neighborhood
  std::vector<std::array<int, 32>> cnt;  // per-vertex count of neighbors per color
  std::vector<int> uncolored;            // uncolored neighbors per vertex

  explicit Search(const std::vector<std::vector<int>>& adjacency, int classes)
      : adj(adjacency),
        n(static_cast<int>(adjacency.size())),
        k(classes),
        full((1u << classes) - 1),
        colors(n, 0),
        seen(n, 0),
        cnt(n),
        uncolored(n) {
    for (auto& row : cnt) row.fill(0);
    for (int v = 0; v < n; ++v) uncolored[v] = static_cast<int>(adj[v].size());
  }

  bool feasible(int v) const {
    const int missing = k - std::popcount(seen[v]);
    return missing <= uncolored[v];
  }

  bool assign(int i) {
    if (i == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u : adj[i]) {
        --uncolored[u];
        seen[u] |= 1u << c;
        ++cnt[u][c];
      }
      for (int u : adj[i])
        if (!feasible(u)) {
          ok = false;
          break;
        }
      if (ok && feasible(i)) {
        colors[i] = static_cast<std::uint8_t>(c);
        if (assign(i + 1)) return true;
      }
      for (int u : adj[i]) {
        ++uncolored[u];
        if (--cnt[u][c] == 0) seen[u] &= ~(1u << c);
      }
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> brute_force_coupon(const std::vector<std::vector<int>>& adjacency, int k) {
  const int n = static_cast<int>(adjacency.size());
  if (k < 1 || k > 31) fail(Errc::too_large, "class count k = " + std::to_string(k));
  if ((k <= 2 && n > 26) || (k >= 3 && n > 15))
    fail(Errc::too_large,
         "n = " + std::to_string(n) + " above the exhaustive cap for k = " + std::to_string(k));
  for (const auto& row : adjacency)
    if (static_cast<int>(row.size()) < k) return std::nullopt;  // cannot see k classes
  if (k == 1) {
    // Any graph without isolated vertices is 1-coupon-colorable.
    return Coloring{1, std::vector<std::uint8_t>(n, 0)};
  }
  Search search(adjacency, k);
  if (!search.assign(0)) return std::nullopt;
  return Coloring{k, std::move(search.colors)};
}

std::optional<Coloring> brute_force_coupon(const OuterplanarTriangulation& g, int k) {
  return brute_force_coupon(g.adjacency(), k);
}

std::optional<Coloring> brute_force_coupon(const HamiltonianTriangulation& g, int k) {
  return brute_force_coupon(g.adjacency(), k);
}

int total_domatic_number(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > 15) fail(Errc::too_large, "n = " + std::to_string(n) + " above the domatic cap 15");
  int min_degree = n;
  for (const auto& row : adjacency) min_degree = std::min(min_degree, static_cast<int>(row.size()));
  // A vertex cannot see more classes than it has neighbors.
  for (int k = min_degree; k >= 2; --k)
    if (brute_force_coupon(adjacency, k)) return k;
  return 1;
}

int total_domatic_number(const OuterplanarTriangulation& g) {
  return total_domatic_number(g.adjacency());
}

int total_domatic_number(const HamiltonianTriangulation& g) {
  return total_domatic_number(g.adjacency());
}

namespace {

std::string chords_key(const OuterplanarTriangulation& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " chords=";
  for (const Chord& c : g.chords()) out << "[" << c.a << "," << c.b << "]";
  return out.str();
}

}  // namespace

CheckReport check_characterization(int n, int jobs) {
  if (n < 4 || n > 14)
    fail(Errc::cap_exceeded, "check_characterization covers 4 <= n <= 14, got " + std::to_string(n));
  jobs = std::max(1, jobs);

  struct Partial {
    std::uint64_t total = 0, suns = 0, colorable = 0;
    std::vector<std::string> discrepancies;
  };
  std::vector<Partial> partials(jobs);

  auto worker = [&](int shard) {
    Partial& p = partials[shard];
    std::uint64_t index = 0;
    enumerate_triangulations(n, [&](const OuterplanarTriangulation& g) {
      if (index++ % static_cast<std::uint64_t>(jobs) != static_cast<std::uint64_t>(shard))
        return true;
      ++p.total;
      const bool sun = classify_generalized_sun(g).is_generalized_sun;
      const bool sat = brute_force_coupon(g, 2).has_value();
      const ColoringOutcome out = color_outerplanar(g);
      if (sun) ++p.suns;
      if (out.colored()) ++p.colorable;
      if (sat == sun || out.colored() != sat) {
        std::ostringstream why;
        why << chords_key(g) << " oracle=" << (sat ? "sat" : "unsat")
            << " recognizer=" << (sun ? "sun" : "plain")
            << " constructive=" << (out.colored() ? "colored" : "witness");
        p.discrepancies.push_back(why.str());
      }
      return true;
    });
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int shard = 0; shard < jobs; ++shard) threads.emplace_back(worker, shard);
    for (auto& t : threads) t.join();
  }

  CheckReport report;
  report.n = n;
  for (Partial& p : partials) {
    report.total += p.total;
    report.generalized_suns += p.suns;
    report.colorable += p.colorable;
    for (auto& d : p.discrepancies) report.discrepancies.push_back(std::move(d));
  }
  std::sort(report.discrepancies.begin(), report.discrepancies.end());
  return report;
}

}  // namespace sunchaser
