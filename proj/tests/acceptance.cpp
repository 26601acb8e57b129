// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Exhaustive sweeps run on up to four worker threads.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sunchaser/color.hpp"
#include "sunchaser/generate.hpp"
#include "sunchaser/graph.hpp"
#include "sunchaser/oracle.hpp"
#include "sunchaser/recognize.hpp"

using namespace sunchaser;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail << "\n";
  std::cout.flush();
  if (!pass) ++failures;
}

int worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(hw == 0 ? 1 : std::min(hw, 4u));
}

void parallel_shards(int jobs, const std::function<void(int)>& body) {
  if (jobs <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int shard = 0; shard < jobs; ++shard) threads.emplace_back(body, shard);
  for (auto& t : threads) t.join();
}

double elapsed_s(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Per-order tallies of the full n = 3..14 sweep (criteria 1, 2, 4, 5, 7).
struct SweepStats {
  std::uint64_t total = 0;
  std::uint64_t gen_suns = 0;
  std::uint64_t oracle_sat = 0;
  std::uint64_t colored = 0;
  std::uint64_t equivalence_breaks = 0;  // criterion 1
  std::uint64_t dual_breaks = 0;         // criterion 4
  std::uint64_t lemma_breaks = 0;        // criterion 4
  std::uint64_t central_breaks = 0;      // criterion 5
  std::uint64_t augment_breaks = 0;      // criterion 7
  std::vector<std::string> notes;

  void merge(const SweepStats& other) {
    total += other.total;
    gen_suns += other.gen_suns;
    oracle_sat += other.oracle_sat;
    colored += other.colored;
    equivalence_breaks += other.equivalence_breaks;
    dual_breaks += other.dual_breaks;
    lemma_breaks += other.lemma_breaks;
    central_breaks += other.central_breaks;
    augment_breaks += other.augment_breaks;
    for (const auto& n : other.notes) notes.push_back(n);
  }
};

std::string describe(const OuterplanarTriangulation& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " chords=";
  for (const Chord& c : g.chords()) out << "[" << c.a << "," << c.b << "]";
  return out.str();
}

void note(SweepStats& stats, const OuterplanarTriangulation& g, const char* what) {
  if (stats.notes.size() < 5) stats.notes.push_back(std::string(what) + " at " + describe(g));
}

void sweep_one(const OuterplanarTriangulation& g, SweepStats& stats) {
  const int n = g.order();
  ++stats.total;

  const WeakDualTree dual = weak_dual(g);
  int leaves = 0;
  int max_degree = 0;
  for (const auto& row : dual.adjacency) {
    max_degree = std::max(max_degree, static_cast<int>(row.size()));
    if (row.size() <= 1) ++leaves;
  }
  if (static_cast<int>(dual.faces.size()) != n - 2 || max_degree > 3 || 2 * leaves > n) {
    ++stats.dual_breaks;
    note(stats, g, "weak dual invariant");
  }

  try {
    if (n >= 6) {
      const ShortChord sc = find_short_chord(g);
      if (sc.side_length != 3 && sc.side_length != 4) throw Error(Errc::internal_contradiction, "");
    }
    if (n >= 5) find_reduction_face(g);
  } catch (const Error&) {
    ++stats.lemma_breaks;
    note(stats, g, "lemma finder");
  }

  if (n < 4) return;

  const SunVerdict verdict = classify_generalized_sun(g);
  const bool sat = brute_force_coupon(g, 2).has_value();
  bool colored = false;
  bool colored_ok = false;
  try {
    const ColoringOutcome outcome = color_outerplanar(g);
    colored = outcome.colored();
    colored_ok = !colored || verify_coupon(g, *outcome.coloring).valid;
  } catch (const Error&) {
    colored_ok = false;
  }
  if (verdict.is_generalized_sun) ++stats.gen_suns;
  if (sat) ++stats.oracle_sat;
  if (colored) ++stats.colored;
  if (sat == verdict.is_generalized_sun || colored != sat || !colored_ok) {
    ++stats.equivalence_breaks;
    note(stats, g, "characterization equivalence");
  }

  if (verdict.is_generalized_sun) {
    const int k = (n - 2) / 4;
    if (central_chord_count(g) > k - 1 || verdict.degree_two.size() <= verdict.central.size()) {
      ++stats.central_breaks;
      note(stats, g, "central-chord bound");
    }
    try {
      const Augmentation aug = augment_generalized_sun(g);
      auto adj = g.adjacency();
      const int u = aug.added_edge.a;
      const int v = aug.added_edge.b;
      adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
      adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
      const bool ok = !classify_generalized_sun(aug.exchanged).is_generalized_sun &&
                      verify_coupon(aug.exchanged, aug.coloring).valid &&
                      verify_coupon(adj, aug.coloring).valid;
      if (!ok) throw Error(Errc::internal_contradiction, "");
    } catch (const Error&) {
      ++stats.augment_breaks;
      note(stats, g, "augmentation");
    }
  }
}

SweepStats sweep_order(int n, int jobs) {
  std::vector<SweepStats> partial(jobs);
  parallel_shards(jobs, [&](int shard) {
    std::uint64_t index = 0;
    enumerate_triangulations(n, [&](const OuterplanarTriangulation& g) {
      if (index++ % static_cast<std::uint64_t>(jobs) == static_cast<std::uint64_t>(shard))
        sweep_one(g, partial[shard]);
      return true;
    });
  });
  SweepStats stats;
  for (const auto& p : partial) stats.merge(p);
  return stats;
}

}  // namespace

int main() {
  const int jobs = worker_count();
  std::cout << "acceptance suite, " << jobs << " worker(s)\n";

  // ---- criteria 1, 2, 4, 5, 7: one exhaustive sweep over n = 3..14 --------
  const auto sweep_started = Clock::now();
  std::map<int, SweepStats> stats;
  for (int n = 3; n <= 14; ++n) stats[n] = sweep_order(n, jobs);
  const double sweep_elapsed = elapsed_s(sweep_started);

  {
    std::uint64_t graphs = 0, breaks = 0;
    for (int n = 4; n <= 14; ++n) {
      graphs += stats[n].total;
      breaks += stats[n].equivalence_breaks;
    }
    std::ostringstream detail;
    detail << "characterization equivalence on " << graphs << " graphs (n=4..14), " << breaks
           << " discrepancies, " << sweep_elapsed << "s";
    for (int n = 4; n <= 14; ++n)
      for (const auto& msg : stats[n].notes) detail << "\n      " << msg;
    report(1, breaks == 0 && sweep_elapsed <= 600.0, detail.str());
  }

  {
    bool counts_ok = true;
    for (int n = 3; n <= 14; ++n) {
      if (stats[n].total != catalan(n - 2)) counts_ok = false;
      if (n % 4 != 2 && stats[n].gen_suns != 0) counts_ok = false;
      if (n == 6 && stats[n].gen_suns != 2) counts_ok = false;
    }
    std::ostringstream detail;
    detail << "totals match catalan(n-2) for n=3..14; generalized suns: 2 at n=6"
           << ", " << stats[10].gen_suns << " at n=10, " << stats[14].gen_suns
           << " at n=14, 0 elsewhere";
    report(2, counts_ok, detail.str());
  }

  {
    std::uint64_t checked = 0, sat_breaks = 0;
    auto expect_unsat = [&](const OuterplanarTriangulation& g) {
      ++checked;
      if (brute_force_coupon(g, 2)) ++sat_breaks;
    };
    expect_unsat(sun_of(fan(3)));
    expect_unsat(sun_of(fan(5)));
    for (int m : {3, 5, 7})
      enumerate_triangulations(m, [&](const OuterplanarTriangulation& h) {
        expect_unsat(sun_of(h));
        return true;
      });
    for (int k = 1; k <= 3; ++k) expect_unsat(parasol(k));
    std::ostringstream detail;
    detail << "proposition: " << checked << " generalized-sun instances all Unsat, "
           << sat_breaks << " failures";
    report(3, sat_breaks == 0, detail.str());
  }

  {
    std::uint64_t dual_breaks = 0, lemma_breaks = 0;
    for (int n = 3; n <= 14; ++n) {
      dual_breaks += stats[n].dual_breaks;
      lemma_breaks += stats[n].lemma_breaks;
    }
    std::ostringstream detail;
    detail << "lemmas exhaustive n<=14: short-chord and reduction-face finders, weak-dual "
              "invariants; "
           << dual_breaks + lemma_breaks << " failures";
    report(4, dual_breaks + lemma_breaks == 0, detail.str());
  }

  {
    std::uint64_t central_breaks = 0;
    for (int n = 3; n <= 14; ++n) central_breaks += stats[n].central_breaks;
    bool parasol_sharp = true;
    for (int k = 1; k <= 10; ++k)
      if (central_chord_count(parasol(k)) != k - 1) parasol_sharp = false;
    std::ostringstream detail;
    detail << "central-chord bound <= k-1 on every generalized sun (n<=14), sharp on parasol "
              "k=1..10, degree-2 excess everywhere; "
           << central_breaks << " failures";
    report(5, central_breaks == 0 && parasol_sharp, detail.str());
  }

  // ---- criterion 6: Hamiltonian theorem ------------------------------------
  {
    const auto started = Clock::now();
    std::atomic<std::uint64_t> pairs{0}, colored{0}, breaks{0};
    for (int n = 4; n <= 10; ++n) {
      std::vector<OuterplanarTriangulation> all;
      enumerate_triangulations(n, [&](const OuterplanarTriangulation& g) {
        all.push_back(g);
        return true;
      });
      parallel_shards(jobs, [&](int shard) {
        for (std::size_t i = shard; i < all.size(); i += jobs) {
          for (const auto& second : all) {
            std::vector<Chord> shared;
            std::set_intersection(all[i].chords().begin(), all[i].chords().end(),
                                  second.chords().begin(), second.chords().end(),
                                  std::back_inserter(shared));
            if (!shared.empty()) continue;
            ++pairs;
            try {
              const HamiltonianTriangulation ht = glue(all[i], second);
              const Coloring c = color_hamiltonian(ht);
              if (!verify_coupon(ht, c).valid) throw Error(Errc::internal_contradiction, "");
              if (!brute_force_coupon(ht, 2)) throw Error(Errc::internal_contradiction, "");
              ++colored;
            } catch (const Error&) {
              ++breaks;
            }
          }
        }
      });
    }

    std::atomic<std::uint64_t> random_ok{0}, random_breaks{0};
    parallel_shards(jobs, [&](int shard) {
      for (int i = shard; i < 10000; i += jobs) {
        const int n = 4 + i % 497;
        try {
          const HamiltonianTriangulation ht = random_hamiltonian(n, 424200 + i);
          const Coloring c = color_hamiltonian(ht);
          if (!verify_coupon(ht, c).valid) throw Error(Errc::internal_contradiction, "");
          ++random_ok;
        } catch (const Error&) {
          ++random_breaks;
        }
      }
    });

    std::ostringstream detail;
    detail << "hamiltonian theorem: " << pairs.load() << " exhaustive chord-disjoint pairs (n<=10) "
           << "and " << random_ok.load() << "/10000 random instances (n<=500) colored, "
           << breaks.load() + random_breaks.load() << " failures, " << elapsed_s(started) << "s";
    report(6, breaks.load() == 0 && random_breaks.load() == 0 && colored.load() == pairs.load() &&
                  random_ok.load() == 10000,
           detail.str());
  }

  {
    std::uint64_t augment_breaks = 0, suns = 0;
    for (int n = 3; n <= 14; ++n) {
      augment_breaks += stats[n].augment_breaks;
      suns += stats[n].gen_suns;
    }
    std::ostringstream detail;
    detail << "augmentation corollary on all " << suns << " generalized suns (n<=14); "
           << augment_breaks << " failures";
    report(7, augment_breaks == 0, detail.str());
  }

  // ---- criterion 8: scale ---------------------------------------------------
  {
    const OuterplanarTriangulation big = random_triangulation(100000, 1);
    const auto started = Clock::now();
    const ColoringOutcome outcome = color_outerplanar(big);
    const double took = elapsed_s(started);
    const bool ok =
        outcome.colored() && verify_coupon(big, *outcome.coloring).valid && took <= 5.0;
    std::ostringstream detail;
    detail << "color_outerplanar on n=100000 took " << took << "s (limit 5s) and verified";
    report(8, ok, detail.str());
  }

  // ---- criterion 9: uniform sampler ----------------------------------------
  {
    std::map<std::vector<Chord>, int> counts;
    constexpr int kDraws = 140000;
    for (int i = 0; i < kDraws; ++i) ++counts[random_triangulation(6, 600000 + i).chords()];
    const double expected = kDraws / 14.0;
    const double sigma = std::sqrt(kDraws * (1.0 / 14.0) * (13.0 / 14.0));
    bool ok = counts.size() == 14;
    double worst = 0;
    for (const auto& [chords, count] : counts) {
      worst = std::max(worst, std::abs(count - expected));
      if (std::abs(count - expected) > 3.0 * sigma) ok = false;
    }
    std::ostringstream detail;
    detail << "n=6 frequency over " << kDraws << " draws: all 14 cells within 3 sigma ("
           << worst << " worst vs " << 3.0 * sigma << " allowed)";
    report(9, ok, detail.str());
  }

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " criterion(s) failed\n";
  return 1;
}
