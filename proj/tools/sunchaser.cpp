// Command-line front end: generators, classifiers, colorers, the exhaustive
// checker, and format conversion over the JSON graph format.

#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sunchaser/color.hpp"
#include "sunchaser/generate.hpp"
#include "sunchaser/io.hpp"
#include "sunchaser/oracle.hpp"
#include "sunchaser/recognize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitWitness = 2;

int enumeration_cap() {
  if (const char* env = std::getenv("SUNCHASER_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      sunchaser::fail(sunchaser::Errc::usage_error,
                      "SUNCHASER_MAX_N must be an integer, got \"" + std::string(env) + "\"");
    }
  }
  return sunchaser::kDefaultEnumerationCap;
}

void parse_shard(const std::string& text, int& shard, int& shards) {
  const auto slash = text.find('/');
  bool ok = slash != std::string::npos;
  if (ok) {
    try {
      shard = std::stoi(text.substr(0, slash));
      shards = std::stoi(text.substr(slash + 1));
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (!ok || shard < 0 || shards < 1 || shard >= shards)
    sunchaser::fail(sunchaser::Errc::usage_error, "--shard expects i/m, got \"" + text + "\"");
}

// Bounded FIFO of serialized lines, one per worker; an empty optional marks
// the end of that worker's share.
class LineQueue {
 public:
  void push(std::optional<std::string> line) {
    std::unique_lock lock(mutex_);
    space_.wait(lock, [&] { return lines_.size() < kCapacity; });
    lines_.push_back(std::move(line));
    ready_.notify_one();
  }

  std::optional<std::string> pop() {
    std::unique_lock lock(mutex_);
    ready_.wait(lock, [&] { return !lines_.empty(); });
    auto line = std::move(lines_.front());
    lines_.pop_front();
    space_.notify_one();
    return line;
  }

 private:
  static constexpr std::size_t kCapacity = 1024;
  std::mutex mutex_;
  std::condition_variable ready_;
  std::condition_variable space_;
  std::deque<std::optional<std::string>> lines_;
};

// Streams the (optionally sharded) enumeration. With jobs > 1, worker j
// serializes every jobs-th surviving line and the writer interleaves them
// back, so the byte stream is identical for every job count.
void stream_enumeration(int n, int cap, int shard, int shards, int jobs) {
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    std::uint64_t index = 0;
    sunchaser::enumerate_triangulations(
        n,
        [&](const sunchaser::OuterplanarTriangulation& g) {
          if (index++ % static_cast<std::uint64_t>(shards) == static_cast<std::uint64_t>(shard))
            std::cout << sunchaser::to_json(g).dump() << "\n";
          return true;
        },
        cap);
    return;
  }
  std::vector<LineQueue> queues(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      std::uint64_t index = 0, matched = 0;
      sunchaser::enumerate_triangulations(
          n,
          [&](const sunchaser::OuterplanarTriangulation& g) {
            if (index++ % static_cast<std::uint64_t>(shards) != static_cast<std::uint64_t>(shard))
              return true;
            if (matched++ % static_cast<std::uint64_t>(jobs) == static_cast<std::uint64_t>(j))
              queues[j].push(sunchaser::to_json(g).dump() + "\n");
            return true;
          },
          cap);
      queues[j].push(std::nullopt);
    });
  }
  // Round-robin pulls reproduce the global order; the first end marker seen
  // in rotation is the end of the whole stream.
  for (int j = 0;; j = (j + 1) % jobs) {
    auto line = queues[j].pop();
    if (!line) break;
    std::cout << *line;
  }
  for (auto& w : workers) w.join();
}

void parse_range(const std::string& text, int& lo, int& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    sunchaser::fail(sunchaser::Errc::usage_error, "--n expects N or A..B, got \"" + text + "\"");
  }
  if (lo > hi) sunchaser::fail(sunchaser::Errc::usage_error, "empty range \"" + text + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sunchaser;

  CLI::App app{"coupon-colorings of maximal outerplanar and Hamiltonian planar triangulations"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // gen -------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "emit a graph from one of the named families");
  std::string family;
  gen->add_option("family", family, "fan | sun | parasol | random | random-ht")->required();
  int gen_n = 0, gen_k = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_of;
  auto* gen_n_opt = gen->add_option("--n", gen_n, "vertex count");
  auto* gen_k_opt = gen->add_option("--k", gen_k, "parasol parameter");
  auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "RNG seed (required for random families)");
  gen->add_option("--of", gen_of, "sun only: base graph file instead of fan(n)");
  gen->callback([&] {
    GraphVariant out = fan(3);
    if (family == "fan") {
      if (!*gen_n_opt) fail(Errc::usage_error, "gen fan needs --n");
      out = fan(gen_n);
    } else if (family == "sun") {
      if (!gen_of.empty()) {
        out = sun_of(std::get<OuterplanarTriangulation>(load_graph(gen_of)));
      } else {
        if (!*gen_n_opt) fail(Errc::usage_error, "gen sun needs --n or --of");
        out = sun_of(fan(gen_n));
      }
    } else if (family == "parasol") {
      if (!*gen_k_opt) fail(Errc::usage_error, "gen parasol needs --k");
      out = parasol(gen_k);
    } else if (family == "random") {
      if (!*gen_n_opt || !*gen_seed_opt) fail(Errc::usage_error, "gen random needs --n and --seed");
      out = random_triangulation(gen_n, gen_seed);
    } else if (family == "random-ht") {
      if (!*gen_n_opt || !*gen_seed_opt)
        fail(Errc::usage_error, "gen random-ht needs --n and --seed");
      out = random_hamiltonian(gen_n, gen_seed);
    } else {
      fail(Errc::usage_error, "unknown family \"" + family + "\"");
    }
    std::cout << to_json(out).dump() << "\n";
  });

  // classify ----------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "generalized-sun verdict for a graph");
  std::string classify_file;
  classify->add_option("file", classify_file, "graph JSON (or - for stdin)")->required();
  classify->callback([&] {
    const auto g = std::get<OuterplanarTriangulation>(load_graph(classify_file));
    std::cout << to_json(classify_generalized_sun(g)).dump() << "\n";
  });

  // color -------------------------------------------------------------------
  auto* color = app.add_subcommand("color", "2-coupon-color a graph or emit the sun witness");
  std::string color_file, color_out = "json";
  color->add_option("file", color_file, "graph JSON (or - for stdin)")->required();
  color->add_option("--out", color_out, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  color->callback([&] {
    const GraphVariant g = load_graph(color_file);
    if (const auto* outer = std::get_if<OuterplanarTriangulation>(&g)) {
      const ColoringOutcome outcome = color_outerplanar(*outer);
      if (!outcome.colored()) {
        std::cout << to_json(*outcome.witness).dump() << "\n";
        exit_code = kExitWitness;
        return;
      }
      if (color_out == "dot")
        std::cout << to_dot(*outer, &*outcome.coloring);
      else
        std::cout << to_json(*outcome.coloring).dump() << "\n";
    } else {
      const auto& ht = std::get<HamiltonianTriangulation>(g);
      const Coloring c = color_hamiltonian(ht);
      if (color_out == "dot")
        std::cout << to_dot(ht, &c);
      else
        std::cout << to_json(c).dump() << "\n";
    }
  });

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
  std::string verify_graph, verify_coloring;
  verify->add_option("graph", verify_graph, "graph JSON")->required();
  verify->add_option("coloring", verify_coloring, "coloring JSON")->required();
  verify->callback([&] {
    const GraphVariant g = load_graph(verify_graph);
    const Coloring c = load_coloring(verify_coloring);
    const CouponVerdict verdict = std::visit(
        [&](const auto& graph) { return verify_coupon(graph, c); }, g);
    std::cout << to_json(verdict).dump() << "\n";
    if (!verdict.valid) exit_code = kExitError;
  });

  // augment -----------------------------------------------------------------
  auto* augment = app.add_subcommand("augment", "one-edge exchange for a generalized sun");
  std::string augment_file;
  augment->add_option("file", augment_file, "graph JSON")->required();
  augment->callback([&] {
    const auto g = std::get<OuterplanarTriangulation>(load_graph(augment_file));
    std::cout << to_json(augment_generalized_sun(g)).dump() << "\n";
  });

  // enumerate -----------------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "stream all labeled triangulations as JSON lines");
  int enum_n = 0, enum_jobs = 1;
  std::string shard_text;
  enumerate->add_option("--n", enum_n, "vertex count")->required();
  enumerate->add_option("--shard", shard_text, "i/m: emit every m-th triangulation starting at i");
  enumerate->add_option("--jobs", enum_jobs, "serializer threads; output bytes do not depend on it")
      ->check(CLI::PositiveNumber);
  enumerate->callback([&] {
    int shard = 0, shards = 1;
    if (!shard_text.empty()) parse_shard(shard_text, shard, shards);
    stream_enumeration(enum_n, enumeration_cap(), shard, shards, enum_jobs);
  });

  // check ---------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "exhaustive characterization check, one report per n");
  std::string check_range;
  int check_jobs = 1;
  check->add_option("--n", check_range, "order or range, e.g. 6 or 6..14")->required();
  check->add_option("--jobs", check_jobs, "worker threads")->check(CLI::PositiveNumber);
  check->callback([&] {
    int lo = 0, hi = 0;
    parse_range(check_range, lo, hi);
    for (int n = lo; n <= hi; ++n) {
      const CheckReport report = check_characterization(n, check_jobs);
      std::cout << to_json(report).dump() << "\n";
      if (!report.discrepancies.empty()) exit_code = kExitError;
    }
  });

  // convert ---------------------------------------------------------------------
  auto* convert = app.add_subcommand("convert", "graph JSON to DOT");
  std::string convert_file, convert_coloring, convert_to = "dot";
  convert->add_option("file", convert_file, "graph JSON")->required();
  convert->add_option("--coloring", convert_coloring, "optional coloring JSON");
  convert->add_option("--to", convert_to, "output format")->check(CLI::IsMember({"dot"}));
  convert->callback([&] {
    const GraphVariant g = load_graph(convert_file);
    if (convert_coloring.empty()) {
      std::cout << to_dot(g);
    } else {
      const Coloring c = load_coloring(convert_coloring);
      std::cout << to_dot(g, &c);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const std::bad_variant_access&) {
    std::cerr << "BadFormat: this subcommand needs an outerplanar graph\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return exit_code;
}
