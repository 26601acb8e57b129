// End-to-end checks driving the sunchaser binary.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string command = std::string(SUNCHASER_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    std::cerr << "FATAL: cannot spawn " << command << "\n";
    std::exit(2);
  }
  std::string out;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    std::cout << "FAIL: " << what << "\n";
    ++failures;
  }
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/sunchaser_cli_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

int main() {
  const std::string p14 =
      R"({"kind":"outerplanar","n":14,"chords":[[0,5],[0,9],[1,3],[1,5],[3,5],[5,7],[5,9],[7,9],[9,11],[9,13],[11,13]]})";
  const RunResult parasol = run("gen parasol --k 3");
  expect(parasol.exit_code == 0 && parasol.out == p14 + "\n", "gen parasol --k 3 golden output");

  const RunResult fan5 = run("gen fan --n 5");
  expect(fan5.exit_code == 0 &&
             fan5.out == R"({"kind":"outerplanar","n":5,"chords":[[0,2],[0,3]]})" "\n",
         "gen fan --n 5");

  const std::string mk3 = write_temp("mk3.json",
                                     R"({"kind":"outerplanar","n":6,"chords":[[0,2],[0,4],[2,4]]})");
  const RunResult witness = run("color " + mk3);
  expect(witness.exit_code == 2 && witness.out.find("\"is_generalized_sun\":true") != std::string::npos,
         "color on M(K3) exits 2 with the witness");

  const RunResult classify = run("classify " + mk3);
  expect(classify.exit_code == 0 &&
             classify.out.find("\"degree_two\":[1,3,5]") != std::string::npos,
         "classify emits the verdict");

  const RunResult augment = run("augment " + mk3);
  expect(augment.exit_code == 0 && augment.out.find("\"added_edge\":[1,4]") != std::string::npos,
         "augment on M(K3) adds {1,4}");

  const std::string fan8 = write_temp("fan8.json", run("gen fan --n 8").out);
  const RunResult colored = run("color " + fan8);
  expect(colored.exit_code == 0 &&
             colored.out == R"({"k":2,"colors":[0,0,1,1,0,0,1,1]})" "\n",
         "color fan(8) emits the wwbb coloring");

  const std::string good = write_temp("good.json", R"({"k":2,"colors":[0,0,1,1,0,0,1,1]})");
  const std::string bad = write_temp("bad.json", R"({"k":2,"colors":[0,0,0,0,0,0,0,1]})");
  expect(run("verify " + fan8 + " " + good).exit_code == 0, "verify accepts a valid coloring");
  const RunResult invalid = run("verify " + fan8 + " " + bad);
  expect(invalid.exit_code == 1 && invalid.out.find("\"valid\":false") != std::string::npos,
         "verify rejects an invalid coloring");

  const RunResult enum5 = run("enumerate --n 5");
  expect(enum5.exit_code == 0 && count_lines(enum5.out) == 5, "enumerate --n 5 streams 5 lines");

  const RunResult enum9 = run("enumerate --n 9");
  const RunResult enum9p = run("enumerate --n 9 --jobs 3");
  expect(enum9.exit_code == 0 && enum9p.exit_code == 0 && enum9.out == enum9p.out &&
             count_lines(enum9.out) == 429,
         "enumerate --jobs preserves the byte stream");

  const RunResult shard0 = run("enumerate --n 6 --shard 0/2");
  const RunResult shard1 = run("enumerate --n 6 --shard 1/2");
  {
    std::istringstream full(run("enumerate --n 6").out);
    std::istringstream merged(shard0.out + shard1.out);
    std::multiset<std::string> want, got;
    for (std::string line; std::getline(full, line);) want.insert(line);
    for (std::string line; std::getline(merged, line);) got.insert(line);
    expect(shard0.exit_code == 0 && shard1.exit_code == 0 && want.size() == 14 && want == got,
           "shards partition the n=6 stream");
  }

  const std::string capped_cmd =
      "SUNCHASER_MAX_N=5 " + std::string(SUNCHASER_BIN) + " enumerate --n 6 2>/dev/null";
  expect(WEXITSTATUS(std::system(capped_cmd.c_str())) == 1,
         "SUNCHASER_MAX_N caps enumeration");

  const RunResult check6 = run("check --n 6");
  expect(check6.exit_code == 0 &&
             check6.out.find("\"total\":14,\"generalized_suns\":2,\"colorable\":12") !=
                 std::string::npos,
         "check --n 6 reports 14/2/12");

  const RunResult check_range = run("check --n 4..7 --jobs 2");
  expect(check_range.exit_code == 0 && count_lines(check_range.out) == 4,
         "check --n 4..7 emits one report per order");

  const RunResult dot = run("convert " + mk3);
  expect(dot.exit_code == 0 && dot.out.find("0 -- 2 [style=dashed];") != std::string::npos,
         "convert emits DOT");
  expect(run("convert " + mk3).out == dot.out, "convert is byte-stable");

  const RunResult rnd1 = run("gen random --n 12 --seed 7");
  const RunResult rnd2 = run("gen random --n 12 --seed 7");
  expect(rnd1.exit_code == 0 && rnd1.out == rnd2.out, "gen random is seed-deterministic");
  expect(run("gen random --n 12").exit_code == 1, "gen random without --seed is an error");

  const RunResult ht = run("gen random-ht --n 4 --seed 3");
  expect(ht.exit_code == 0 && ht.out.find("\"kind\":\"hamiltonian\"") != std::string::npos,
         "gen random-ht emits a hamiltonian document");

  const std::string ht_file = write_temp("ht.json", ht.out);
  const RunResult ht_colored = run("color " + ht_file);
  expect(ht_colored.exit_code == 0, "color handles hamiltonian graphs");
  const std::string ht_coloring = write_temp("htc.json", ht_colored.out);
  expect(run("verify " + ht_file + " " + ht_coloring).exit_code == 0,
         "verify handles hamiltonian graphs");

  const RunResult sun6 = run("gen sun --n 3");
  expect(sun6.exit_code == 0 &&
             sun6.out == R"({"kind":"outerplanar","n":6,"chords":[[0,2],[0,4],[2,4]]})" "\n",
         "gen sun --n 3 emits M(K3)");
  const RunResult sun_of_file = run("gen sun --of " + write_temp("fan5.json", fan5.out));
  expect(sun_of_file.exit_code == 0 && sun_of_file.out.find("\"n\":10") != std::string::npos,
         "gen sun --of suns an arbitrary graph");

  const RunResult dot_colored = run("color --out dot " + fan8);
  expect(dot_colored.exit_code == 0 &&
             dot_colored.out.find("2 [fillcolor=black fontcolor=white];") != std::string::npos,
         "color --out dot paints classes");

  const RunResult usage = run("frobnicate");
  expect(usage.exit_code == 1, "unknown subcommand is an error");

  if (failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cout << failures << " cli check(s) failed\n";
  return 1;
}
