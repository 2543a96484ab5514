// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pgfree: construct, analyze and sweep point sets of PG(r-1,2).
//
// Exit codes: 0 success, 1 usage or input error, 2 a check found a
// counterexample, 3 a resource cap was hit.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgfree/pgfree.hpp"

namespace {

using namespace pgfree;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitResource = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

PointSet read_point_set(const std::string& path) {
  try {
    return parse_point_set(read_input(path));
  } catch (const ParseError& err) {
    throw ParseError(path.empty() || path == "-" ? "<stdin>" : path, err.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(n);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad level '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidArgument("no levels given");
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("PGFREE_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::logic_error&) {
    }
    throw InvalidArgument("PGFREE_WORKERS must be a positive integer");
  }
  return 1;
}

struct ConstructArgs {
  std::string kind;
  int rank = 0;
  int level = 0;
  std::string gamma = "1";
  std::string graph;
  std::string left;
  std::string right;
  std::string format = "json";
};

int run_construct(const ConstructArgs& a) {
  PointSet e(1);
  if (a.kind == "bose-burton") {
    e = bose_burton(a.rank, a.level);
  } else if (a.kind == "affine") {
    e = affine_set(a.rank, parse_word(a.gamma, "--gamma"));
  } else if (a.kind == "graphic") {
    if (a.graph.empty()) throw InvalidArgument("--graph is required for graphic");
    e = graphic_representation(parse_edge_list(read_input(a.graph)));
  } else if (a.kind == "k5") {
    e = k5();
  } else if (a.kind == "direct-sum") {
    if (a.left.empty() || a.right.empty()) throw InvalidArgument("--left and --right are required for direct-sum");
    e = direct_sum(read_point_set(a.left), read_point_set(a.right));
  } else {
    throw InvalidArgument("unknown kind '" + a.kind + "'");
  }
  if (a.format == "compact") {
    std::cout << to_compact(e) << '\n';
  } else {
    std::cout << to_json(e).dump(2) << '\n';
  }
  return kExitOk;
}

int run_analyze(const std::string& input, const std::string& levels, std::uint64_t chi_budget) {
  AnalyzeOptions opts;
  opts.chi_work_budget = chi_budget;
  const AnalysisReport rep = analyze(read_point_set(input), parse_levels(levels), opts);
  std::cout << to_json(rep).dump(2) << '\n';
  return kExitOk;
}

int run_spectrum(const std::string& input, std::size_t top, const std::string& csv_path) {
  const PointSet e = read_point_set(input);
  const Spectrum s = walsh_hadamard(e);
  std::vector<Word> order(s.coeffs().size());
  for (Word g = 0; g < order.size(); ++g) order[g] = g;
  if (top > 0) {
    // Largest magnitude first; ties by gamma.
    std::stable_sort(order.begin(), order.end(), [&](Word x, Word y) {
      return std::llabs(s[x]) > std::llabs(s[y]);
    });
    order.resize(std::min(top, order.size()));
  }
  std::ostringstream os;
  os << "gamma,coefficient\n";
  for (Word g : order) os << g << ',' << s[g] << '\n';
  write_text(csv_path, os.str());
  return kExitOk;
}

int run_count_triangles(const std::string& input) {
  const PointSet e = read_point_set(input);
  const std::uint64_t spectral = triangle_count_spectral(e);
  Json j{{"size", e.size()}, {"T_E", spectral}, {"triangles", spectral / 6}};
  if (e.rank() <= 18) {
    const std::uint64_t naive = triangle_count_naive(e);
    j["T_E_naive"] = naive;
    if (naive != spectral) throw InternalInconsistency("spectral and naive triangle counts disagree");
  }
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int run_find_flat(const std::string& input, int level, const std::string& strategy) {
  FlatStrategy s = FlatStrategy::descent;
  if (strategy == "exhaustive") {
    s = FlatStrategy::exhaustive;
  } else if (strategy != "descent") {
    throw InvalidArgument("unknown strategy '" + strategy + "'");
  }
  const PointSet e = read_point_set(input);
  const FlatSearch res = find_triangle_free_flat(e, level, s);
  // Only a miss under the hypotheses is a counterexample.
  const bool hypotheses = above_structure_threshold(e, level) && is_pg_free(e, level);
  Json j{{"format_version", kFormatVersion}, {"library_version", kLibraryVersion}, {"level", level},
         {"hypotheses_hold", hypotheses}};
  j.update(to_json(res));
  std::cout << j.dump(2) << '\n';
  return hypotheses && !(res.result.found && res.result.density_claim_holds) ? kExitViolation : kExitOk;
}

int run_cone(const std::string& input, const std::string& point, int level) {
  const PointSet e = read_point_set(input);
  const Word p = parse_word(point, "--point");
  const PointSet c = cone(e, p);
  Json j{{"point", p}, {"cone", to_json(c)}, {"size", c.size()}};
  j["lower_bound"] = int128_json(2 * static_cast<Int128>(e.size()) - pow2(e.rank()));
  if (level > 0) {
    if (level >= 2 && level <= e.rank() && is_pg_free(e, level)) {
      j["report"] = to_json(check_cone_lemma(e, p, level));
    } else {
      j["report"] = nullptr;
    }
  }
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  int rank = 4;
  int level = 3;
  std::string mode = "exhaustive";
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string checks = "all";
  std::string density_min;
  int workers = 0;
  std::string out;
  std::string csv;
  std::uint64_t chi_budget = 0;
};

int run_verify(const VerifyArgs& a) {
  SweepConfig cfg;
  cfg.rank = a.rank;
  cfg.level = a.level;
  if (a.mode == "exhaustive") {
    cfg.mode = SweepMode::exhaustive;
  } else if (a.mode == "random") {
    cfg.mode = SweepMode::random;
  } else {
    throw InvalidArgument("unknown mode '" + a.mode + "'");
  }
  cfg.sample_count = a.samples;
  cfg.rng_seed = a.seed;
  cfg.checks = parse_checks(a.checks);
  if (!a.density_min.empty()) cfg.density_filter = parse_rational(a.density_min, "--density-min");
  cfg.workers = a.workers > 0 ? a.workers : default_workers();
  cfg.chi_work_budget = a.chi_budget;

  const auto start = std::chrono::steady_clock::now();
  const SweepOutcome outcome = run_sweep(cfg);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_text(a.out, to_json(outcome).dump(2) + "\n");
  if (!a.csv.empty()) write_text(a.csv, extremal_csv(outcome));
  std::cerr << "wall_time_seconds " << seconds << " workers " << cfg.workers << '\n';
  return outcome.total_violations() == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pgfree: dense PG(n-1,2)-free binary matroids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pgfree::kLibraryVersion));

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a standard point set");
  construct_cmd->add_option("--kind", construct.kind, "bose-burton|affine|graphic|k5|direct-sum")->required();
  construct_cmd->add_option("--rank", construct.rank, "Ambient rank r");
  construct_cmd->add_option("--level", construct.level, "Level n (bose-burton)");
  construct_cmd->add_option("--gamma", construct.gamma, "Normal vector (affine)");
  construct_cmd->add_option("--graph", construct.graph, "Edge-list file (graphic)");
  construct_cmd->add_option("--left", construct.left, "First summand (direct-sum)");
  construct_cmd->add_option("--right", construct.right, "Second summand (direct-sum)");
  construct_cmd->add_option("--format", construct.format, "json|compact")->check(CLI::IsMember({"json", "compact"}));

  std::string input;
  std::string levels = "3";
  std::uint64_t chi_budget = pgfree::AnalyzeOptions{}.chi_work_budget;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one point set");
  analyze_cmd->add_option("input", input, "Point set file (default: stdin)");
  analyze_cmd->add_option("--levels", levels, "Comma-separated levels n");
  analyze_cmd->add_option("--chi-budget", chi_budget, "Critical-number work budget (0 = unlimited)");

  std::size_t top = 0;
  std::string csv;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Dump Fourier coefficients as CSV");
  spectrum_cmd->add_option("input", input, "Point set file (default: stdin)");
  spectrum_cmd->add_option("--top", top, "Keep the k largest magnitudes");
  spectrum_cmd->add_option("--csv", csv, "Output file (default: stdout)");

  auto* count_cmd = app.add_subcommand("count-triangles", "Ordered triangle count T_E");
  count_cmd->add_option("input", input, "Point set file (default: stdin)");

  int level = 3;
  std::string strategy = "descent";
  auto* flat_cmd = app.add_subcommand("find-flat", "Search for a triangle-free corank-(n-2) flat");
  flat_cmd->add_option("input", input, "Point set file (default: stdin)");
  flat_cmd->add_option("--level", level, "Level n");
  flat_cmd->add_option("--strategy", strategy, "descent|exhaustive");

  std::string point;
  int cone_level = 0;
  auto* cone_cmd = app.add_subcommand("cone", "Cone of a point");
  cone_cmd->add_option("input", input, "Point set file (default: stdin)");
  cone_cmd->add_option("--point", point, "Point p of E")->required();
  cone_cmd->add_option("--level", cone_level, "Also check the cone inequalities at level n");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run structural checks over many point sets");
  verify_cmd->add_option("--rank", verify.rank, "Ambient rank r");
  verify_cmd->add_option("--level", verify.level, "Level n");
  verify_cmd->add_option("--mode", verify.mode, "exhaustive|random");
  verify_cmd->add_option("--samples", verify.samples, "Random samples");
  verify_cmd->add_option("--seed", verify.seed, "64-bit seed");
  verify_cmd->add_option("--checks", verify.checks, "Comma-separated checks, or all");
  verify_cmd->add_option("--density-min", verify.density_min, "Keep samples with |E| > q 2^r (q = a/b)");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads (default: $PGFREE_WORKERS or 1)");
  verify_cmd->add_option("--out", verify.out, "Outcome JSON file (default: stdout)");
  verify_cmd->add_option("--csv", verify.csv, "Extremal records CSV file");
  verify_cmd->add_option("--chi-budget", verify.chi_budget, "Critical-number work budget per set (0 = unlimited)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct_cmd) return run_construct(construct);
    if (*analyze_cmd) return run_analyze(input, levels, chi_budget);
    if (*spectrum_cmd) return run_spectrum(input, top, csv);
    if (*count_cmd) return run_count_triangles(input);
    if (*flat_cmd) return run_find_flat(input, level, strategy);
    if (*cone_cmd) return run_cone(input, point, cone_level);
    if (*verify_cmd) return run_verify(verify);
  } catch (const pgfree::ResourceCapError& err) {
    std::cerr << "resource cap: " << err.what() << '\n';
    return kExitResource;
  } catch (const pgfree::InternalInconsistency& err) {
    std::cerr << "violation: " << err.what() << '\n';
    return kExitViolation;
  } catch (const pgfree::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource cap: out of memory\n";
    return kExitResource;
  }
  return kExitUsage;
}
