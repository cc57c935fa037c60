// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Talks to the engine only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "linfvd/linfvd.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // bad flags, unreadable or unwritable files
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

struct ShapeDeleter {
  void operator()(linfvd_shape* s) const { linfvd_shape_free(s); }
};
struct ResultDeleter {
  void operator()(linfvd_result* r) const { linfvd_result_free(r); }
};
using ShapePtr = std::unique_ptr<linfvd_shape, ShapeDeleter>;
using ResultPtr = std::unique_ptr<linfvd_result, ResultDeleter>;

// Carries a failed status out of a command.
struct Failure {
  linfvd_status status;
};

int exit_code(linfvd_status s) {
  if (s == LINFVD_OK) return kExitOk;
  if (linfvd_status_is_validation(s)) return kExitValidation;
  if (s == LINFVD_INTERNAL) return kExitInternal;
  return kExitUsage;
}

void check(linfvd_status s) {
  if (s != LINFVD_OK) {
    std::cerr << "error: " << linfvd_last_error() << "\n";
    throw Failure{s};
  }
}

// Fetches one of the library's malloc'd strings.
template <class F>
std::string take(F&& fetch) {
  char* raw = nullptr;
  check(fetch(&raw));
  std::string s(raw);
  linfvd_string_free(raw);
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (out) out << text;
  if (!out) {
    std::cerr << "error: Io: cannot write " << path << "\n";
    throw Failure{LINFVD_IO};
  }
}

struct ComputeArgs {
  std::string input, output, svg, obj;
  int dim = 0;
  int max_depth = 32;
  std::string bvh = "auto";
  bool contract = false;
  bool stats = false;
  int grid_check = 0;
};

int run_compute(const ComputeArgs& a) {
  linfvd_shape* raw_shape = nullptr;
  check(linfvd_shape_from_file(a.input.c_str(), a.dim, &raw_shape));
  ShapePtr shape(raw_shape);
  if (!a.svg.empty() && linfvd_shape_dimension(shape.get()) != 2) {
    std::cerr << "error: --svg needs a 2D shape, use --obj for 3D\n";
    return kExitUsage;
  }

  linfvd_options opt;
  linfvd_options_init(&opt);
  opt.max_depth = a.max_depth;
  opt.bvh = a.bvh == "on" ? LINFVD_BVH_ON : a.bvh == "off" ? LINFVD_BVH_OFF : LINFVD_BVH_AUTO;
  opt.contract = a.contract ? 1 : 0;
  opt.grid_check = a.grid_check;
  linfvd_result* raw_result = nullptr;
  check(linfvd_compute(shape.get(), &opt, &raw_result));
  ResultPtr result(raw_result);
  const linfvd_result* r = result.get();

  write_text(a.output, take([&](char** s) { return linfvd_result_graph_json(r, s); }));
  if (!a.svg.empty()) write_text(a.svg, take([&](char** s) { return linfvd_result_svg(r, s); }));
  if (!a.obj.empty()) write_text(a.obj, take([&](char** s) { return linfvd_result_obj(r, s); }));
  if (a.stats) std::cout << take([&](char** s) { return linfvd_result_stats_json(r, s); });
  std::cerr << take([&](char** s) { return linfvd_result_summary(r, s); }) << "\n";

  if (a.grid_check > 0 && linfvd_result_grid_violations(r) > 0) {
    std::cerr << "error: grid check found " << linfvd_result_grid_violations(r)
              << " samples that disagree with the brute-force oracle\n";
    return kExitInternal;
  }
  return kExitOk;
}

struct GenerateArgs {
  unsigned long long seed = 1;
  int dim = 2;
  int sites = 32;
  int holes = 0;
  int grid = 3;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  linfvd_shape* raw = nullptr;
  check(linfvd_generate(a.seed, a.dim, a.sites, a.holes, a.grid, &raw));
  ShapePtr shape(raw);
  write_text(a.out, take([&](char** s) { return linfvd_shape_to_json(shape.get(), s); }));
  std::cerr << linfvd_shape_site_count(shape.get()) << " sites written to " << a.out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact L-infinity Voronoi diagrams of rectilinear polygons and orthogonal polyhedra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(linfvd_version()));

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Compute the Voronoi graph of a shape document");
  compute->add_option("--input", ca.input, "Shape document (JSON)")->required();
  compute->add_option("--output", ca.output, "Graph document to write (JSON)")->required();
  auto* svg = compute->add_option("--svg", ca.svg, "Also render the 2D graph as SVG");
  auto* obj = compute->add_option("--obj", ca.obj, "Also render the graph as an OBJ line set");
  svg->excludes(obj);
  compute->add_option("--dim", ca.dim, "Require this dimension (2 or 3)")->check(CLI::IsMember({2, 3}));
  compute->add_option("--max-depth", ca.max_depth, "Deepest subdivision level")
      ->check(CLI::Range(1, 64));
  compute->add_option("--bvh", ca.bvh, "Rectangle index use")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  compute->add_flag("--contract", ca.contract, "Merge degree-2 bisector chains");
  compute->add_flag("--stats", ca.stats, "Print run statistics as JSON on stdout");
  compute->add_option("--grid-check", ca.grid_check, "Compare against the brute-force oracle on a K x K grid")
      ->check(CLI::Range(2, 4096));

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Write a random shape document");
  generate->add_option("--seed", ga.seed, "Random seed");
  generate->add_option("--dim", ga.dim, "Dimension")->check(CLI::IsMember({2, 3}));
  generate->add_option("--sites", ga.sites, "Target site count")->check(CLI::PositiveNumber);
  generate->add_option("--holes", ga.holes, "Hole count (2D)")->check(CLI::NonNegativeNumber);
  generate->add_option("--grid", ga.grid, "Largest step between neighboring features")
      ->check(CLI::PositiveNumber);
  generate->add_option("--out", ga.out, "Shape document to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return run_compute(ca);
    return run_generate(ga);
  } catch (const Failure& f) {
    return exit_code(f.status);
  }
}
