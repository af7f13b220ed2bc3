#include "arr/generators.hpp"
#include "arr/io.hpp"
#include "arr/oracle.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arrangements of topological disks: generation, analysis, "
               "verification, raster cross-checks, rendering"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a generated instance file");
  std::string kind, gen_out;
  int delta = 4, n = 3, k = 1, teeth = 3, max_vertices = 8;
  std::uint64_t seed = 1;
  gen->add_option("kind", kind, "spiral | grid | comb | random")->required();
  gen->add_option("--delta", delta, "spiral: number of intersection components");
  gen->add_option("--n", n, "grid/random: number of disks");
  gen->add_option("--k", k, "grid: strains per direction");
  gen->add_option("--teeth", teeth, "comb: interleaved teeth");
  gen->add_option("--seed", seed, "random: RNG seed");
  gen->add_option("--max-vertices", max_vertices, "random: vertex cap per disk");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // analyze
  auto* ana = app.add_subcommand("analyze", "Analyze an instance and verify bounds");
  std::string ana_in, ana_out, ana_svg;
  bool with_oracle = false;
  int resolution = 64;
  ana->add_option("instance", ana_in, "instance file")->required();
  ana->add_option("--out", ana_out, "report path (default stdout)");
  ana->add_option("--svg", ana_svg, "also render the arrangement");
  ana->add_flag("--oracle", with_oracle, "cross-check with the raster oracle");
  ana->add_option("--resolution", resolution, "oracle base resolution");

  // oracle-check
  auto* orc = app.add_subcommand("oracle-check",
                                 "Compare exact structures against the raster oracle");
  std::string orc_in;
  int orc_resolution = 64, orc_refine = 3, orc_samples = 10;
  std::uint64_t orc_seed = 1;
  orc->add_option("instance", orc_in, "instance file")->required();
  orc->add_option("--resolution", orc_resolution, "base raster resolution");
  orc->add_option("--refinements", orc_refine, "maximum doublings when inconclusive");
  orc->add_option("--samples", orc_samples, "sampled s-t distance pairs");
  orc->add_option("--seed", orc_seed, "sampling seed");

  // render
  auto* ren = app.add_subcommand("render", "Render an instance to SVG");
  std::string ren_in, ren_out;
  bool dual = false, no_maximal = false;
  int width = 800;
  ren->add_option("instance", ren_in, "instance file")->required();
  ren->add_option("--out", ren_out, "SVG path (default stdout)");
  ren->add_flag("--dual", dual, "overlay the dual graph");
  ren->add_flag("--no-maximal", no_maximal, "skip maximal-face outlines");
  ren->add_option("--width", width, "pixel width");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      arr::Instance inst;
      if (kind == "spiral") inst = arr::spiral_pair(delta);
      else if (kind == "grid") inst = arr::grid_instance(n, k);
      else if (kind == "comb") inst = arr::comb_pair(teeth);
      else if (kind == "random") inst = arr::random_instance(n, max_vertices, seed);
      else {
        std::cerr << "unknown generator kind '" << kind << "'\n";
        return kUsageError;
      }
      write_text(gen_out, arr::serialize_instance(inst));
      return kOk;
    }

    if (ana->parsed()) {
      arr::Instance inst = arr::load_instance(ana_in);
      auto arrangement = arr::Arrangement::build(inst.disks);
      auto report = arr::verify_bounds(arrangement);
      write_text(ana_out, arr::serialize_report(report, inst));
      if (!ana_svg.empty()) write_text(ana_svg, arr::render_svg(arrangement));
      bool clean = arr::report_clean(report, inst);
      if (with_oracle) {
        arr::OracleOptions opts;
        opts.base_resolution = resolution;
        auto oracle = arr::oracle_check(arrangement, opts);
        std::cerr << "oracle: "
                  << (oracle.agree() ? "agree"
                      : oracle.status == arr::OracleStatus::disagree ? "DISAGREE"
                                                                     : "inconclusive")
                  << " at resolution " << oracle.resolution;
        if (!oracle.detail.empty()) std::cerr << " (" << oracle.detail << ")";
        std::cerr << "\n";
        clean = clean && oracle.agree();
      }
      return clean ? kOk : kVerificationFailure;
    }

    if (orc->parsed()) {
      arr::Instance inst = arr::load_instance(orc_in);
      auto arrangement = arr::Arrangement::build(inst.disks);
      arr::OracleOptions opts;
      opts.base_resolution = orc_resolution;
      opts.max_refinements = orc_refine;
      opts.st_samples = orc_samples;
      opts.seed = orc_seed;
      auto res = arr::oracle_check(arrangement, opts);
      std::printf("status: %s\nresolution: %d\nregions: %d\nfaces: %d\n"
                  "st_pairs_checked: %d\n",
                  res.agree() ? "agree"
                  : res.status == arr::OracleStatus::disagree ? "disagree"
                                                              : "inconclusive",
                  res.resolution, res.regions, res.faces, res.st_checked);
      if (!res.detail.empty()) std::printf("detail: %s\n", res.detail.c_str());
      return res.agree() ? kOk : kVerificationFailure;
    }

    if (ren->parsed()) {
      arr::Instance inst = arr::load_instance(ren_in);
      auto arrangement = arr::Arrangement::build(inst.disks);
      arr::SvgOptions opts;
      opts.width = width;
      opts.dual_overlay = dual;
      opts.outline_maximal = !no_maximal;
      write_text(ren_out, arr::render_svg(arrangement, opts));
      return kOk;
    }
  } catch (const arr::InstanceFormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsageError;
  } catch (const arr::GeneralPositionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    for (const auto& v : e.report().violations)
      std::cerr << "  " << describe(v) << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}
