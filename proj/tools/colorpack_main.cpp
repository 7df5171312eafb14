// Copyright 2026 The colorpack Authors.
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

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "colorpack/adversary.hpp"
#include "colorpack/colorers.hpp"
#include "colorpack/errors.hpp"
#include "colorpack/incidence.hpp"
#include "colorpack/io.hpp"
#include "colorpack/report.hpp"
#include "colorpack/sweeps.hpp"

namespace {

using namespace colorpack;

std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

void deliver(const Report& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.to_csv();
  } else {
    write_file(out_path, report.to_csv());
  }
  std::cout << report.summary() << "\n";
}

int cmd_pack(const std::string& input, long long bin_size_override,
             int cap_n, const std::string& out_path) {
  std::vector<VbpInstance> instances;
  try {
    instances = parse_instance_file(read_file(input));
  } catch (const ParseError& e) {
    std::cerr << input << ": " << e.what() << "\n";
    return 2;
  }
  Report report;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    VbpInstance instance = instances[i];
    if (bin_size_override > 0) {
      instance = VbpInstance(instance.mode(), instance.dimension(),
                             Rational(bin_size_override), instance.items());
    }
    const PackingAssignment packed = first_fit_pack(instance);
    const int ff = packed.bin_count();
    bool pass = verify_packing(instance, packed);
    std::string measured = "bins=" + std::to_string(ff);
    std::string bound = "feasible";

    if (instance.n() <= cap_n && instance.n() > 0) {
      const int opt = exact_opt_bins(instance, cap_n);
      measured += " opt=" + std::to_string(opt);
      if (opt > 0) {
        measured += " ratio=" + competitive_ratio(ff, opt).fraction_str();
      }
    }
    if (instance.mode() == VectorMode::kBinary) {
      const int p = max_row_ones(instance);
      measured += " p=" + std::to_string(p);
      if (p >= 2) {
        const FfBinBound ffb =
            ff_bin_bound(instance.dimension(), p, instance.bin_size().num());
        bound = "ff<=" + std::to_string(ffb.floor_bound);
        pass = pass && ff <= ffb.floor_bound;
      } else {
        bound = "ff=opt=1";
        pass = pass && ff <= 1;
      }
    }
    report.add(ReportRow{
        "pack/" + std::to_string(i),
        "mode=" + to_string(instance.mode()) +
            " d=" + std::to_string(instance.dimension()) +
            " n=" + std::to_string(instance.n()) +
            " B=" + instance.bin_size().str(),
        measured, bound, pass});
  }
  report.sort_rows();
  deliver(report, out_path);
  return report.all_pass() ? 0 : 1;
}

int cmd_adversary(const std::string& colorer_name, int k, int m,
                  std::uint64_t seed, const std::string& out_path) {
  const auto colorer = make_colorer(colorer_name, seed);
  const AdversaryTranscript transcript = hypertree_adversary(*colorer, k, m);
  const Hypergraph& h = transcript.final_hypergraph;
  const unsigned long long cap = vertex_count_bound(k, m);

  Coloring coloring;
  coloring.colors.assign(h.n(), 0);
  for (const TranscriptStep& step : transcript.steps) {
    coloring.colors[step.vertex - 1] = step.color;
  }
  const bool pass = transcript.colors_used.size() >=
                        static_cast<std::size_t>(m) &&
                    static_cast<unsigned long long>(h.n()) <= cap &&
                    is_hypertree(h) && is_proper(h, coloring);

  Report report;
  report.add(ReportRow{
      "adversary/" + colorer_name,
      "k=" + std::to_string(k) + " m=" + std::to_string(m) + " n_hint=no",
      "colors=" + std::to_string(transcript.colors_used.size()) +
          " vertices=" + std::to_string(h.n()) +
          " hypertree=" + (is_hypertree(h) ? std::string("yes") : "no"),
      ">=m colors within k^(m-1) vertices", pass});
  if (!out_path.empty()) {
    write_file(out_path, emit_transcript(transcript));
    std::cout << "transcript written to " << out_path << "\n";
  }
  std::cout << report.to_csv() << report.summary() << "\n";
  return pass ? 0 : 1;
}

int cmd_reduce(const std::string& adversary_name,
               const std::string& packer_name, long long d, long long bin_size,
               const std::string& variant_name, int depth,
               const std::string& out_path) {
  ReductionConfig config;
  config.adversary = parse_adversary(adversary_name);
  config.packer = parse_packer(packer_name);
  config.d = d;
  config.bin_size = bin_size;
  if (variant_name == "binary") {
    config.variant = ReductionVariant::kBinary;
  } else if (variant_name == "unit") {
    config.variant = ReductionVariant::kUnit;
  } else {
    throw CLI::ValidationError("--variant must be binary or unit");
  }
  config.depth = depth;

  const ReductionOutcome outcome = reduction_experiment(config);
  Report report;
  report.add(ReportRow{
      "reduce/" + adversary_name + "+" + packer_name,
      "d=" + std::to_string(d) + " B=" + std::to_string(bin_size) +
          " variant=" + variant_name +
          (config.adversary == AdversaryKind::kHypertree
               ? " m=" + std::to_string(depth)
               : "") +
          " n=" + std::to_string(outcome.n) + " n_hint=yes",
      "bins=" + std::to_string(outcome.bins) +
          " chi=" + std::to_string(outcome.chi) +
          " opt=" + std::to_string(outcome.opt) +
          " ratio=" + outcome.ratio.fraction_str(),
      "ratio vs " + format_double(outcome.bound), outcome.pass});
  if (!out_path.empty()) {
    write_file(out_path, emit_instance(outcome.instance));
    std::cout << "emitted instance written to " << out_path << "\n";
  }
  std::cout << report.to_csv() << report.summary() << "\n";
  return outcome.pass ? 0 : 1;
}

int cmd_color(const std::string& input, const std::string& colorer_name,
              std::uint64_t seed, const std::string& out_path) {
  const Hypergraph h = parse_hypergraph(read_file(input));
  const auto colorer = make_colorer(colorer_name, seed);
  const Coloring coloring = run_colorer(h, *colorer, /*give_n_hint=*/false);
  const std::string rendered = emit_coloring(coloring);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    write_file(out_path, rendered);
  }
  std::cout << "colors=" << colors_used(coloring).size();
  if (h.k() == 2 ? h.n() <= 16 : h.n() <= 12) {
    std::cout << " chi=" << chromatic_number(h);
  }
  std::cout << "\n";
  return 0;
}

int cmd_starry(const std::string& input, int p, const std::string& out_path) {
  const MultiFamily family = parse_multifamily(read_file(input));
  const auto diverse = brute_force_diverse(family, p, PartitionCaps{16, 6});
  if (!diverse.has_value()) {
    std::cerr << "no (p=" << p << ") diverse partition exists\n";
    return 1;
  }
  const BlockPartition starry = diverse_to_starry(family, *diverse, p);
  const std::string rendered = emit_partition(starry);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    write_file(out_path, rendered);
  }
  std::cout << (verify_starry(family, starry, p) ? "starry partition verified"
                                                 : "INTERNAL ERROR")
            << "\n";
  return verify_starry(family, starry, p) ? 0 : 1;
}

int cmd_verify(const std::string& scale, std::uint64_t seed, int threads,
               const std::string& out_path) {
#ifdef _OPENMP
  if (threads > 1) omp_set_num_threads(threads);
#endif
  const Report report = run_verify(scale, parse_policy(threads), seed);
  deliver(report, out_path);
  if (!report.all_pass()) {
    for (const ReportRow& row : report.rows) {
      if (!row.pass) {
        std::cerr << "FAIL " << row.id << " " << row.params << " "
                  << row.measured << "\n";
      }
    }
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "colorpack: online vector bin packing and online hypergraph coloring "
      "laboratory"};
  app.require_subcommand(1);

  std::string input, out_path;
  std::string colorer_name = "firstfit", adversary_name = "killer";
  std::string packer_name = "firstfit", variant_name = "binary";
  std::string scale = "smoke";
  long long dim = 0, bin_size = 0;
  int uniformity = 2, depth = 1, cap_n = colorpack::kDefaultOptItemCap;
  int threads = 0;
  std::uint64_t seed = 1;

  CLI::App* pack = app.add_subcommand(
      "pack", "FirstFit-pack instances from a file; check the bin bound");
  pack->add_option("--input", input, "instance file (JSON)")->required();
  pack->add_option("--bin-size", bin_size, "override the file's bin size");
  pack->add_option("--cap-n", cap_n, "exact-OPT item cap");
  pack->add_option("--out", out_path, "write the CSV report here");

  CLI::App* adversary = app.add_subcommand(
      "adversary", "grow a hypertree that defeats an online colorer");
  adversary->add_option("--colorer", colorer_name,
                        "firstfit|largestfit|permutation");
  adversary->add_option("--uniformity", uniformity, "edge size k >= 2");
  adversary->add_option("--depth", depth, "forced color count m >= 1");
  adversary->add_option("--seed", seed, "seed for seeded colorers");
  adversary->add_option("--out", out_path, "write the transcript JSON here");

  CLI::App* reduce = app.add_subcommand(
      "reduce", "run an adversary against a packer via incidence columns");
  reduce->add_option("--adversary", adversary_name, "killer|hypertree");
  reduce->add_option("--packer", packer_name, "firstfit");
  reduce->add_option("--dim", dim, "packing dimension d")->required();
  reduce->add_option("--bin-size", bin_size, "integer B (k = B+1)")
      ->required();
  reduce->add_option("--variant", variant_name, "binary|unit");
  reduce->add_option("--depth", depth, "m for the hypertree adversary");
  reduce->add_option("--out", out_path, "write the emitted instance here");

  CLI::App* color = app.add_subcommand(
      "color", "run an online colorer over a hypergraph file");
  color->add_option("--input", input, "hypergraph file (JSON)")->required();
  color->add_option("--colorer", colorer_name,
                    "firstfit|largestfit|permutation");
  color->add_option("--seed", seed, "seed for seeded colorers");
  color->add_option("--out", out_path, "write vertex-color pairs here");

  int quota = 1;
  CLI::App* starry = app.add_subcommand(
      "starry", "rewrite a diverse multi-family file into a starry partition");
  starry->add_option("--input", input, "multi-family file (text)")->required();
  starry->add_option("--quota", quota, "members per block (p)")->required();
  starry->add_option("--out", out_path, "write the block partition here");

  CLI::App* verify = app.add_subcommand(
      "verify", "run every invariant suite at the chosen scale");
  verify->add_option("--scale", scale, "smoke|full");
  verify->add_option("--seed", seed, "sweep seed");
  verify->add_option("--threads", threads,
                     "1 = serial reference, 0 = OpenMP default");
  verify->add_option("--out", out_path, "write the CSV report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (pack->parsed()) return cmd_pack(input, bin_size, cap_n, out_path);
    if (adversary->parsed()) {
      return cmd_adversary(colorer_name, uniformity, depth, seed, out_path);
    }
    if (reduce->parsed()) {
      return cmd_reduce(adversary_name, packer_name, dim, bin_size,
                        variant_name, depth, out_path);
    }
    if (color->parsed()) return cmd_color(input, colorer_name, seed, out_path);
    if (starry->parsed()) return cmd_starry(input, quota, out_path);
    if (verify->parsed()) return cmd_verify(scale, seed, threads, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
