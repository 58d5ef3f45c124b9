// Copyright 2026 The gemcat Authors.
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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gemcat/catalogue.hpp"
#include "gemcat/classification.hpp"
#include "gemcat/code.hpp"
#include "gemcat/error.hpp"
#include "gemcat/gem_io.hpp"
#include "gemcat/generation.hpp"
#include "gemcat/ingest.hpp"
#include "gemcat/moves.hpp"
#include "gemcat/topology.hpp"

namespace {

using namespace gemcat;

int default_jobs() {
  if (const char* env = std::getenv("GEMCAT_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw GemError(ErrorKind::Format, "seed range must look like A..B");
  try {
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw GemError(ErrorKind::Format, "seed range must look like A..B");
  }
}

void progress_line(const char* what, std::size_t done, std::size_t total) {
  if (done == total || done % 64 == 0) std::cerr << what << ' ' << done << '/' << total << '\n';
}

std::vector<ColouredGraph> graphs_of(const CatalogueFile& file) {
  std::vector<ColouredGraph> out;
  for (const auto& c : file.codes) out.push_back(graph_from_code(c));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gemcat: crystallization catalogues of PL 4-manifolds"};
  app.require_subcommand(1);
  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads (default: GEMCAT_JOBS or hardware concurrency)");

  int order = 0;
  std::string output;
  std::string input;
  std::vector<std::string> inputs;

  auto* gen_s3 = app.add_subcommand("gen-s3", "generate the S^3 seeds of one order");
  gen_s3->add_option("--order", order, "graph order")->required();
  gen_s3->add_option("-o,--output", output, "catalogue file")->required();

  std::string seeds_path, checkpoint, seed_range;
  bool no_prune = false;
  auto* gen4 = app.add_subcommand("gen4", "generate the 4-manifold catalogues of one order");
  gen4->add_option("--order", order, "graph order")->required();
  gen4->add_option("--seeds", seeds_path, "S^3 seed catalogue (generated when omitted)");
  gen4->add_option("-o,--output", output, "output prefix")->required();
  gen4->add_option("--checkpoint", checkpoint, "directory for per-seed results");
  gen4->add_option("--seed-range", seed_range, "seed indices A..B (half-open)");
  gen4->add_flag("--no-prune", no_prune, "enumerate every colour-4 matching");

  auto* inv = app.add_subcommand("invariants", "invariant records of a catalogue");
  inv->add_option("-i,--input", input, "catalogue file")->required();
  inv->add_option("-o,--output", output, "JSON lines file")->required();

  std::uint64_t budget = 1000;
  int passes = 1;
  std::string reps_path, order_name = "strided";
  auto* cls = app.add_subcommand("classify", "partition catalogues into classes");
  cls->add_option("-i,--input", inputs, "catalogue files")->required();
  cls->add_option("--budget", budget, "theta applications per graph per pass");
  cls->add_option("--passes", passes, "maximum number of passes");
  cls->add_option("--reps", reps_path, "representatives: `<label> <code>` per line");
  cls->add_option("--schedule", order_name, "lex or strided")->check(CLI::IsMember({"lex", "strided"}));
  cls->add_option("-o,--output", output, "partition report")->required();

  auto* red = app.add_subcommand("reduce", "reduce a gem to a rigid dipole-free crystallization");
  red->add_option("-i,--input", input, "gem file")->required();
  red->add_option("-o,--output", output, "reduced gem file (stdout when omitted)");

  auto* conv = app.add_subcommand("convert", "facet list to crystallization");
  conv->add_option("-i,--input", input, "facet file")->required();
  conv->add_option("-o,--output", output, "gem file")->required();

  auto* cod = app.add_subcommand("code", "canonical code of a gem");
  cod->add_option("-i,--input", input, "gem file")->required();

  std::vector<std::string> reports;
  auto* sum = app.add_subcommand("summary", "counts per order and class table");
  sum->add_option("-i,--input", inputs, "catalogue files");
  sum->add_option("--partition", reports, "partition reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen_s3) {
      GenerationOptions opt;
      opt.jobs = jobs;
      const auto graphs = generate_s3(order, opt);
      write_catalogue(output, make_catalogue(order, CatalogueKind::S3, graphs));
      std::cout << graphs.size() << '\n';
    } else if (*gen4) {
      GenerationOptions opt;
      opt.jobs = jobs;
      opt.prune = !no_prune;
      opt.checkpoint_dir = checkpoint;
      if (!seed_range.empty()) opt.seed_range = parse_range(seed_range);
      opt.progress = [](std::size_t d, std::size_t t) { progress_line("seeds", d, t); };
      std::vector<ColouredGraph> seeds;
      if (seeds_path.empty()) {
        GenerationOptions s3_opt;
        s3_opt.jobs = jobs;
        seeds = generate_s3(order, s3_opt);
      } else {
        const auto file = read_catalogue(seeds_path);
        if (file.kind != CatalogueKind::S3 || file.order != order) {
          throw GemError(ErrorKind::DimensionMismatch, "seed file is not an S^3 catalogue of order " +
                                                           std::to_string(order));
        }
        seeds = graphs_of(file);
      }
      const auto result = generate_catalogue(order, seeds, opt);
      write_catalogue(output + "_bipartite.txt", make_catalogue(order, CatalogueKind::Bipartite, result.bipartite));
      write_catalogue(output + "_nonbipartite.txt",
                      make_catalogue(order, CatalogueKind::NonBipartite, result.nonbipartite));
      std::cout << result.bipartite.size() << ' ' << result.nonbipartite.size() << '\n';
    } else if (*inv) {
      write_text_file(output, invariant_records(read_catalogue(input).codes));
    } else if (*cls) {
      std::vector<Code> codes;
      for (const auto& path : inputs) {
        const auto file = read_catalogue(path);
        codes.insert(codes.end(), file.codes.begin(), file.codes.end());
      }
      std::vector<Representative> reps;
      if (!reps_path.empty()) {
        for (const auto& rep : parse_representatives(read_text_file(reps_path))) {
          const Code c = code(graph_from_code(rep.code));
          auto it = std::find(codes.begin(), codes.end(), c);
          if (it == codes.end()) it = codes.insert(codes.end(), c);
          reps.push_back({static_cast<std::size_t>(it - codes.begin()), rep.label});
        }
      }
      std::vector<ColouredGraph> graphs;
      for (const auto& c : codes) graphs.push_back(graph_from_code(c));
      ClassifyOptions opt;
      opt.budget = budget;
      opt.passes = passes;
      opt.jobs = jobs;
      opt.order = order_name == "lex" ? ThetaOrder::Lexicographic : ThetaOrder::Strided;
      auto partition = classify(graphs, opt);
      label_classes(partition, graphs, reps);
      write_text_file(output, partition_report(partition, codes));
      std::cout << partition.classes.size() << " classes\n";
      if (partition.handle_mismatches > 0) {
        std::cerr << "warning: " << partition.handle_mismatches << " images skipped for differing handle counts\n";
      }
    } else if (*red) {
      const auto r = reduce(read_gem_file(input));
      std::cerr << "orientable_handles " << r.orientable_handles << " nonorientable_handles "
                << r.nonorientable_handles << '\n';
      if (output.empty()) {
        std::cout << to_gem_text(r.graph);
      } else {
        write_gem_file(output, r.graph);
      }
    } else if (*conv) {
      const auto complex = read_facet_file(input);
      const auto gem = barycentric_gem(complex);
      const auto r = crystallize(gem);
      write_gem_file(output, r.graph);
      std::cout << "gem order " << gem.order() << ", crystallization order " << r.graph.order() << ", handles "
                << r.orientable_handles << ' ' << r.nonorientable_handles << '\n';
    } else if (*cod) {
      std::cout << code(read_gem_file(input)).str() << '\n';
    } else if (*sum) {
      std::vector<CatalogueFile> files;
      for (const auto& path : inputs) files.push_back(read_catalogue(path));
      std::vector<std::string> texts;
      for (const auto& path : reports) texts.push_back(read_text_file(path));
      std::cout << summary_text(summarize(files, texts));
    }
  } catch (const GemError& e) {
    std::cerr << "gemcat: " << e.what() << '\n';
    return e.kind() == ErrorKind::Format || e.kind() == ErrorKind::Io ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "gemcat: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
