// Copyright 2026 The eldist Authors.
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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "eldist/batch.hpp"

namespace {

// Alphabet files are raw bytes; one trailing newline is tolerated so shell
// redirection works.
std::string load_alphabet_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CLI::ValidationError("--alphabet-file", "cannot read " + path);
  }
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (bytes.ends_with('\n')) {
    bytes.pop_back();
  }
  if (bytes.ends_with('\r')) {
    bytes.pop_back();
  }
  return bytes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "eldist - estimate Levenshtein distances between large documents via "
      "compressed signatures"};
  app.require_subcommand(1);

  eldist::RunConfig config;
  std::string out_path;
  std::string alphabet_file;
  std::string kind_token = "random";
  std::vector<std::string> inputs;
  std::string signature_file;
  std::string source_file;
  std::string dest_file;
  std::string corpus;

  const auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--c", config.params.c, "Nominal compression rate C")
        ->capture_default_str();
    cmd->add_option("--n", config.params.n, "Neighborhood (window) size N")
        ->capture_default_str();
    cmd->add_option("--alphabet-file", alphabet_file,
                    "File whose bytes form the digest alphabet");
  };
  const auto add_scoring = [&](CLI::App* cmd) {
    cmd->add_option("--r", config.r, "Expected chance-overlap ratio")
        ->capture_default_str();
    cmd->add_option("--threshold", config.threshold,
                    "Minimum delta for a pair to be reported (0..1)")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--max-ratio", config.max_ratio,
                    "Digest length ratio beyond which delta is not applicable")
        ->capture_default_str();
    cmd->add_flag("--all", config.show_all,
                  "Report every pair regardless of threshold");
    cmd->add_option("--workers", config.workers, "Worker thread count")
        ->capture_default_str();
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
  };
  const auto add_preprocess = [&](CLI::App* cmd) {
    cmd->add_flag("--lowercase", config.lowercase,
                  "ASCII-lowercase contents before processing");
    cmd->add_flag("--collapse-ws", config.collapse_ws,
                  "Collapse whitespace runs to a single space before processing");
  };

  CLI::App* gen = app.add_subcommand(
      "gen", "Generate a signature CSV for files and directories");
  gen->add_option("inputs", inputs, "Files or directories to fingerprint")
      ->required();
  add_params(gen);
  add_preprocess(gen);
  add_out(gen);
  gen->add_option("--workers", config.workers, "Worker thread count")
      ->capture_default_str();

  CLI::App* cmp = app.add_subcommand(
      "cmp", "Compare all signatures within one signature file");
  cmp->add_option("signatures", signature_file, "Signature CSV file")->required();
  add_scoring(cmp);
  cmp->add_flag("--include-self", config.include_self,
                "Also compare each record against itself");
  add_out(cmp);

  CLI::App* search = app.add_subcommand(
      "search", "Score every source signature against every destination signature");
  search->add_option("source", source_file, "Source signature CSV")->required();
  search->add_option("dest", dest_file, "Destination signature CSV")->required();
  add_scoring(search);
  add_out(search);

  CLI::App* exact = app.add_subcommand("exact", "Exact Levenshtein distance of two files");
  exact->add_option("files", inputs, "Exactly two files")->expected(2);
  add_preprocess(exact);
  add_out(exact);

  CLI::App* calibrate = app.add_subcommand(
      "calibrate", "Measure the expected chance-overlap ratio R for a model");
  calibrate
      ->add_option("--kind", kind_token,
                   "Model kind: random (fixed 83-symbol set), chars (corpus "
                   "character frequency), words (corpus word list)")
      ->check(CLI::IsMember({"random", "chars", "words"}))
      ->capture_default_str();
  calibrate->add_option("--corpus", corpus, "Corpus file for chars/words models");
  calibrate->add_option("--length", config.length, "Test string length in bytes")
      ->capture_default_str();
  calibrate->add_option("--runs", config.runs, "Number of averaged runs")
      ->capture_default_str();
  calibrate->add_option("--seed", config.seed, "PRNG seed")->capture_default_str();
  add_out(calibrate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? eldist::kExitOk : eldist::kExitFatal;
  }

  try {
    if (!alphabet_file.empty()) {
      config.params.alphabet = load_alphabet_file(alphabet_file);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return eldist::kExitFatal;
  }

  if (gen->parsed()) {
    config.mode = eldist::Mode::Gen;
    config.inputs.assign(inputs.begin(), inputs.end());
  } else if (cmp->parsed()) {
    config.mode = eldist::Mode::Compare;
    config.signature_file = signature_file;
  } else if (search->parsed()) {
    config.mode = eldist::Mode::Search;
    config.source_file = source_file;
    config.dest_file = dest_file;
  } else if (exact->parsed()) {
    config.mode = eldist::Mode::Exact;
    config.inputs.assign(inputs.begin(), inputs.end());
  } else {
    config.mode = eldist::Mode::Calibrate;
    config.corpus = corpus;
    if (kind_token == "random") {
      config.kind = eldist::ModelKind::RandomChars;
    } else if (kind_token == "chars") {
      config.kind = eldist::ModelKind::CharFrequency;
    } else {
      config.kind = eldist::ModelKind::WordList;
    }
  }

  std::ofstream out_file;
  if (!out_path.empty()) {
    out_file.open(out_path, std::ios::binary);
    if (!out_file) {
      std::cerr << "error: cannot open output file: " << out_path << '\n';
      return eldist::kExitFatal;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : out_file;

  return eldist::run(config, out, std::cerr);
}
