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

#include "eldist/batch.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "eldist/levenshtein.hpp"
#include "eldist/parallel.hpp"

namespace eldist {

namespace {

namespace fs = std::filesystem;

constexpr std::string_view kReportHeader =
    "#path_a,path_b,eld,delta,dig_ld,effective_c,low_confidence\n";

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    return std::nullopt;
  }
  return std::move(buffer).str();
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

// One scored pair. Signatures with digests under 4 characters carry too
// little signal to estimate from, so those pairs fall back to exact LD on the
// original files when both are still readable.
struct PairOutcome {
  enum class Kind { Scored, FallbackExact, Unresolvable, Incompatible };

  Kind kind = Kind::Incompatible;
  EstimateResult est;            // Kind::Scored
  std::uint64_t exact_ld = 0;    // Kind::FallbackExact
  std::uint64_t dig_ld = 0;      // fallback kinds: LD of the (tiny) digests

  double delta_for_filtering() const {
    return kind == Kind::Scored && est.delta.applicable ? est.delta.value : 0.0;
  }
};

PairOutcome score_pair(const Signature& a, const Signature& b,
                       const RunConfig& config) {
  PairOutcome outcome;
  if (!compatible(a, b)) {
    outcome.kind = PairOutcome::Kind::Incompatible;
    return outcome;
  }
  if (a.digest_length < 4 || b.digest_length < 4) {
    outcome.dig_ld = levenshtein(a.digest, b.digest);
    const auto content_a = read_file(a.path);
    const auto content_b = read_file(b.path);
    if (content_a && content_b) {
      outcome.kind = PairOutcome::Kind::FallbackExact;
      outcome.exact_ld = levenshtein(*content_a, *content_b);
    } else {
      outcome.kind = PairOutcome::Kind::Unresolvable;
    }
    return outcome;
  }
  outcome.kind = PairOutcome::Kind::Scored;
  outcome.est = estimate(a, b, config.r, config.max_ratio);
  return outcome;
}

// threshold == 1.0 must report exactly the eld == 0 pairs; a delta of 1.0
// alone also covers containment matches whose eld is large.
bool report_pair(const PairOutcome& outcome, const RunConfig& config) {
  if (config.show_all) {
    return true;
  }
  if (outcome.delta_for_filtering() < config.threshold) {
    return false;
  }
  if (config.threshold >= 1.0) {
    return outcome.kind == PairOutcome::Kind::Scored && outcome.est.eld == 0;
  }
  return true;
}

void emit_pair(std::ostream& out, const Signature& a, const Signature& b,
               const PairOutcome& outcome) {
  out << a.path << ',' << b.path << ',';
  switch (outcome.kind) {
    case PairOutcome::Kind::Scored:
      out << outcome.est.eld << ',';
      if (outcome.est.delta.applicable) {
        out << fixed(outcome.est.delta.value, 6);
      } else {
        out << "NA";
      }
      out << ',' << outcome.est.dig_ld << ',' << fixed(outcome.est.effective_c, 4)
          << ',' << (outcome.est.low_confidence ? 1 : 0);
      break;
    case PairOutcome::Kind::FallbackExact:
      out << outcome.exact_ld << ",NA," << outcome.dig_ld << ",NA,1";
      break;
    case PairOutcome::Kind::Unresolvable:
      out << "NA,NA," << outcome.dig_ld << ",NA,1";
      break;
    case PairOutcome::Kind::Incompatible:
      break;  // never emitted; reported on the diagnostic stream
  }
  out << '\n';
}

std::optional<std::vector<Signature>> load_signature_file(
    const fs::path& path, std::ostream& diag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    diag << "error: cannot read signature file: " << path.string() << '\n';
    return std::nullopt;
  }
  std::vector<Signature> sigs;
  try {
    sigs = read_signatures(in);
  } catch (const SignatureError& e) {
    diag << "error: " << path.string() << ": " << e.what() << '\n';
    return std::nullopt;
  }
  for (const Signature& sig : sigs) {
    if (sig.digest_length > sig.file_length) {
      diag << "warning: " << sig.path
           << ": digest longer than the original file; record looks corrupt\n";
    }
  }
  return sigs;
}

}  // namespace

std::string preprocess(std::string text, bool lowercase, bool collapse_ws) {
  if (!lowercase && !collapse_ws) {
    return text;
  }
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (const char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (collapse_ws &&
        (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v')) {
      pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(lowercase && c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32)
                                                    : ch);
  }
  if (pending_space) {
    out.push_back(' ');
  }
  return out;
}

int run_gen(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  if (const ParamsError error = validate_params(config.params);
      error != ParamsError::None) {
    diag << "error: " << describe(error) << '\n';
    return kExitFatal;
  }

  bool partial = false;
  std::vector<fs::path> files;
  for (const fs::path& input : config.inputs) {
    std::error_code ec;
    const fs::file_status status = fs::status(input, ec);
    if (ec || !fs::exists(status)) {
      diag << "warning: cannot access input: " << input.string() << '\n';
      partial = true;
      continue;
    }
    if (fs::is_directory(status)) {
      fs::recursive_directory_iterator it(input, fs::directory_options::skip_permission_denied, ec);
      if (ec) {
        diag << "warning: cannot open directory: " << input.string() << '\n';
        partial = true;
        continue;
      }
      for (const auto& entry : it) {
        if (entry.is_regular_file(ec) && !ec) {
          files.push_back(entry.path());
        }
      }
    } else if (fs::is_regular_file(status)) {
      files.push_back(input);
    } else {
      diag << "warning: not a regular file: " << input.string() << '\n';
      partial = true;
    }
  }

  // Lexicographic path order fixes the output regardless of traversal order.
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.string() < b.string(); });

  if (files.empty()) {
    diag << "error: no readable inputs\n";
    return kExitFatal;
  }

  std::vector<std::optional<Signature>> sigs(files.size());
  std::vector<std::string> failures(files.size());
  parallel_for(files.size(), config.workers, [&](std::size_t i) {
    auto content = read_file(files[i]);
    if (!content) {
      failures[i] = "cannot read file";
      return;
    }
    if (content->empty()) {
      failures[i] = "empty file, no signature generated";
      return;
    }
    std::string text =
        preprocess(std::move(*content), config.lowercase, config.collapse_ws);
    try {
      sigs[i] = build_signature(files[i].string(), text, config.params);
    } catch (const SignatureError& e) {
      failures[i] = e.what();
    }
  });

  for (std::size_t i = 0; i < files.size(); ++i) {
    if (sigs[i]) {
      out << serialize(*sigs[i]);
      if (digest_size_suspect(sigs[i]->file_length, sigs[i]->digest_length,
                              sigs[i]->c, sigs[i]->n)) {
        diag << "warning: " << files[i].string()
             << ": digest size far from expectation; input looks repetitive "
                "or too small\n";
      }
    } else {
      diag << "warning: skipped " << files[i].string() << ": " << failures[i]
           << '\n';
      partial = true;
    }
  }
  return partial ? kExitPartial : kExitOk;
}

int run_compare(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  const auto sigs = load_signature_file(config.signature_file, diag);
  if (!sigs) {
    return kExitFatal;
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < sigs->size(); ++i) {
    for (std::size_t j = config.include_self ? i : i + 1; j < sigs->size(); ++j) {
      pairs.emplace_back(i, j);
    }
  }

  std::vector<PairOutcome> outcomes(pairs.size());
  parallel_for(pairs.size(), config.workers, [&](std::size_t k) {
    outcomes[k] = score_pair((*sigs)[pairs[k].first], (*sigs)[pairs[k].second], config);
  });

  out << kReportHeader;
  bool partial = false;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const Signature& a = (*sigs)[pairs[k].first];
    const Signature& b = (*sigs)[pairs[k].second];
    if (outcomes[k].kind == PairOutcome::Kind::Incompatible) {
      diag << "warning: incompatible parameters, pair skipped: " << a.path
           << " vs " << b.path << '\n';
      partial = true;
      continue;
    }
    if (report_pair(outcomes[k], config)) {
      emit_pair(out, a, b, outcomes[k]);
    }
  }
  return partial ? kExitPartial : kExitOk;
}

int run_search(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  const auto sources = load_signature_file(config.source_file, diag);
  if (!sources) {
    return kExitFatal;
  }
  const auto dests = load_signature_file(config.dest_file, diag);
  if (!dests) {
    return kExitFatal;
  }

  out << kReportHeader;
  if (sources->empty()) {
    return kExitOk;
  }

  const std::size_t dest_count = dests->size();
  std::vector<PairOutcome> outcomes(sources->size() * dest_count);
  parallel_for(outcomes.size(), config.workers, [&](std::size_t k) {
    outcomes[k] =
        score_pair((*sources)[k / dest_count], (*dests)[k % dest_count], config);
  });

  bool partial = false;
  std::vector<std::ptrdiff_t> best(sources->size(), -1);
  for (std::size_t s = 0; s < sources->size(); ++s) {
    for (std::size_t d = 0; d < dest_count; ++d) {
      const std::size_t k = s * dest_count + d;
      const Signature& src = (*sources)[s];
      const Signature& dst = (*dests)[d];
      if (outcomes[k].kind == PairOutcome::Kind::Incompatible) {
        diag << "warning: incompatible parameters, pair skipped: " << src.path
             << " vs " << dst.path << '\n';
        partial = true;
        continue;
      }
      if (report_pair(outcomes[k], config)) {
        emit_pair(out, src, dst, outcomes[k]);
      }
      if (best[s] < 0) {
        best[s] = static_cast<std::ptrdiff_t>(d);
        continue;
      }
      const PairOutcome& incumbent = outcomes[s * dest_count + best[s]];
      const PairOutcome& challenger = outcomes[k];
      const double delta_inc = incumbent.delta_for_filtering();
      const double delta_ch = challenger.delta_for_filtering();
      const auto eld_of = [](const PairOutcome& o) {
        switch (o.kind) {
          case PairOutcome::Kind::Scored:
            return o.est.eld;
          case PairOutcome::Kind::FallbackExact:
            return o.exact_ld;
          default:
            return std::numeric_limits<std::uint64_t>::max();
        }
      };
      if (delta_ch > delta_inc ||
          (delta_ch == delta_inc && eld_of(challenger) < eld_of(incumbent))) {
        best[s] = static_cast<std::ptrdiff_t>(d);
      }
    }
  }

  // Best-match summary, one comment line per source, in source order.
  for (std::size_t s = 0; s < sources->size(); ++s) {
    const Signature& src = (*sources)[s];
    if (best[s] < 0) {
      out << "# best: " << src.path << " -> none\n";
      continue;
    }
    const std::size_t k = s * dest_count + best[s];
    const Signature& dst = (*dests)[static_cast<std::size_t>(best[s])];
    out << "# best: " << src.path << " -> " << dst.path
        << " delta=" << fixed(outcomes[k].delta_for_filtering(), 6);
    if (outcomes[k].kind == PairOutcome::Kind::Scored) {
      out << " eld=" << outcomes[k].est.eld;
    } else if (outcomes[k].kind == PairOutcome::Kind::FallbackExact) {
      out << " eld=" << outcomes[k].exact_ld;
    }
    out << '\n';
  }
  return partial ? kExitPartial : kExitOk;
}

int run_exact(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  if (config.inputs.size() != 2) {
    diag << "error: exact mode needs exactly two files\n";
    return kExitFatal;
  }
  std::string contents[2];
  for (int i = 0; i < 2; ++i) {
    auto content = read_file(config.inputs[i]);
    if (!content) {
      diag << "error: cannot read file: " << config.inputs[i].string() << '\n';
      return kExitFatal;
    }
    contents[i] =
        preprocess(std::move(*content), config.lowercase, config.collapse_ws);
  }
  out << levenshtein(contents[0], contents[1]) << '\n';
  return kExitOk;
}

int run_calibrate(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  if (config.kind != ModelKind::RandomChars && config.corpus.empty()) {
    diag << "error: this model kind needs --corpus\n";
    return kExitFatal;
  }
  try {
    const AlphabetModel model = load_model(config.kind, config.corpus);
    const double r = expected_overlap(model, config.length, config.runs, config.seed);
    out << to_string(config.kind) << ',' << config.length << ',' << config.runs
        << ',' << config.seed << ',' << fixed(r, 6) << '\n';
  } catch (const CalibrationError& e) {
    diag << "error: " << e.what() << '\n';
    return kExitFatal;
  } catch (const std::invalid_argument& e) {
    diag << "error: " << e.what() << '\n';
    return kExitFatal;
  }
  return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  switch (config.mode) {
    case Mode::Gen:
      return run_gen(config, out, diag);
    case Mode::Compare:
      return run_compare(config, out, diag);
    case Mode::Search:
      return run_search(config, out, diag);
    case Mode::Exact:
      return run_exact(config, out, diag);
    case Mode::Calibrate:
      return run_calibrate(config, out, diag);
  }
  diag << "error: unknown mode\n";
  return kExitFatal;
}

}  // namespace eldist
