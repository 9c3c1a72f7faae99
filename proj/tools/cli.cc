// Copyright 2026 The inlc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "inlc/bimodal.h"
#include "inlc/classifier.h"
#include "inlc/corpus.h"
#include "inlc/correspondence.h"
#include "inlc/errors.h"
#include "inlc/frame_io.h"
#include "inlc/parser.h"
#include "inlc/print.h"
#include "inlc/standard_translation.h"
#include "inlc/verify.h"

namespace inlc::cli {

namespace {

using json = nlohmann::json;

// Input/output problems that are not about the formula itself.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Config {
  std::string command;
  std::string formula;
  std::string file;
  std::string format = "text";
  std::string route;  // empty: direct for correspond, both for check
  std::string suite = "st";
  std::string frame;
  std::string world;
  std::size_t max_worlds = 3;
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("INLC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("INLC_SEED is not an unsigned integer: ") + env);
    }
  }
  return kDefaultSeed;
}

bool wants_json(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=json") return true;
    if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json") return true;
  }
  return false;
}

class Runner {
 public:
  Runner(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {
    format_ = *parse_format(cfg.format);
  }

  int run() {
    const std::string& c = cfg_.command;
    if (c == "parse") return parse();
    if (c == "classify") return classify_cmd();
    if (c == "st") return st_cmd();
    if (c == "tau") return tau_cmd();
    if (c == "correspond") return correspond();
    if (c == "check") return check();
    if (c == "eval") return eval();
    throw UsageError("unknown command '" + c + "'");
  }

 private:
  bool json_out() const { return format_ == Format::kJson; }

  bool has_input() const { return !cfg_.formula.empty() || !cfg_.file.empty(); }

  std::string input_text() const {
    if (!cfg_.formula.empty() && !cfg_.file.empty()) {
      throw UsageError("give the formula inline or with --file, not both");
    }
    if (!cfg_.file.empty()) {
      std::ifstream in(cfg_.file);
      if (!in) throw UsageError("cannot read '" + cfg_.file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    if (cfg_.formula.empty()) throw UsageError("missing formula");
    return cfg_.formula;
  }

  Formula formula() const { return parse_inl(input_text()); }

  CheckOptions options() const {
    return CheckOptions{.max_worlds = cfg_.max_worlds,
                        .samples = cfg_.samples,
                        .seed = cfg_.seed};
  }

  int parse() {
    Formula f = formula();
    if (json_out()) {
      out_ << inl_to_json(f).dump() << "\n";
    } else {
      out_ << print_inl(f, format_) << "\n";
    }
    return kOk;
  }

  int classify_cmd() {
    SahlqvistClass c = classify(formula());
    json j = classification_to_json(c);
    out_ << (json_out() ? j.dump() : j.dump(2)) << "\n";
    return c.verdict == Tier::kNotSahlqvist ? kNotSahlqvist : kOk;
  }

  int st_cmd() {
    FoFormula alpha = st(formula(), default_world_var());
    out_ << print_fo(alpha, format_) << "\n";
    return kOk;
  }

  int tau_cmd() {
    BimodalFormula chi = tau(formula());
    out_ << print_bimodal(chi, format_) << "\n";
    return kOk;
  }

  Route route(Route fallback) const {
    if (cfg_.route.empty()) return fallback;
    if (cfg_.route == "direct") return Route::kDirect;
    if (cfg_.route == "bimodal") return Route::kBimodal;
    return Route::kBoth;
  }

  int correspond() {
    const Formula f = formula();
    const Route r = route(Route::kDirect);
    // Both correspondents are computed before anything is printed, so a
    // rejected formula never produces partial output.
    std::optional<FoFormula> direct, bimodal;
    if (r != Route::kBimodal) direct = correspondent_direct(f);
    if (r != Route::kDirect) bimodal = correspondent_via_bimodal(f);
    if (r != Route::kBoth) {
      const FoFormula& alpha = direct ? *direct : *bimodal;
      if (json_out()) {
        out_ << json{{"route", direct ? "direct" : "bimodal"},
                     {"alpha", fo_to_json(alpha)},
                     {"text", print_fo(alpha)}}.dump()
             << "\n";
      } else {
        out_ << print_fo(alpha, format_) << "\n";
      }
      return kOk;
    }
    CheckOptions small = options();
    small.max_worlds = 2;
    CheckReport agreement = check_correspondence(f, Route::kBoth, small);
    const char* verdict = agreement.route_disagreements == 0 ? "same" : "different";
    if (json_out()) {
      out_ << json{{"route", "both"},
                   {"direct", fo_to_json(*direct)},
                   {"bimodal", fo_to_json(*bimodal)},
                   {"direct_text", print_fo(*direct)},
                   {"bimodal_text", print_fo(*bimodal)},
                   {"agreement", verdict}}.dump()
           << "\n";
    } else {
      out_ << "direct:  " << print_fo(*direct, format_) << "\n"
           << "bimodal: " << print_fo(*bimodal, format_) << "\n"
           << "routes on frames with at most 2 worlds: " << verdict << "\n";
    }
    return kOk;
  }

  int check() {
    const CheckOptions opts = options();
    CheckReport report;
    if (cfg_.suite == "st" || cfg_.suite == "tau") {
      std::vector<Formula> corpus =
          has_input() ? std::vector<Formula>{formula()} : translation_corpus(cfg_.seed);
      report = cfg_.suite == "st" ? check_st_correctness(corpus, opts)
                                  : check_tau_correctness(corpus, opts);
    } else if (cfg_.suite == "mono") {
      report = check_lemma_monotonicity(opts);
    } else {
      const Route r = route(Route::kBoth);
      if (has_input()) {
        report = check_correspondence(formula(), r, opts);
      } else {
        report.property = "correspondence-corpus";
        report.seed = opts.seed;
        for (const auto& f : sahlqvist_corpus()) {
          CheckReport one = check_correspondence(f, r, opts);
          report.merge(one, opts.keep_counterexamples);
          report.elapsed_seconds += one.elapsed_seconds;
        }
      }
    }
    if (json_out()) {
      out_ << report_to_json(report).dump() << "\n";
    } else {
      out_ << report.property << ": " << (report.passed() ? "pass" : "FAIL") << ", "
           << report.instances << " instances on " << report.frames << " frames, "
           << report.failures << " counterexamples, seed " << report.seed << ", "
           << report.elapsed_seconds << " s\n";
      for (const auto& c : report.counterexamples) {
        json v = json::object();
        for (const auto& [p, s] : c.valuation) v[p] = world_set_to_json(s);
        out_ << "  " << c.kind << " at w" << c.world << " in " << frame_to_json(c.frame).dump()
             << " under " << v.dump() << ": " << c.formula << " expected " << c.expected
             << ", got " << c.actual << "\n";
      }
    }
    return report.passed() ? kOk : kCheckFailure;
  }

  int eval() {
    if (cfg_.frame.empty()) throw UsageError("eval needs --frame");
    if (cfg_.world.empty()) throw UsageError("eval needs --world");
    const Formula f = formula();
    NamedModel m = load_model(cfg_.frame);
    const World w = m.world(cfg_.world);
    const bool value = satisfies(m.model, w, f);
    if (json_out()) {
      out_ << json{{"world", cfg_.world}, {"formula", print_inl(f)}, {"value", value}}.dump()
           << "\n";
    } else {
      out_ << (value ? "true" : "false") << "\n";
    }
    return kOk;
  }

 private:
  const Config& cfg_;
  std::ostream& out_;
  Format format_;
};

void report_error(std::ostream& err, bool as_json, const std::string& kind,
                  const std::string& message, const ParseError* parse = nullptr) {
  if (as_json) {
    json j{{"error", kind}, {"message", message}};
    if (parse) j["span"] = {{"start", parse->span().start}, {"end", parse->span().end}};
    err << j.dump() << "\n";
  } else {
    err << "inlc: " << kind << ": " << message << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const bool early_json = wants_json(args);
  Config cfg;
  CLI::App app{"Sahlqvist correspondence for instantial neighbourhood logic", "inlc"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    auto* f = sub->add_option("formula", cfg.formula, "Formula text");
    auto* file = sub->add_option("--file", cfg.file, "Read the formula from a file");
    f->excludes(file);
    file->excludes(f);
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}));
  };
  auto add_sweep = [&cfg](CLI::App* sub) {
    sub->add_option("--max-worlds", cfg.max_worlds, "Largest frame size checked")
        ->check(CLI::Range(std::size_t{1}, kMaxWorlds));
    sub->add_option("--samples", cfg.samples, "Random frames per size above 2");
    sub->add_option("--seed", cfg.seed, "Seed for sampled frames and corpora");
  };

  add_common(app.add_subcommand("parse", "Parse and print a formula"));
  add_common(app.add_subcommand("classify", "Sahlqvist tier and decomposition"));
  add_common(app.add_subcommand("st", "Standard translation at x"));
  add_common(app.add_subcommand("tau", "Translation into the bimodal language"));

  auto* correspond = app.add_subcommand("correspond", "First-order local correspondent");
  add_common(correspond);
  correspond->add_option("--route", cfg.route, "direct, bimodal or both")
                  ->check(CLI::IsMember({"direct", "bimodal", "both"}));

  auto* check = app.add_subcommand("check", "Run a verification suite");
  add_common(check);
  add_sweep(check);
  check->add_option("--suite", cfg.suite, "st, tau, mono or correspond")
      ->check(CLI::IsMember({"st", "tau", "mono", "correspond"}));
  check->add_option("--route", cfg.route, "direct, bimodal or both")
                          ->check(CLI::IsMember({"direct", "bimodal", "both"}));

  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a model file");
  add_common(eval);
  eval->add_option("--frame", cfg.frame, "Model file (JSON)")->required();
  eval->add_option("--world", cfg.world, "World name")->required();

  try {
    cfg.seed = default_seed();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, early_json, "usage", e.what());
    return kUsage;
  } catch (const UsageError& e) {
    report_error(err, early_json, "usage", e.what());
    return kUsage;
  }

  const bool as_json = cfg.format == "json";
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    return Runner(cfg, out).run();
  } catch (const ParseError& e) {
    report_error(err, as_json, "parse", e.what(), &e);
    return kParseFailure;
  } catch (const NotSahlqvistError& e) {
    report_error(err, as_json, "not-sahlqvist", e.what());
    return kNotSahlqvist;
  } catch (const UsageError& e) {
    report_error(err, as_json, "usage", e.what());
    return kUsage;
  } catch (const FrameFormatError& e) {
    report_error(err, as_json, "frame", e.what());
    return kUsage;
  } catch (const UnknownWorld& e) {
    report_error(err, as_json, "unknown-world", e.what());
    return kUsage;
  } catch (const InternalError& e) {
    report_error(err, as_json, "internal", e.what());
    return kCheckFailure;
  } catch (const std::exception& e) {
    report_error(err, as_json, "usage", e.what());
    return kUsage;
  }
}

}  // namespace inlc::cli
