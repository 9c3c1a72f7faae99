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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "cli.h"
#include "inlc/bimodal.h"
#include "inlc/classifier.h"
#include "inlc/corpus.h"
#include "inlc/parser.h"
#include "inlc/print.h"
#include "inlc/verify.h"

namespace {

using namespace inlc;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string describe(const CheckReport& r) {
  std::ostringstream s;
  s << r.instances << " instances on " << r.frames << " frames, " << r.failures
    << " counterexamples";
  if (!r.counterexamples.empty()) {
    const auto& c = r.counterexamples.front();
    s << " (first: " << c.formula << " at w" << c.world << ", expected " << c.expected
      << ", got " << c.actual << ")";
  }
  return s.str();
}

CheckOptions sweep(std::size_t max_worlds) {
  CheckOptions o;
  o.max_worlds = max_worlds;
  o.samples = 200;
  o.seed = kDefaultSeed;
  return o;
}

Outcome timed(double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.2f s", s);
  o.detail += buf;
  if (limit > 0 && s >= limit) {
    o.pass = false;
    o.detail += " over the time limit";
  }
  return o;
}

Outcome st_correctness() {
  CheckReport r = check_st_correctness(translation_corpus(kDefaultSeed), sweep(3));
  return {r.passed(), describe(r)};
}

Outcome tau_correctness() {
  CheckReport r = check_tau_correctness(translation_corpus(kDefaultSeed), sweep(3));
  return {r.passed(), describe(r)};
}

Outcome correspondence() {
  const auto corpus = sahlqvist_corpus();
  std::set<Tier> tiers;
  for (const auto& f : corpus) tiers.insert(classify(f).verdict);
  if (corpus.size() < 20 || tiers.size() != 3 || tiers.count(Tier::kNotSahlqvist)) {
    return {false, "corpus does not span the three tiers with at least 20 formulas"};
  }
  CheckReport total;
  for (const auto& f : corpus) {
    total.merge(check_correspondence(f, Route::kDirect, sweep(3)), 4);
  }
  return {total.passed(), std::to_string(corpus.size()) + " formulas, " + describe(total)};
}

Outcome route_agreement() {
  std::uint64_t disagreements = 0;
  std::uint64_t instances = 0;
  for (const auto& f : sahlqvist_corpus()) {
    CheckReport r = check_correspondence(f, Route::kBoth, sweep(2));
    disagreements += r.route_disagreements;
    instances += r.instances;
  }
  return {disagreements == 0, std::to_string(instances) + " instances, " +
                                  std::to_string(disagreements) + " disagreements"};
}

Outcome sahlqvist_preservation() {
  std::size_t checked = 0;
  std::string bad;
  for (const auto& f : sahlqvist_corpus()) {
    if (classify(f).verdict == Tier::kNotSahlqvist) continue;
    ++checked;
    if (!is_bimodal_sahlqvist(tau(f))) bad += " " + print_inl(f) + ";";
  }
  return {bad.empty() && checked > 0,
          std::to_string(checked) + " formulas" + (bad.empty() ? "" : ", rejected:" + bad)};
}

Outcome monotonicity() {
  CheckReport r = check_lemma_monotonicity(sweep(3));
  return {r.passed(), "arities 0-3, " + describe(r)};
}

Outcome classifier_ground_truth_check() {
  std::size_t right = 0;
  std::string wrong;
  const auto labelled = classifier_ground_truth();
  for (const auto& l : labelled) {
    Tier got = classify(parse_inl(l.text)).verdict;
    if (got == l.tier) {
      ++right;
    } else {
      wrong += " " + l.text + " gave " + to_string(got) + ";";
    }
  }
  return {right == labelled.size(),
          std::to_string(right) + "/" + std::to_string(labelled.size()) + " correct" + wrong};
}

Outcome negative_control() {
  std::string detail;
  bool pass = true;
  for (const auto& text : non_sahlqvist_controls()) {
    std::ostringstream out, err;
    int code = cli::run({"correspond", text}, out, err);
    if (code != cli::kNotSahlqvist || !out.str().empty()) {
      pass = false;
      detail += " " + text + " exited " + std::to_string(code) + ";";
    }
  }
  return {pass, std::to_string(non_sahlqvist_controls().size()) + " controls rejected" +
                    (pass ? "" : ", but" + detail)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"st-correctness", 60, st_correctness},
      {"tau-correctness", 60, tau_correctness},
      {"correspondence", 120, correspondence},
      {"route-agreement", 0, route_agreement},
      {"sahlqvist-preservation", 0, sahlqvist_preservation},
      {"box-monotonicity-additivity", 0, monotonicity},
      {"classifier-ground-truth", 0, classifier_ground_truth_check},
      {"negative-control", 0, negative_control},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = timed(c.limit, c.run);
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << index << "] " << c.name << ": "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
