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

#include "inlc/verify.h"

#include <chrono>

#include "inlc/bimodal.h"
#include "inlc/classifier.h"
#include "inlc/correspondence.h"
#include "inlc/errors.h"
#include "inlc/fo.h"
#include "inlc/frame_io.h"
#include "inlc/print.h"
#include "inlc/standard_translation.h"

namespace inlc {

using json = nlohmann::json;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckReport start_report(std::string property, const CheckOptions& options) {
  CheckReport r;
  r.property = std::move(property);
  r.seed = options.seed;
  return r;
}

const char* truth(bool b) { return b ? "true" : "false"; }

void record(CheckReport& r, const CheckOptions& o, Counterexample c) {
  ++r.failures;
  if (r.counterexamples.size() < o.keep_counterexamples) {
    r.counterexamples.push_back(std::move(c));
  }
}

std::vector<std::string> sorted_vars(const Formula& f) {
  auto s = variables(f);
  return {s.begin(), s.end()};
}

// Extensions of `f` under every valuation of `vars` on `frame`, indexed by
// the valuation code (variable i owns bits i*|W| .. i*|W|+|W|-1).
std::vector<WorldSet> extension_table(const NeighbourhoodFrame& frame,
                                      const std::vector<std::string>& vars,
                                      const Formula& f) {
  std::vector<WorldSet> out;
  out.reserve(std::size_t{1} << (vars.size() * frame.size()));
  for_each_valuation(frame.size(), vars, [&](const Valuation& v) {
    out.push_back(extension(frame, v, f));
  });
  return out;
}

Valuation decode(std::uint64_t code, const std::vector<std::string>& vars,
                 std::size_t n) {
  Valuation v;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    v[vars[i]] = WorldSet(static_cast<std::uint32_t>((code >> (i * n)) & mask));
  }
  return v;
}

}  // namespace

void CheckReport::merge(const CheckReport& other, std::size_t cap) {
  instances += other.instances;
  failures += other.failures;
  route_disagreements += other.route_disagreements;
  frames = std::max(frames, other.frames);
  for (const auto& c : other.counterexamples) {
    if (counterexamples.size() >= cap) break;
    counterexamples.push_back(c);
  }
}

json report_to_json(const CheckReport& r) {
  json cex = json::array();
  for (const auto& c : r.counterexamples) {
    json v = json::object();
    for (const auto& [p, s] : c.valuation) v[p] = world_set_to_json(s);
    cex.push_back({{"kind", c.kind},
                   {"frame", frame_to_json(c.frame)},
                   {"valuation", v},
                   {"world", "w" + std::to_string(c.world)},
                   {"formula", c.formula},
                   {"expected", c.expected},
                   {"actual", c.actual}});
  }
  return {{"property", r.property},
          {"passed", r.passed()},
          {"instances", r.instances},
          {"frames", r.frames},
          {"failures", r.failures},
          {"route_disagreements", r.route_disagreements},
          {"counterexamples", cex},
          {"elapsed_seconds", r.elapsed_seconds},
          {"seed", r.seed}};
}

void for_each_frame(const CheckOptions& options,
                    const std::function<void(const NeighbourhoodFrame&)>& fn) {
  if (options.max_worlds < 1) throw std::invalid_argument("max_worlds must be at least 1");
  if (options.max_worlds > kMaxWorlds) {
    throw std::invalid_argument("max_worlds must be at most " + std::to_string(kMaxWorlds));
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(2, options.max_worlds); ++n) {
    for (const auto& frame : enumerate_frames(n)) fn(frame);
  }
  for (std::size_t n = 3; n <= options.max_worlds; ++n) {
    for (std::size_t i = 0; i < options.samples; ++i) {
      fn(random_frame(n, mix_seed(options.seed, (n << 32) + i)));
    }
  }
}

CheckReport check_st_correctness(const std::vector<Formula>& corpus,
                                 const CheckOptions& options) {
  Stopwatch clock;
  CheckReport r = start_report("st-correctness", options);
  const Var x = default_world_var();
  std::vector<FoFormula> translations;
  std::vector<std::vector<std::string>> vars;
  for (const auto& f : corpus) {
    translations.push_back(st(f, x));
    vars.push_back(sorted_vars(f));
  }
  for_each_frame(options, [&](const NeighbourhoodFrame& frame) {
    ++r.frames;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      FoEvaluator eval(frame, translations[i]);
      for_each_valuation(frame.size(), vars[i], [&](const Valuation& v) {
        const WorldSet ext = extension(frame, v, corpus[i]);
        for (World w = 0; w < frame.size(); ++w) {
          ++r.instances;
          const bool expected = ext.contains(w);
          const bool actual = eval(v, {{x.name, w}});
          if (expected != actual) {
            record(r, options, {"mismatch", frame, v, w, print_inl(corpus[i]),
                                truth(expected), truth(actual)});
          }
        }
      });
    }
  });
  r.elapsed_seconds = clock.seconds();
  return r;
}

CheckReport check_tau_correctness(const std::vector<Formula>& corpus,
                                  const CheckOptions& options) {
  Stopwatch clock;
  CheckReport r = start_report("tau-correctness", options);
  std::vector<BimodalFormula> images;
  std::vector<std::vector<std::string>> vars;
  for (const auto& f : corpus) {
    images.push_back(tau(f));
    vars.push_back(sorted_vars(f));
  }
  for_each_frame(options, [&](const NeighbourhoodFrame& frame) {
    ++r.frames;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for_each_valuation(frame.size(), vars[i], [&](const Valuation& v) {
        const WorldSet expected = extension(frame, v, corpus[i]);
        const WorldSet actual = bimodal_extension(frame, v, images[i]);
        for (World w = 0; w < frame.size(); ++w) {
          ++r.instances;
          if (expected.contains(w) != actual.contains(w)) {
            record(r, options, {"mismatch", frame, v, w, print_inl(corpus[i]),
                                truth(expected.contains(w)),
                                truth(actual.contains(w))});
          }
        }
      });
    }
  });
  r.elapsed_seconds = clock.seconds();
  return r;
}

CheckReport check_correspondence(const Formula& formula, Route route,
                                 const CheckOptions& options) {
  Stopwatch clock;
  const char* name = route == Route::kDirect    ? "correspondence-direct"
                     : route == Route::kBimodal ? "correspondence-bimodal"
                                                : "correspondence-both";
  CheckReport r = start_report(name, options);
  SahlqvistClass cls = classify(formula);
  if (cls.verdict == Tier::kNotSahlqvist) {
    throw NotSahlqvistError("not an INL-Sahlqvist formula: " + cls.reason);
  }
  const bool direct = route != Route::kBimodal;
  const bool bimodal = route != Route::kDirect;
  const FoFormula alpha_direct = direct ? correspondent_direct(formula) : FoFormula::truth();
  const FoFormula alpha_bimodal =
      bimodal ? correspondent_via_bimodal(formula) : FoFormula::truth();
  const std::string text = print_inl(formula);
  const Var x = default_world_var();
  for_each_frame(options, [&](const NeighbourhoodFrame& frame) {
    ++r.frames;
    const WorldSet valid = valid_worlds(frame, formula);
    std::optional<FoEvaluator> ed, eb;
    if (direct) ed.emplace(frame, alpha_direct);
    if (bimodal) eb.emplace(frame, alpha_bimodal);
    for (World w = 0; w < frame.size(); ++w) {
      ++r.instances;
      const bool expected = valid.contains(w);
      const Assignment at{{x.name, w}};
      std::optional<bool> a, b;
      if (ed) a = (*ed)({}, at);
      if (eb) b = (*eb)({}, at);
      if (a && *a != expected) {
        record(r, options, {"mismatch", frame, {}, w, text, truth(expected), truth(*a)});
      }
      if (b && *b != expected) {
        record(r, options, {"mismatch", frame, {}, w, text, truth(expected), truth(*b)});
      }
      if (a && b && *a != *b) {
        ++r.route_disagreements;
        record(r, options,
               {"route-disagreement", frame, {}, w, text, truth(*a), truth(*b)});
      }
    }
  });
  r.elapsed_seconds = clock.seconds();
  return r;
}

Formula lemma_formula(std::size_t arity) {
  std::vector<Formula> inst;
  for (std::size_t i = 1; i <= arity; ++i) {
    inst.push_back(Formula::var("p" + std::to_string(i)));
  }
  return Formula::box(std::move(inst), Formula::var("p"));
}

CheckReport check_lemma_monotonicity(const CheckOptions& options) {
  Stopwatch clock;
  CheckReport r = start_report("lemma-monotonicity", options);
  std::vector<Formula> boxes;
  for (std::size_t n = 0; n <= 3; ++n) boxes.push_back(lemma_formula(n));

  for_each_frame(options, [&](const NeighbourhoodFrame& frame) {
    ++r.frames;
    const std::size_t worlds = frame.size();
    for (const auto& box : boxes) {
      const auto vars = sorted_vars(box);
      const auto table = extension_table(frame, vars, box);
      const std::uint64_t codes = table.size();
      const std::string text = print_inl(box);
      const std::uint64_t world_mask = (std::uint64_t{1} << worlds) - 1;

      // Item 1: every V1 <= V2, i.e. every code1 that is a submask of code2.
      for (std::uint64_t hi = 0; hi < codes; ++hi) {
        for (std::uint64_t lo = hi;; lo = (lo - 1) & hi) {
          ++r.instances;
          if (!table[lo].subset_of(table[hi])) {
            const WorldSet bad(table[lo].bits() & ~table[hi].bits());
            const World w = static_cast<World>(std::countr_zero(bad.bits()));
            record(r, options, {"mismatch", frame, decode(hi, vars, worlds), w,
                                text, "true", "false"});
          }
          if (lo == 0) break;
        }
      }

      // Item 2: additivity in each instantial coordinate.
      for (std::uint64_t code = 0; code < codes; ++code) {
        for (std::size_t i = 0; i < vars.size(); ++i) {
          if (vars[i] == "p") continue;
          const std::size_t shift = i * worlds;
          const std::uint64_t own = (code >> shift) & world_mask;
          const std::uint64_t cleared = code & ~(world_mask << shift);
          WorldSet via_singletons;
          for (World v = 0; v < worlds; ++v) {
            if ((own >> v) & 1u) {
              via_singletons = via_singletons | table[cleared | (std::uint64_t{1} << (shift + v))];
            }
          }
          const WorldSet direct = table[code];
          for (World w = 0; w < worlds; ++w) {
            ++r.instances;
            if (direct.contains(w) != via_singletons.contains(w)) {
              record(r, options, {"mismatch", frame, decode(code, vars, worlds), w,
                                  text, truth(direct.contains(w)),
                                  truth(via_singletons.contains(w))});
            }
          }
        }
      }
    }
  });
  r.elapsed_seconds = clock.seconds();
  return r;
}

}  // namespace inlc
