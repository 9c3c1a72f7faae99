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

#include "inlc/semantics.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "inlc/errors.h"

namespace inlc {

NeighbourhoodFrame::NeighbourhoodFrame(std::size_t size)
    : neighbourhoods_(size),
      membership_(size, std::vector<bool>(std::size_t{1} << size, false)) {
  if (size == 0 || size > kMaxWorlds) {
    throw std::invalid_argument("frame size must be in 1.." +
                                std::to_string(kMaxWorlds));
  }
}

NeighbourhoodFrame::NeighbourhoodFrame(
    std::size_t size, std::vector<std::vector<WorldSet>> neighbourhoods)
    : NeighbourhoodFrame(size) {
  if (neighbourhoods.size() != size) {
    throw std::invalid_argument("neighbourhood function is not total");
  }
  for (World w = 0; w < size; ++w) {
    for (WorldSet s : neighbourhoods[w]) add_neighbourhood(w, s);
  }
}

void NeighbourhoodFrame::add_neighbourhood(World w, WorldSet s) {
  if (w >= size()) throw UnknownWorld("world " + std::to_string(w));
  if (!s.subset_of(worlds())) {
    throw std::invalid_argument("neighbourhood is not a subset of the worlds");
  }
  if (membership_[w][s.bits()]) return;
  membership_[w][s.bits()] = true;
  auto& list = neighbourhoods_[w];
  list.insert(std::lower_bound(list.begin(), list.end(), s), s);
}

WorldSet extension(const NeighbourhoodFrame& frame, const Valuation& valuation,
                   const Formula& phi) {
  using K = Formula::Kind;
  const std::size_t n = frame.size();
  switch (phi.kind()) {
    case K::kVar: {
      auto it = valuation.find(phi.name());
      return it == valuation.end() ? WorldSet() : it->second & frame.worlds();
    }
    case K::kBot:
      return WorldSet();
    case K::kTop:
      return frame.worlds();
    case K::kNot:
      return extension(frame, valuation, phi.arg()).complement(n);
    case K::kAnd:
      return extension(frame, valuation, phi.lhs()) &
             extension(frame, valuation, phi.rhs());
    case K::kOr:
      return extension(frame, valuation, phi.lhs()) |
             extension(frame, valuation, phi.rhs());
    case K::kImplies:
      return extension(frame, valuation, phi.lhs()).complement(n) |
             extension(frame, valuation, phi.rhs());
    case K::kIff: {
      WorldSet a = extension(frame, valuation, phi.lhs());
      WorldSet b = extension(frame, valuation, phi.rhs());
      return WorldSet(~(a.bits() ^ b.bits())) & frame.worlds();
    }
    case K::kBox: {
      const WorldSet univ = extension(frame, valuation, phi.universal());
      std::vector<WorldSet> inst;
      for (const auto& f : phi.instantial()) {
        inst.push_back(extension(frame, valuation, f));
      }
      WorldSet result;
      for (World w = 0; w < n; ++w) {
        for (WorldSet s : frame.neighbourhoods(w)) {
          if (!s.subset_of(univ)) continue;
          if (std::all_of(inst.begin(), inst.end(),
                          [s](WorldSet e) { return s.intersects(e); })) {
            result = result.with(w);
            break;
          }
        }
      }
      return result;
    }
  }
  return WorldSet();
}

bool satisfies(const Model& model, World w, const Formula& phi) {
  if (w >= model.frame.size()) {
    throw UnknownWorld("world " + std::to_string(w) + " is not in the frame");
  }
  return extension(model.frame, model.valuation, phi).contains(w);
}

WorldSet valid_worlds(const NeighbourhoodFrame& frame, const Formula& phi) {
  auto vars_set = variables(phi);
  std::vector<std::string> vars(vars_set.begin(), vars_set.end());
  WorldSet valid = frame.worlds();
  for_each_valuation(frame.size(), vars, [&](const Valuation& v) {
    if (!valid.empty()) valid = valid & extension(frame, v, phi);
  });
  return valid;
}

bool valid_at(const NeighbourhoodFrame& frame, World w, const Formula& phi) {
  if (w >= frame.size()) {
    throw UnknownWorld("world " + std::to_string(w) + " is not in the frame");
  }
  return valid_worlds(frame, phi).contains(w);
}

FrameEnumeration::FrameEnumeration(std::size_t n) : n_(n) {
  if (n < 1 || n > 3) {
    throw std::invalid_argument("frame enumeration supports 1..3 worlds");
  }
  const std::size_t bits = n << n;  // n worlds times 2^n subsets
  count_ = bits >= 64 ? 0 : std::uint64_t{1} << bits;
}

NeighbourhoodFrame FrameEnumeration::at(std::uint64_t code) const {
  NeighbourhoodFrame frame(n_);
  const std::size_t subsets = std::size_t{1} << n_;
  for (World w = 0; w < n_; ++w) {
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if ((code >> (w * subsets + s)) & 1u) frame.add_neighbourhood(w, WorldSet(s));
    }
  }
  return frame;
}

FrameEnumeration enumerate_frames(std::size_t n) { return FrameEnumeration(n); }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

NeighbourhoodFrame random_frame(std::size_t n, std::uint64_t seed) {
  NeighbourhoodFrame frame(n);
  std::mt19937_64 rng(seed);
  const std::size_t subsets = std::size_t{1} << n;
  for (World w = 0; w < n; ++w) {
    for (std::uint32_t s = 0; s < subsets; ++s) {
      if (rng() >> 63) frame.add_neighbourhood(w, WorldSet(s));
    }
  }
  return frame;
}

namespace {

// Raw engine output reduced modulo `bound`; distribution classes are avoided
// so that sequences are identical across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

Formula random_formula_impl(int depth, const std::vector<std::string>& vars,
                            std::mt19937_64& rng) {
  const std::size_t atoms = vars.size() + 2;
  if (depth <= 0) {
    std::size_t pick = draw(rng, atoms);
    if (pick < vars.size()) return Formula::var(vars[pick]);
    return pick == vars.size() ? Formula::top() : Formula::bot();
  }
  // Productions: var, top, bot, ~, &, |, ->, <->, Box.
  switch (draw(rng, 9)) {
    case 0:
      return vars.empty() ? Formula::top()
                          : Formula::var(vars[draw(rng, vars.size())]);
    case 1:
      return Formula::top();
    case 2:
      return Formula::bot();
    case 3:
      return Formula::negation(random_formula_impl(depth - 1, vars, rng));
    case 4: {
      Formula a = random_formula_impl(depth - 1, vars, rng);
      return Formula::conj(a, random_formula_impl(depth - 1, vars, rng));
    }
    case 5: {
      Formula a = random_formula_impl(depth - 1, vars, rng);
      return Formula::disj(a, random_formula_impl(depth - 1, vars, rng));
    }
    case 6: {
      Formula a = random_formula_impl(depth - 1, vars, rng);
      return Formula::implies(a, random_formula_impl(depth - 1, vars, rng));
    }
    case 7: {
      Formula a = random_formula_impl(depth - 1, vars, rng);
      return Formula::iff(a, random_formula_impl(depth - 1, vars, rng));
    }
    default: {
      std::size_t arity = draw(rng, 4);
      std::vector<Formula> inst;
      for (std::size_t i = 0; i < arity; ++i) {
        inst.push_back(random_formula_impl(depth - 1, vars, rng));
      }
      Formula univ = random_formula_impl(depth - 1, vars, rng);
      return Formula::box(std::move(inst), std::move(univ));
    }
  }
}

}  // namespace

Formula random_formula(int depth, const std::vector<std::string>& vars,
                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_formula_impl(depth, vars, rng);
}

}  // namespace inlc
