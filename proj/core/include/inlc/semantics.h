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

#ifndef INLC_SEMANTICS_H_
#define INLC_SEMANTICS_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "inlc/formula.h"

namespace inlc {

// Worlds of a finite frame are the dense indices 0..size-1.
using World = std::uint32_t;

inline constexpr std::size_t kMaxWorlds = 12;

// A subset of the worlds of a frame, as a bit mask.
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr WorldSet singleton(World w) { return WorldSet(1u << w); }
  static constexpr WorldSet all(std::size_t n) {
    return WorldSet(n >= 32 ? ~0u : (1u << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(World w) const { return (bits_ >> w) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool subset_of(WorldSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(WorldSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
  constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
  constexpr WorldSet complement(std::size_t n) const {
    return WorldSet(~bits_ & all(n).bits_);
  }
  constexpr WorldSet with(World w) const { return WorldSet(bits_ | (1u << w)); }

  friend constexpr auto operator<=>(WorldSet, WorldSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// A finite neighbourhood frame (W, N). N(w) is kept sorted by subset
// encoding and duplicate-free; membership is also indexed for R_N lookups.
class NeighbourhoodFrame {
 public:
  explicit NeighbourhoodFrame(std::size_t size);
  NeighbourhoodFrame(std::size_t size,
                     std::vector<std::vector<WorldSet>> neighbourhoods);

  std::size_t size() const { return neighbourhoods_.size(); }
  std::size_t subset_count() const { return std::size_t{1} << size(); }
  WorldSet worlds() const { return WorldSet::all(size()); }

  const std::vector<WorldSet>& neighbourhoods(World w) const {
    return neighbourhoods_.at(w);
  }
  bool has_neighbourhood(World w, WorldSet s) const {
    return membership_[w][s.bits()];
  }

  void add_neighbourhood(World w, WorldSet s);

  friend bool operator==(const NeighbourhoodFrame& a,
                         const NeighbourhoodFrame& b) {
    return a.neighbourhoods_ == b.neighbourhoods_;
  }

 private:
  std::vector<std::vector<WorldSet>> neighbourhoods_;
  std::vector<std::vector<bool>> membership_;
};

// Variables missing from a valuation denote the empty set.
using Valuation = std::map<std::string, WorldSet>;

struct Model {
  NeighbourhoodFrame frame;
  Valuation valuation;
};

// The set of worlds of `model` at which `phi` holds.
WorldSet extension(const NeighbourhoodFrame& frame, const Valuation& valuation,
                   const Formula& phi);

// Throws UnknownWorld if `w` is not a world of the frame.
bool satisfies(const Model& model, World w, const Formula& phi);

// Frame validity at a point: `phi` holds at `w` under every valuation of
// its variables.
bool valid_at(const NeighbourhoodFrame& frame, World w, const Formula& phi);

// All worlds at which `phi` is valid; one pass over the valuations.
WorldSet valid_worlds(const NeighbourhoodFrame& frame, const Formula& phi);

// Calls `fn(valuation)` for each of the 2^(|vars| * |W|) valuations of
// `vars`. Valuations are produced in counting order with the first
// variable as the least significant digit.
template <typename Fn>
void for_each_valuation(std::size_t world_count,
                        const std::vector<std::string>& vars, Fn&& fn) {
  const std::uint64_t per_var = std::uint64_t{1} << world_count;
  std::vector<std::uint32_t> digits(vars.size(), 0);
  Valuation v;
  for (const auto& name : vars) v[name] = WorldSet();
  while (true) {
    fn(static_cast<const Valuation&>(v));
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++digits[i] < per_var) {
        v[vars[i]] = WorldSet(digits[i]);
        break;
      }
      digits[i] = 0;
      v[vars[i]] = WorldSet();
    }
    if (i == vars.size()) return;
  }
}

// Deterministic enumeration of every frame on n worlds. Frame number c has
// subset s in N(w) iff bit (w * 2^n + s) of c is set, so frame 0 has no
// neighbourhoods anywhere. Supported for 1 <= n <= 3.
class FrameEnumeration {
 public:
  explicit FrameEnumeration(std::size_t n);

  std::uint64_t count() const { return count_; }
  NeighbourhoodFrame at(std::uint64_t code) const;

  class iterator {
   public:
    using value_type = NeighbourhoodFrame;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const FrameEnumeration* owner, std::uint64_t code)
        : owner_(owner), code_(code) {}
    NeighbourhoodFrame operator*() const { return owner_->at(code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++code_;
      return old;
    }
    bool operator==(const iterator& o) const { return code_ == o.code_; }

   private:
    const FrameEnumeration* owner_ = nullptr;
    std::uint64_t code_ = 0;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }

 private:
  std::size_t n_;
  std::uint64_t count_;
};

FrameEnumeration enumerate_frames(std::size_t n);

// Each subset of the worlds is put in each N(w) with probability 1/2.
NeighbourhoodFrame random_frame(std::size_t n, std::uint64_t seed);

// Uniform choice among the grammar productions at each node (atoms only at
// depth 0), Box arity uniform in 0..3.
Formula random_formula(int depth, const std::vector<std::string>& vars,
                       std::uint64_t seed);

// SplitMix64 step; used to derive independent seeds from one user seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace inlc

#endif  // INLC_SEMANTICS_H_
