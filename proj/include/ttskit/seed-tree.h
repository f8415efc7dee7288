// include/ttskit/seed-tree.h

// Copyright 2026 The ttskit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TTSKIT_SEED_TREE_H_
#define TTSKIT_SEED_TREE_H_

#include <cstdint>
#include <vector>

namespace ttskit {

// SplitMix64 output function. This mixer is part of the corpus
// reproducibility contract: changing it changes every generated dataset.
uint64_t Mix64(uint64_t z);

// Hierarchical deterministic seeding. One primary seed yields a stream of
// secondary seeds; every stochastic component draws its own secondary seed
// so that a rejected draw can be redone without disturbing the rest of the
// stream, while a fixed primary seed replays the whole run.
//
// The i-th secondary seed is the i-th output of SplitMix64 seeded with the
// primary seed:
//
//   SeedAt(i) = Mix64(primary + (i + 1) * 0x9E3779B97F4A7C15)
//
// SeedAt is a pure function of (primary, i), so seeds can be assigned to
// work items by index from any thread. Mix64 is a bijection on 64-bit
// values and the gamma constant is odd, hence secondary seeds under one
// primary seed are distinct for any number of draws below 2^64; a collision
// cannot occur by construction.
class SeedTree {
 public:
  explicit SeedTree(uint64_t primary_seed)
      : primary_(primary_seed), counter_(0) {}

  uint64_t primary_seed() const { return primary_; }
  uint64_t draw_count() const { return counter_; }

  // Pure, order-free access by draw index.
  uint64_t SeedAt(uint64_t index) const;

  // Stateful convenience: returns SeedAt(counter) and advances the counter.
  // Single-owner; throws ttskit::Error on counter overflow.
  uint64_t Next();

  // Tree for an indexed work item (e.g. one dataset record). Derived trees
  // are independent of each other and of this tree's counter.
  SeedTree Subtree(uint64_t index) const { return SeedTree(SeedAt(index)); }

 private:
  uint64_t primary_;
  uint64_t counter_;
};

// Minimal deterministic generator used for all random draws in the toolkit.
// std::mt19937 distributions are not bit-stable across standard libraries,
// so draws go through this instead. State advances with the SplitMix64
// stream of the seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t NextU64();

  // Uniform in [0, bound); bound > 0. Multiply-high reduction.
  uint64_t Below(uint64_t bound);

  // Uniform in [lo, hi] inclusive.
  int64_t Range(int64_t lo, int64_t hi);

  // Uniform in [0, 1).
  double Unit();

  bool Chance(double p) { return Unit() < p; }

  template <typename Container>
  const typename Container::value_type &Pick(const Container &c) {
    return c[Below(c.size())];
  }

 private:
  uint64_t state_;
};

}  // namespace ttskit

#endif  // TTSKIT_SEED_TREE_H_
