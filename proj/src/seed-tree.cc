// src/seed-tree.cc

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

#include "ttskit/seed-tree.h"

#include <limits>

#include "ttskit/util.h"

namespace ttskit {

namespace {
constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

uint64_t Mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

uint64_t SeedTree::SeedAt(uint64_t index) const {
  return Mix64(primary_ + (index + 1) * kGamma);
}

uint64_t SeedTree::Next() {
  if (counter_ == std::numeric_limits<uint64_t>::max()) {
    throw Error("SeedTree: secondary seed counter overflow");
  }
  return SeedAt(counter_++);
}

uint64_t Rng::NextU64() {
  state_ += kGamma;
  return Mix64(state_);
}

uint64_t Rng::Below(uint64_t bound) {
  if (bound == 0) throw Error("Rng::Below: zero bound");
  return static_cast<uint64_t>(
      (static_cast<unsigned __int128>(NextU64()) * bound) >> 64);
}

int64_t Rng::Range(int64_t lo, int64_t hi) {
  if (hi < lo) throw Error("Rng::Range: empty range");
  return lo + static_cast<int64_t>(
                  Below(static_cast<uint64_t>(hi - lo) + 1));
}

double Rng::Unit() {
  // 53 mantissa bits.
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

}  // namespace ttskit
