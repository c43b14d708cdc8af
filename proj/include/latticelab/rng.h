/*
 * Copyright 2026 The latticelab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef LATTICELAB_RNG_H_
#define LATTICELAB_RNG_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace latticelab {

// Reproducible random stream: the ChaCha20 keystream under a 256-bit seed,
// read sequentially. `counter` is the number of keystream bytes consumed, so
// (seed, counter) pins the remaining output on every platform.
class SeededRng {
 public:
  static constexpr size_t kSeedBytes = 32;
  using Seed = std::array<uint8_t, kSeedBytes>;

  explicit SeededRng(const Seed& seed);

  // Seed given as 64 hex characters. Throws ParseError otherwise.
  static SeededRng FromHex(std::string_view hex);
  static Seed ParseSeedHex(std::string_view hex);
  static std::string SeedToHex(const Seed& seed);
  // Seed drawn from the operating system.
  static Seed EntropySeed();

  // Independent stream keyed by SHA-256(seed || label). Does not advance
  // this stream.
  SeededRng Derive(std::string_view label) const;

  const Seed& seed() const { return seed_; }
  uint64_t counter() const { return counter_; }

  void Fill(std::span<uint8_t> out);
  uint64_t NextU64();
  // Uniform in [0, bound) by rejection against the power-of-two ceiling.
  uint64_t UniformBelow(uint64_t bound);
  // Uniform in [lo, hi].
  int64_t UniformInRange(int64_t lo, int64_t hi);
  // Uniform in [0, 1) with 53 random bits.
  double UniformUnit();
  bool NextBit() { return (NextU64() & 1) != 0; }

 private:
  void Refill();

  Seed seed_;
  uint64_t counter_ = 0;
  std::array<uint8_t, 4096> buffer_{};
  size_t buffer_pos_ = 0;
  size_t buffer_len_ = 0;
};

}  // namespace latticelab

#endif  // LATTICELAB_RNG_H_
