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
#include "latticelab/rng.h"

#include <openssl/evp.h>

#include <bit>
#include <memory>
#include <random>

#include "latticelab/error.h"

namespace latticelab {
namespace {

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
};

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

SeededRng::SeededRng(const Seed& seed) : seed_(seed) {}

SeededRng::Seed SeededRng::ParseSeedHex(std::string_view hex) {
  if (hex.size() != 2 * kSeedBytes) {
    throw Error(ErrorCode::kParse, "seed must be 64 hex characters");
  }
  Seed seed{};
  for (size_t i = 0; i < kSeedBytes; ++i) {
    int hi = HexDigit(hex[2 * i]);
    int lo = HexDigit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kParse, "seed contains a non-hex character");
    }
    seed[i] = static_cast<uint8_t>(hi * 16 + lo);
  }
  return seed;
}

SeededRng SeededRng::FromHex(std::string_view hex) {
  return SeededRng(ParseSeedHex(hex));
}

std::string SeededRng::SeedToHex(const Seed& seed) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * kSeedBytes);
  for (uint8_t b : seed) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

SeededRng::Seed SeededRng::EntropySeed() {
  std::random_device device;
  Seed seed{};
  for (size_t i = 0; i < kSeedBytes; i += 4) {
    uint32_t word = device();
    for (size_t j = 0; j < 4; ++j) seed[i + j] = static_cast<uint8_t>(word >> (8 * j));
  }
  return seed;
}

SeededRng SeededRng::Derive(std::string_view label) const {
  static constexpr std::string_view kTag = "latticelab-derive/";
  std::string input(seed_.begin(), seed_.end());
  input.append(kTag);
  input.append(label);
  Seed child{};
  unsigned int len = 0;
  if (EVP_Digest(input.data(), input.size(), child.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  return SeededRng(child);
}

void SeededRng::Refill() {
  // ChaCha20 in OpenSSL takes a 16-byte IV: 32-bit little-endian block
  // counter followed by a 96-bit nonce (zero here).
  uint64_t block = counter_ / 64;
  uint8_t iv[16] = {};
  for (int i = 0; i < 4; ++i) iv[i] = static_cast<uint8_t>(block >> (8 * i));
  for (int i = 0; i < 4; ++i) iv[4 + i] = static_cast<uint8_t>(block >> (32 + 8 * i));

  std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter> ctx(EVP_CIPHER_CTX_new());
  std::array<uint8_t, 4096> zeros{};
  int len = 0;
  if (!ctx ||
      EVP_EncryptInit_ex(ctx.get(), EVP_chacha20(), nullptr, seed_.data(), iv) != 1 ||
      EVP_EncryptUpdate(ctx.get(), buffer_.data(), &len, zeros.data(),
                        static_cast<int>(zeros.size())) != 1) {
    throw std::runtime_error("ChaCha20 keystream generation failed");
  }
  buffer_len_ = static_cast<size_t>(len);
  buffer_pos_ = counter_ % 64;
}

void SeededRng::Fill(std::span<uint8_t> out) {
  for (uint8_t& byte : out) {
    if (buffer_pos_ >= buffer_len_) Refill();
    byte = buffer_[buffer_pos_++];
    ++counter_;
  }
}

uint64_t SeededRng::NextU64() {
  uint8_t bytes[8];
  Fill(bytes);
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

uint64_t SeededRng::UniformBelow(uint64_t bound) {
  if (bound <= 1) return 0;
  uint64_t mask = bound > (uint64_t{1} << 63) ? ~uint64_t{0}
                                               : std::bit_ceil(bound) - 1;
  while (true) {
    uint64_t v = NextU64() & mask;
    if (v < bound) return v;
  }
}

int64_t SeededRng::UniformInRange(int64_t lo, int64_t hi) {
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int64_t>(UniformBelow(span));
}

double SeededRng::UniformUnit() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

}  // namespace latticelab
