/*
 * Copyright (c) 2026, the pqforge authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cstring>

#include "pqforge/codec.hpp"

using namespace pqforge;

namespace {

Bytes repetitive_payload(size_t n) {
  Bytes b(n);
  for (size_t i = 0; i < n; ++i) {
    b[i] = static_cast<uint8_t>("abcabcab"[i % 8]);
  }
  return b;
}

Bytes pseudo_random_payload(size_t n, uint64_t seed) {
  // splitmix64 stream: effectively incompressible.
  Bytes b(n);
  uint64_t x = seed;
  for (size_t i = 0; i < n; i += 8) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    for (size_t k = 0; k < 8 && i + k < n; ++k) {
      b[i + k] = static_cast<uint8_t>(z >> (8 * k));
    }
  }
  return b;
}

const Codec kSnappy{CodecKind::SNAPPY, std::nullopt};
const Codec kZstd{CodecKind::ZSTD, std::nullopt};
const Codec kLz4{CodecKind::LZ4, std::nullopt};

}  // namespace

TEST_CASE("round-trip all codecs on repetitive and random payloads") {
  for (const Codec& c : {Codec{CodecKind::UNCOMPRESSED, std::nullopt}, kSnappy,
                         kZstd, kLz4, Codec{CodecKind::ZSTD, 19}}) {
    for (size_t n : {size_t{0}, size_t{1}, size_t{100}, size_t{65536}}) {
      Bytes rep = repetitive_payload(n);
      Bytes rnd = pseudo_random_payload(n, 7);
      CHECK(decompress(compress(rep, c), c, rep.size()) == rep);
      CHECK(decompress(compress(rnd, c), c, rnd.size()) == rnd);
    }
  }
}

TEST_CASE("repetitive payloads shrink, random payloads do not") {
  Bytes rep = repetitive_payload(64 * 1024);
  Bytes rnd = pseudo_random_payload(64 * 1024, 42);
  for (const Codec& c : {kSnappy, kZstd, kLz4}) {
    CHECK(compress(rep, c).size() < rep.size() / 4);
    // Incompressible data never shrinks by a meaningful margin.
    CHECK(compress(rnd, c).size() + 64 >= rnd.size());
  }
}

TEST_CASE("zstd level changes output, not content") {
  Bytes rep = repetitive_payload(256 * 1024);
  Bytes fast = compress(rep, Codec{CodecKind::ZSTD, 1});
  Bytes slow = compress(rep, Codec{CodecKind::ZSTD, 19});
  CHECK(decompress(fast, kZstd, rep.size()) == rep);
  CHECK(decompress(slow, kZstd, rep.size()) == rep);
  CHECK(slow.size() <= fast.size());
  CHECK(zstd_default_level() >= 1);
}

TEST_CASE("garbage input raises CodecError") {
  Bytes garbage = pseudo_random_payload(1000, 99);
  for (const Codec& c : {kSnappy, kZstd, kLz4}) {
    CHECK_THROWS_AS(decompress(garbage, c, 5000), CodecError);
  }
  // Wrong advertised size is also an error, not silent truncation.
  Bytes rep = repetitive_payload(1000);
  for (const Codec& c : {kSnappy, kZstd, kLz4}) {
    Bytes packed = compress(rep, c);
    CHECK_THROWS_AS(decompress(packed, c, 999), CodecError);
  }
}

TEST_CASE("hadoop-framed lz4 decodes multi-block payloads") {
  // Build the legacy frame by hand: [BE32 usize][BE32 csize][block]...
  Bytes part1 = repetitive_payload(5000);
  Bytes part2 = pseudo_random_payload(3000, 3);
  Bytes whole = part1;
  whole.insert(whole.end(), part2.begin(), part2.end());

  Bytes framed;
  auto be32 = [&](uint32_t v) {
    for (int i = 3; i >= 0; --i) {
      framed.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
  };
  for (const Bytes& part : {part1, part2}) {
    Bytes block = compress(part, kLz4);  // raw lz4 block
    be32(static_cast<uint32_t>(part.size()));
    be32(static_cast<uint32_t>(block.size()));
    framed.insert(framed.end(), block.begin(), block.end());
  }

  CHECK(decompress_lz4_hadoop(framed, whole.size()) == whole);
  CHECK_THROWS_AS(decompress_lz4_hadoop(framed, whole.size() + 1), CodecError);
}
