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

#include <cstdint>
#include <random>
#include <string>

#include "pqforge/encoding.hpp"

using namespace pqforge;

namespace {

std::string hex(const Bytes& b) {
  static const char* d = "0123456789abcdef";
  std::string s;
  for (uint8_t v : b) {
    s += d[v >> 4];
    s += d[v & 0xf];
  }
  return s;
}

ColumnSlice make_col(const std::string& name, PhysicalType t,
                     bool nullable = false, int32_t type_length = 0) {
  ColumnSlice c;
  c.desc = {name, t, nullable, type_length};
  return c;
}

// Decodes a required-column chunk back into a dense slice.
ColumnSlice decode_chunk(const EncodedChunkData& enc,
                         const ColumnDescriptor& desc) {
  ColumnSlice dict;
  if (enc.dict_page) {
    dict = decode_dictionary_page(enc.dict_page->payload, desc,
                                  enc.dict_page->num_values);
  }
  ColumnSlice out;
  out.desc = desc;
  for (const EncodedPage& p : enc.data_pages) {
    ByteReader r(p.payload);
    decode_page_values(r, p.encoding, p.num_values, desc,
                       enc.dict_page ? &dict : nullptr, out);
    CHECK(r.done());
    out.num_rows += p.num_values;
  }
  return out;
}

void check_roundtrip(const ColumnSlice& col, EncodingKind e,
                     int64_t page_limit = 1'000'000) {
  EncodedChunkData enc = encode_chunk_pages(col, e, page_limit, 1 << 20);
  ColumnSlice back = decode_chunk(enc, col.desc);
  CHECK(back.logically_equal(col));
}

}  // namespace

// [DERIVED] RLE/bit-packed hybrid byte strings frozen from an independent
// reimplementation of the hybrid format.
TEST_CASE("rle hybrid frozen byte oracles") {
  SUBCASE("A: run of 8 identical values, width 3") {
    std::vector<uint32_t> v(8, 3);
    CHECK(hex(rle_hybrid_encode(v, 3)) == "1003");
  }
  SUBCASE("B: one bit-packed group of 8 distinct values, width 3") {
    std::vector<uint32_t> v = {1, 2, 3, 4, 5, 6, 7, 0};
    CHECK(hex(rle_hybrid_encode(v, 3)) == "03d1581f");
  }
  SUBCASE("C: 16 alternating booleans, width 1") {
    std::vector<uint32_t> v(16);
    for (size_t i = 0; i < 16; ++i) v[i] = i % 2;
    CHECK(hex(rle_hybrid_encode(v, 1)) == "05aaaa");
  }
  SUBCASE("D: width 0 stores no value bytes") {
    std::vector<uint32_t> v(5, 0);
    // Our encoder emits one empty bit-packed group; an RLE run ("0a") is
    // the other legal spelling — both must decode to five zeros.
    CHECK(hex(rle_hybrid_encode(v, 0)) == "03");
    for (const Bytes& enc : {Bytes{0x03}, Bytes{0x0a}}) {
      ByteReader r(enc);
      CHECK(rle_hybrid_decode(r, 5, 0) == v);
    }
  }
  SUBCASE("E: long run with a multi-byte value, width 20") {
    std::vector<uint32_t> v(300, 700'000);
    CHECK(hex(rle_hybrid_encode(v, 20)) == "d80460ae0a");
  }
}

TEST_CASE("rle hybrid round-trips random streams at every width") {
  std::mt19937_64 rng(2026);
  for (int width = 0; width <= 32; ++width) {
    uint64_t mask = width == 64 ? ~0ULL : ((1ULL << width) - 1);
    for (size_t n : {size_t{0}, size_t{1}, size_t{7}, size_t{8}, size_t{9},
                     size_t{1000}}) {
      std::vector<uint32_t> v(n);
      for (auto& x : v) {
        // Mix runs and noise so both branches of the hybrid are exercised.
        x = static_cast<uint32_t>((rng() % 4 == 0 ? 1 : rng()) & mask);
      }
      Bytes enc = rle_hybrid_encode(v, width);
      ByteReader r(enc);
      CHECK(rle_hybrid_decode(r, static_cast<int64_t>(n), width) == v);
    }
  }
}

TEST_CASE("plain round-trips every physical type") {
  auto b = make_col("b", PhysicalType::BOOLEAN);
  for (int i = 0; i < 100; ++i) b.bools.push_back(i % 3 == 0);
  b.num_rows = 100;
  check_roundtrip(b, EncodingKind::PLAIN);

  auto i32 = make_col("i", PhysicalType::INT32);
  for (int i = 0; i < 100; ++i) i32.i32.push_back(i * 17 - 50);
  i32.num_rows = 100;
  check_roundtrip(i32, EncodingKind::PLAIN);

  auto i64 = make_col("l", PhysicalType::INT64);
  for (int i = 0; i < 100; ++i) i64.i64.push_back(INT64_MAX - i);
  i64.num_rows = 100;
  check_roundtrip(i64, EncodingKind::PLAIN);

  auto f32 = make_col("f", PhysicalType::FLOAT);
  for (int i = 0; i < 100; ++i) f32.f32.push_back(1.5f * i);
  f32.num_rows = 100;
  check_roundtrip(f32, EncodingKind::PLAIN);

  auto f64 = make_col("d", PhysicalType::DOUBLE);
  for (int i = 0; i < 100; ++i) f64.f64.push_back(-0.25 * i);
  f64.num_rows = 100;
  check_roundtrip(f64, EncodingKind::PLAIN);

  auto ba = make_col("s", PhysicalType::BYTE_ARRAY);
  for (int i = 0; i < 100; ++i) ba.bin_push(std::string(i % 9, 'x') + "v");
  ba.num_rows = 100;
  check_roundtrip(ba, EncodingKind::PLAIN);

  auto fl = make_col("flb", PhysicalType::FIXED_LEN_BYTE_ARRAY, false, 4);
  for (int i = 0; i < 100; ++i) {
    char buf[4] = {static_cast<char>(i), 1, 2, 3};
    fl.bin_push(std::string_view(buf, 4));
  }
  fl.num_rows = 100;
  check_roundtrip(fl, EncodingKind::PLAIN);

  auto i96 = make_col("t", PhysicalType::INT96);
  for (int i = 0; i < 100; ++i) {
    char buf[12] = {};
    buf[0] = static_cast<char>(i);
    i96.bin_push(std::string_view(buf, 12));
  }
  i96.num_rows = 100;
  check_roundtrip(i96, EncodingKind::PLAIN);
}

TEST_CASE("delta binary packed handles wrapping extremes") {
  auto c = make_col("x", PhysicalType::INT64);
  c.i64 = {INT64_MIN, INT64_MAX, 0, -1, 1, INT64_MAX, INT64_MIN,
           42, -9'000'000'000LL};
  c.num_rows = static_cast<int64_t>(c.i64.size());
  check_roundtrip(c, EncodingKind::DELTA_BINARY_PACKED);

  auto c32 = make_col("y", PhysicalType::INT32);
  c32.i32 = {INT32_MIN, INT32_MAX, 0, -1, INT32_MAX, INT32_MIN};
  c32.num_rows = static_cast<int64_t>(c32.i32.size());
  check_roundtrip(c32, EncodingKind::DELTA_BINARY_PACKED);

  // Sizes that are not multiples of the miniblock layout.
  std::mt19937_64 rng(7);
  for (int64_t n : {1, 31, 32, 33, 128, 129, 1000}) {
    auto r = make_col("z", PhysicalType::INT64);
    for (int64_t i = 0; i < n; ++i) {
      r.i64.push_back(static_cast<int64_t>(rng()));
    }
    r.num_rows = n;
    check_roundtrip(r, EncodingKind::DELTA_BINARY_PACKED);
  }
}

TEST_CASE("delta byte-array family round-trips") {
  auto c = make_col("s", PhysicalType::BYTE_ARRAY);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    std::string s = "prefix_" + std::to_string(rng() % 50);
    if (rng() % 4 == 0) s.clear();  // empty strings are legal
    c.bin_push(s);
  }
  c.num_rows = 500;
  check_roundtrip(c, EncodingKind::DELTA_LENGTH_BYTE_ARRAY);
  check_roundtrip(c, EncodingKind::DELTA_BYTE_ARRAY);
  check_roundtrip(c, EncodingKind::RLE_DICTIONARY);

  // Shared prefixes are where DELTA_BYTE_ARRAY should win.
  auto sorted = make_col("t", PhysicalType::BYTE_ARRAY);
  for (int i = 0; i < 500; ++i) {
    sorted.bin_push("common/long/prefix/key-" + std::to_string(100000 + i));
  }
  sorted.num_rows = 500;
  EncodedChunkData dba = encode_chunk_pages(
      sorted, EncodingKind::DELTA_BYTE_ARRAY, 1'000'000, 1 << 20);
  EncodedChunkData plain =
      encode_chunk_pages(sorted, EncodingKind::PLAIN, 1'000'000, 1 << 20);
  CHECK(dba.payload_size() < plain.payload_size());
  check_roundtrip(sorted, EncodingKind::DELTA_BYTE_ARRAY);
}

TEST_CASE("byte-stream-split round-trips all eligible widths") {
  std::mt19937_64 rng(13);
  auto f = make_col("f", PhysicalType::FLOAT);
  for (int i = 0; i < 257; ++i) {
    f.f32.push_back(static_cast<float>(rng()) / 1e9f);
  }
  f.num_rows = 257;
  check_roundtrip(f, EncodingKind::BYTE_STREAM_SPLIT);

  auto d = make_col("d", PhysicalType::DOUBLE);
  for (int i = 0; i < 257; ++i) {
    d.f64.push_back(static_cast<double>(rng()) / 1e9);
  }
  d.num_rows = 257;
  check_roundtrip(d, EncodingKind::BYTE_STREAM_SPLIT);

  auto i = make_col("i", PhysicalType::INT32);
  auto l = make_col("l", PhysicalType::INT64);
  for (int k = 0; k < 100; ++k) {
    i.i32.push_back(static_cast<int32_t>(rng()));
    l.i64.push_back(static_cast<int64_t>(rng()));
  }
  i.num_rows = l.num_rows = 100;
  check_roundtrip(i, EncodingKind::BYTE_STREAM_SPLIT);
  check_roundtrip(l, EncodingKind::BYTE_STREAM_SPLIT);

  auto fl = make_col("flb", PhysicalType::FIXED_LEN_BYTE_ARRAY, false, 5);
  for (int k = 0; k < 64; ++k) {
    char buf[5];
    for (char& ch : buf) ch = static_cast<char>(rng());
    fl.bin_push(std::string_view(buf, 5));
  }
  fl.num_rows = 64;
  check_roundtrip(fl, EncodingKind::BYTE_STREAM_SPLIT);
}

TEST_CASE("dictionary encoding round-trips and falls back on overflow") {
  auto c = make_col("s", PhysicalType::BYTE_ARRAY);
  for (int i = 0; i < 1000; ++i) c.bin_push("val" + std::to_string(i % 7));
  c.num_rows = 1000;

  EncodedChunkData enc =
      encode_chunk_pages(c, EncodingKind::RLE_DICTIONARY, 100, 1 << 20);
  CHECK(enc.dictionary_used);
  CHECK_FALSE(enc.fallback);
  REQUIRE(enc.dict_page.has_value());
  CHECK(enc.dict_page->num_values == 7);
  CHECK(decode_chunk(enc, c.desc).logically_equal(c));

  // A tiny dictionary budget forces the PLAIN fallback.
  EncodedChunkData fb =
      encode_chunk_pages(c, EncodingKind::RLE_DICTIONARY, 100, 8);
  CHECK(fb.fallback);
  CHECK_FALSE(fb.dictionary_used);
  CHECK(fb.data_encoding == EncodingKind::PLAIN);
  CHECK_FALSE(fb.dict_page.has_value());
  CHECK(decode_chunk(fb, c.desc).logically_equal(c));
}

TEST_CASE("boolean RLE data encoding round-trips") {
  auto c = make_col("b", PhysicalType::BOOLEAN);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 777; ++i) c.bools.push_back(rng() % 5 == 0);
  c.num_rows = 777;
  check_roundtrip(c, EncodingKind::RLE, 100);
}

TEST_CASE("page partitioning follows the row limit") {
  auto c = make_col("i", PhysicalType::INT32);
  for (int i = 0; i < 1000; ++i) c.i32.push_back(i);
  c.num_rows = 1000;

  EncodedChunkData enc =
      encode_chunk_pages(c, EncodingKind::PLAIN, 100, 1 << 20);
  REQUIRE(enc.data_pages.size() == 10);
  for (const EncodedPage& p : enc.data_pages) CHECK(p.num_values == 100);

  // Trailing remainder gets a short final page.
  c.i32.push_back(-1);
  c.num_rows = 1001;
  enc = encode_chunk_pages(c, EncodingKind::PLAIN, 100, 1 << 20);
  REQUIRE(enc.data_pages.size() == 11);
  CHECK(enc.data_pages.back().num_values == 1);
  CHECK(decode_chunk(enc, c.desc).logically_equal(c));
}

TEST_CASE("nullable pages carry length-prefixed definition levels") {
  auto c = make_col("n", PhysicalType::INT64, true);
  std::mt19937_64 rng(19);
  for (int i = 0; i < 350; ++i) {
    bool valid = rng() % 3 != 0;
    c.valid.push_back(valid ? 1 : 0);
    if (valid) c.i64.push_back(static_cast<int64_t>(rng() % 1000));
  }
  c.num_rows = 350;

  EncodedChunkData enc =
      encode_chunk_pages(c, EncodingKind::PLAIN, 100, 1 << 20);
  ColumnSlice back = c;
  back.valid.clear();
  back.i64.clear();
  back.num_rows = 0;
  for (const EncodedPage& p : enc.data_pages) {
    ByteReader r(p.payload);
    uint32_t len = r.le<uint32_t>();
    ByteView section = r.raw(len);
    ByteReader sr(section);
    auto levels = rle_hybrid_decode(sr, p.num_values, 1);
    int64_t vcount = 0;
    for (uint32_t lv : levels) {
      back.valid.push_back(static_cast<uint8_t>(lv));
      vcount += lv;
    }
    decode_page_values(r, p.encoding, vcount, c.desc, nullptr, back);
    CHECK(r.done());
    back.num_rows += p.num_values;
  }
  CHECK(back.logically_equal(c));
}

TEST_CASE("inapplicable encodings are rejected up front") {
  auto c = make_col("b", PhysicalType::BOOLEAN);
  c.bools = {1, 0};
  c.num_rows = 2;
  CHECK_THROWS_AS(
      encode_chunk_pages(c, EncodingKind::DELTA_BINARY_PACKED, 10, 1 << 20),
      std::invalid_argument);
  CHECK_THROWS_AS(encode_chunk_pages(c, EncodingKind::PLAIN, 0, 1 << 20),
                  std::invalid_argument);
}
