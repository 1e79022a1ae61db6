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

#include <algorithm>

#include "pqforge/types.hpp"

using namespace pqforge;

namespace {
const PhysicalType kAllTypes[] = {
    PhysicalType::BOOLEAN,    PhysicalType::INT32,
    PhysicalType::INT64,      PhysicalType::FLOAT,
    PhysicalType::DOUBLE,     PhysicalType::BYTE_ARRAY,
    PhysicalType::FIXED_LEN_BYTE_ARRAY, PhysicalType::INT96};
const EncodingKind kAllEncodings[] = {
    EncodingKind::PLAIN,          EncodingKind::RLE,
    EncodingKind::RLE_DICTIONARY, EncodingKind::DELTA_BINARY_PACKED,
    EncodingKind::DELTA_LENGTH_BYTE_ARRAY, EncodingKind::DELTA_BYTE_ARRAY,
    EncodingKind::BYTE_STREAM_SPLIT};
}  // namespace

TEST_CASE("encoding generations split V1/V2") {
  CHECK(encoding_generation(EncodingKind::PLAIN) == EncodingGeneration::V1);
  CHECK(encoding_generation(EncodingKind::RLE) == EncodingGeneration::V1);
  CHECK(encoding_generation(EncodingKind::RLE_DICTIONARY) ==
        EncodingGeneration::V1);
  CHECK(encoding_generation(EncodingKind::DELTA_BINARY_PACKED) ==
        EncodingGeneration::V2);
  CHECK(encoding_generation(EncodingKind::DELTA_LENGTH_BYTE_ARRAY) ==
        EncodingGeneration::V2);
  CHECK(encoding_generation(EncodingKind::DELTA_BYTE_ARRAY) ==
        EncodingGeneration::V2);
  CHECK(encoding_generation(EncodingKind::BYTE_STREAM_SPLIT) ==
        EncodingGeneration::V2);
}

TEST_CASE("applicability table") {
  // PLAIN is universal.
  for (PhysicalType t : kAllTypes) {
    CHECK(encoding_applicable(EncodingKind::PLAIN, t));
  }
  // INT96 is PLAIN-only.
  for (EncodingKind e : kAllEncodings) {
    if (e == EncodingKind::PLAIN) continue;
    CHECK_FALSE(encoding_applicable(e, PhysicalType::INT96));
  }
  // RLE data encoding is boolean-only.
  CHECK(encoding_applicable(EncodingKind::RLE, PhysicalType::BOOLEAN));
  CHECK_FALSE(encoding_applicable(EncodingKind::RLE, PhysicalType::INT32));
  CHECK_FALSE(encoding_applicable(EncodingKind::RLE, PhysicalType::BYTE_ARRAY));
  // DBP integers only.
  CHECK(encoding_applicable(EncodingKind::DELTA_BINARY_PACKED,
                            PhysicalType::INT32));
  CHECK(encoding_applicable(EncodingKind::DELTA_BINARY_PACKED,
                            PhysicalType::INT64));
  CHECK_FALSE(encoding_applicable(EncodingKind::DELTA_BINARY_PACKED,
                                  PhysicalType::DOUBLE));
  // Delta byte-array family is BYTE_ARRAY-only.
  CHECK(encoding_applicable(EncodingKind::DELTA_LENGTH_BYTE_ARRAY,
                            PhysicalType::BYTE_ARRAY));
  CHECK(encoding_applicable(EncodingKind::DELTA_BYTE_ARRAY,
                            PhysicalType::BYTE_ARRAY));
  CHECK_FALSE(encoding_applicable(EncodingKind::DELTA_BYTE_ARRAY,
                                  PhysicalType::INT32));
  // BSS: FLOAT/DOUBLE/INT32/INT64/FLBA.
  CHECK(encoding_applicable(EncodingKind::BYTE_STREAM_SPLIT,
                            PhysicalType::FLOAT));
  CHECK(encoding_applicable(EncodingKind::BYTE_STREAM_SPLIT,
                            PhysicalType::DOUBLE));
  CHECK(encoding_applicable(EncodingKind::BYTE_STREAM_SPLIT,
                            PhysicalType::INT32));
  CHECK(encoding_applicable(EncodingKind::BYTE_STREAM_SPLIT,
                            PhysicalType::INT64));
  CHECK(encoding_applicable(EncodingKind::BYTE_STREAM_SPLIT,
                            PhysicalType::FIXED_LEN_BYTE_ARRAY));
  CHECK_FALSE(encoding_applicable(EncodingKind::BYTE_STREAM_SPLIT,
                                  PhysicalType::BOOLEAN));
  CHECK_FALSE(encoding_applicable(EncodingKind::BYTE_STREAM_SPLIT,
                                  PhysicalType::BYTE_ARRAY));
  // Dictionary everywhere except BOOLEAN.
  CHECK_FALSE(encoding_applicable(EncodingKind::RLE_DICTIONARY,
                                  PhysicalType::BOOLEAN));
  CHECK(encoding_applicable(EncodingKind::RLE_DICTIONARY,
                            PhysicalType::BYTE_ARRAY));
}

TEST_CASE("applicable_encodings orders V1 before V2") {
  for (PhysicalType t : kAllTypes) {
    auto all = applicable_encodings(t);
    REQUIRE(!all.empty());
    CHECK(all.front() == EncodingKind::PLAIN);
    bool seen_v2 = false;
    for (EncodingKind e : all) {
      if (encoding_generation(e) == EncodingGeneration::V2) {
        seen_v2 = true;
      } else {
        CHECK_FALSE(seen_v2);  // no V1 after a V2
      }
    }
    // V1 subset is a strict prefix filter of the full list.
    auto v1 = applicable_v1_encodings(t);
    for (EncodingKind e : v1) {
      CHECK(encoding_generation(e) == EncodingGeneration::V1);
      CHECK(std::find(all.begin(), all.end(), e) != all.end());
    }
  }
  CHECK(applicable_encodings(PhysicalType::INT96) ==
        std::vector<EncodingKind>{EncodingKind::PLAIN});
}

TEST_CASE("policy candidates_for") {
  RewritePolicy p;
  auto c = p.candidates_for(PhysicalType::INT32);
  CHECK(std::find(c.begin(), c.end(), EncodingKind::DELTA_BINARY_PACKED) !=
        c.end());
  CHECK(std::find(c.begin(), c.end(), EncodingKind::PLAIN) != c.end());

  p.flexible_encodings = false;
  c = p.candidates_for(PhysicalType::INT32);
  for (EncodingKind e : c) {
    CHECK(encoding_generation(e) == EncodingGeneration::V1);
  }

  // Explicit entries are taken verbatim.
  RewritePolicy q;
  q.encoding_candidates.emplace_back(
      PhysicalType::INT32,
      std::vector<EncodingKind>{EncodingKind::DELTA_BINARY_PACKED});
  c = q.candidates_for(PhysicalType::INT32);
  CHECK(c == std::vector<EncodingKind>{EncodingKind::DELTA_BINARY_PACKED});
  // Other types keep their defaults.
  CHECK(!q.candidates_for(PhysicalType::BYTE_ARRAY).empty());
}

TEST_CASE("validate_policy catches each violation with a field path") {
  CHECK(validate_policy(RewritePolicy{}).empty());

  RewritePolicy p;
  p.target_rg_rows = 0;
  p.target_pages_per_chunk = -1;
  p.compression_threshold = 1.0;
  p.dictionary_size_limit = -1;
  p.page_size_floor_rows = 0;
  auto errs = validate_policy(p);
  CHECK(errs.size() == 5);
  auto has = [&](const char* needle) {
    return std::any_of(errs.begin(), errs.end(), [&](const std::string& e) {
      return e.find(needle) != std::string::npos;
    });
  };
  CHECK(has("target_rg_rows"));
  CHECK(has("target_pages_per_chunk"));
  CHECK(has("compression_threshold"));
  CHECK(has("threshold must be < 1"));
  CHECK(has("dictionary_size_limit"));
  CHECK(has("page_size_floor_rows"));

  RewritePolicy neg;
  neg.compression_threshold = -0.01;
  CHECK(validate_policy(neg).size() == 1);
  // Threshold 0 is legal (always compress when any reduction).
  RewritePolicy zero;
  zero.compression_threshold = 0.0;
  CHECK(validate_policy(zero).empty());
}

TEST_CASE("summarize computes medians and histograms") {
  auto chunk = [](EncodingKind e, CodecKind c, int64_t pages) {
    ColumnChunkMeta m;
    m.encodings_present = {e};
    m.codec = Codec{c, std::nullopt};
    m.data_page_count = pages;
    m.total_uncompressed_size = 100;
    m.total_compressed_size = 50;
    return m;
  };
  std::vector<RowGroupMeta> groups(3);
  groups[0].num_rows = 10;
  groups[0].chunks = {chunk(EncodingKind::PLAIN, CodecKind::ZSTD, 1)};
  groups[1].num_rows = 30;
  groups[1].chunks = {chunk(EncodingKind::PLAIN, CodecKind::SNAPPY, 5)};
  groups[2].num_rows = 20;
  groups[2].chunks = {chunk(EncodingKind::RLE, CodecKind::ZSTD, 9)};

  ReportSummary s = summarize(groups, 150);
  CHECK(s.min_rows_per_rg == 10);
  CHECK(s.median_rows_per_rg == 20);
  CHECK(s.max_rows_per_rg == 30);
  CHECK(s.min_pages_per_chunk == 1);
  CHECK(s.median_pages_per_chunk == 5);
  CHECK(s.max_pages_per_chunk == 9);
  int64_t plain = 0, zstd = 0;
  for (auto& [e, n] : s.encoding_histogram) {
    if (e == EncodingKind::PLAIN) plain = n;
  }
  for (auto& [c, n] : s.codec_histogram) {
    if (c == CodecKind::ZSTD) zstd = n;
  }
  CHECK(plain == 2);
  CHECK(zstd == 2);
  REQUIRE(s.compression_ratio.has_value());
  CHECK(*s.compression_ratio == doctest::Approx(300.0 / 150.0));

  CHECK_FALSE(summarize({}, 150).compression_ratio.has_value());
}

TEST_CASE("enum string round-trips") {
  for (PhysicalType t : kAllTypes) {
    auto back = physical_type_from_string(to_string(t));
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  for (EncodingKind e : kAllEncodings) {
    auto back = encoding_from_string(to_string(e));
    REQUIRE(back.has_value());
    CHECK(*back == e);
  }
  for (CodecKind c : {CodecKind::UNCOMPRESSED, CodecKind::SNAPPY,
                      CodecKind::ZSTD, CodecKind::LZ4}) {
    auto back = codec_from_string(to_string(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK_FALSE(encoding_from_string("NOT_AN_ENCODING").has_value());
  CHECK_FALSE(codec_from_string("gzipish").has_value());
}

TEST_CASE("validate_plan checks row conservation and page targets") {
  RewritePlan plan;
  plan.source_total_rows = 25;
  plan.row_group_boundaries = {10, 10, 5};
  for (int g = 0; g < 3; ++g) {
    ChunkDirective d;
    d.column_path = "c";
    d.physical_type = PhysicalType::INT32;
    d.page_row_limit = 1;
    d.candidates = {EncodingKind::PLAIN};
    plan.directives.push_back({d});
  }
  CHECK(validate_plan(plan, 10, 10).empty());

  RewritePlan bad = plan;
  bad.row_group_boundaries = {10, 10, 6};
  CHECK(!validate_plan(bad, 10, 10).empty());

  RewritePlan short_mid = plan;
  short_mid.row_group_boundaries = {10, 5, 10};
  CHECK(!validate_plan(short_mid, 10, 10).empty());
}
