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

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pqforge {

/// Parquet physical types. Exhaustive: every column in a readable file
/// maps to exactly one of these.
enum class PhysicalType : uint8_t {
  BOOLEAN,
  INT32,
  INT64,
  FLOAT,
  DOUBLE,
  BYTE_ARRAY,
  FIXED_LEN_BYTE_ARRAY,
  INT96,
};

enum class EncodingKind : uint8_t {
  PLAIN,
  RLE,
  RLE_DICTIONARY,
  DELTA_BINARY_PACKED,
  DELTA_LENGTH_BYTE_ARRAY,
  DELTA_BYTE_ARRAY,
  BYTE_STREAM_SPLIT,
};

enum class EncodingGeneration : uint8_t { V1, V2 };

/// V1 covers plain, RLE and RLE-dictionary; the delta family and
/// byte-stream-split are V2.
EncodingGeneration encoding_generation(EncodingKind e);

/// Fixed applicability table: which encodings may carry values of which
/// physical type. PLAIN is the universal fallback. INT96 is deliberately
/// PLAIN-only (deprecated type, pass-through).
bool encoding_applicable(EncodingKind e, PhysicalType t);

/// All encodings applicable to `t`, in the deterministic enumeration
/// order used for trial tie-breaks (V1 before V2, then declaration order).
std::vector<EncodingKind> applicable_encodings(PhysicalType t);

/// V1 subset of applicable_encodings(t).
std::vector<EncodingKind> applicable_v1_encodings(PhysicalType t);

enum class CodecKind : uint8_t { UNCOMPRESSED, SNAPPY, ZSTD, LZ4 };

struct Codec {
  CodecKind kind = CodecKind::UNCOMPRESSED;
  std::optional<int> level;  // ZSTD only

  bool operator==(const Codec&) const = default;
};

enum class PageType : uint8_t { DICTIONARY, DATA_V1, DATA_V2 };

struct PageMeta {
  PageType page_type = PageType::DATA_V1;
  int64_t num_values = 0;
  EncodingKind encoding = EncodingKind::PLAIN;
  int64_t compressed_size = 0;    // payload bytes on disk, header excluded
  int64_t uncompressed_size = 0;  // payload bytes after decompression
  int64_t header_size = 0;        // serialized page-header bytes
};

struct ColumnChunkMeta {
  std::string column_path;
  PhysicalType physical_type = PhysicalType::INT32;
  Codec codec;
  std::vector<PageMeta> pages;
  int64_t data_page_count = 0;  // pages with page_type != DICTIONARY
  bool data_page_count_approximate = false;
  int64_t total_compressed_size = 0;
  int64_t total_uncompressed_size = 0;
  std::set<EncodingKind> encodings_present;
  bool unreadable = false;  // metadata names a codec/encoding we cannot decode

  /// Sum of per-page payload + header bytes; equals total_compressed_size
  /// when page-level detail is exact.
  int64_t page_byte_sum() const;
};

struct RowGroupMeta {
  int64_t num_rows = 0;
  std::vector<ColumnChunkMeta> chunks;  // schema order
  int64_t total_byte_size = 0;          // uncompressed, per footer
};

struct ColumnDescriptor {
  std::string name;          // dotted path
  PhysicalType physical_type = PhysicalType::INT32;
  bool nullable = false;
  int32_t type_length = 0;   // FIXED_LEN_BYTE_ARRAY only
};

struct ReportSummary {
  int64_t min_rows_per_rg = 0;
  int64_t median_rows_per_rg = 0;
  int64_t max_rows_per_rg = 0;
  int64_t min_pages_per_chunk = 0;
  int64_t median_pages_per_chunk = 0;
  int64_t max_pages_per_chunk = 0;
  std::vector<std::pair<EncodingKind, int64_t>> encoding_histogram;  // chunks
  std::vector<std::pair<CodecKind, int64_t>> codec_histogram;        // chunks
  // total_uncompressed / file_size; absent for zero-row files.
  std::optional<double> compression_ratio;
};

struct FileReport {
  std::vector<ColumnDescriptor> schema;
  std::vector<RowGroupMeta> row_groups;
  int64_t total_rows = 0;
  int64_t file_size = 0;
  ReportSummary summary;
  // Writer-stamped evidence of which encoding generations were trialed
  // ("V1" or "V1,V2"); absent for foreign files.
  std::optional<std::string> trialed_generations;
};

/// Recomputes summary aggregates from row_groups. Used both by the
/// inspector and by the identity tests.
ReportSummary summarize(const std::vector<RowGroupMeta>& row_groups,
                        int64_t file_size);

/// The four-insight knob set. Defaults reproduce the recommended
/// GPU-friendly configuration: 10M-row groups, >=100 pages per chunk,
/// all applicable encodings trialed, ZSTD gated at 10% reduction.
struct RewritePolicy {
  int64_t target_rg_rows = 10'000'000;
  int64_t target_pages_per_chunk = 100;
  // Per-physical-type candidate sets; empty map = derive from
  // applicable_encodings (all V1+V2) honoring flexible_encodings.
  std::vector<std::pair<PhysicalType, std::vector<EncodingKind>>>
      encoding_candidates;
  bool flexible_encodings = true;  // false: restrict to the V1 subset
  Codec compression_candidate{CodecKind::ZSTD, std::nullopt};
  double compression_threshold = 0.10;  // in [0,1)
  int64_t dictionary_size_limit = 1 << 20;
  int64_t page_size_floor_rows = 1;
  // FORCED codec bypasses the gate (used to reconstruct blanket-compressed
  // baselines); NONE disables compression entirely.
  enum class CompressionMode : uint8_t { GATED, FORCED, NONE };
  CompressionMode compression_mode = CompressionMode::GATED;

  /// Effective candidate set for one physical type: the explicit entry
  /// verbatim if configured, otherwise all applicable encodings (V1-only
  /// when flexible_encodings is false).
  std::vector<EncodingKind> candidates_for(PhysicalType t) const;
};

/// Full violation list, field paths included; empty = valid.
std::vector<std::string> validate_policy(const RewritePolicy& p);

enum class EncodingMode : uint8_t { TRIAL, FIXED };
enum class CompressionPlanMode : uint8_t { GATED, FORCED, NONE };

struct ChunkDirective {
  std::string column_path;
  PhysicalType physical_type = PhysicalType::INT32;
  int64_t page_row_limit = 1;
  EncodingMode encoding_mode = EncodingMode::TRIAL;
  std::vector<EncodingKind> candidates;  // TRIAL: set; FIXED: single entry
  CompressionPlanMode compression_mode = CompressionPlanMode::GATED;
  Codec compression_codec;
  double compression_threshold = 0.10;
  int64_t dictionary_size_limit = 1 << 20;
};

struct RewritePlan {
  int64_t source_total_rows = 0;
  // All entries equal target except possibly the last; empty for 0 rows.
  std::vector<int64_t> row_group_boundaries;
  // One directive per column per row group, grouped by row group.
  std::vector<std::vector<ChunkDirective>> directives;
};

std::vector<std::string> validate_plan(const RewritePlan& plan,
                                       int64_t target_rg_rows,
                                       int64_t target_pages_per_chunk);

const char* to_string(PhysicalType t);
const char* to_string(EncodingKind e);
const char* to_string(CodecKind c);
const char* to_string(PageType p);
std::optional<PhysicalType> physical_type_from_string(const std::string& s);
std::optional<EncodingKind> encoding_from_string(const std::string& s);
std::optional<CodecKind> codec_from_string(const std::string& s);

}  // namespace pqforge
