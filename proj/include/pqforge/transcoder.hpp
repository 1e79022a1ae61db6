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

#include <optional>

#include "pqforge/column.hpp"
#include "pqforge/encoding.hpp"
#include "pqforge/parquet_meta.hpp"
#include "pqforge/types.hpp"

namespace pqforge {

struct TrialResult {
  EncodingKind candidate = EncodingKind::PLAIN;  // what was requested
  EncodingKind encoding = EncodingKind::PLAIN;   // what was produced
  int64_t encoded_size = 0;  // data pages + dictionary page + page headers
  bool dictionary_used = false;
  bool fallback = false;  // dictionary overflowed; re-encoded as PLAIN
};

struct EncodingChoice {
  EncodingKind chosen = EncodingKind::PLAIN;
  std::vector<TrialResult> trials;
};

struct CompressionDecision {
  Codec codec;
  int64_t uncompressed_size = 0;  // summed page payload bytes
  int64_t compressed_size = 0;
  double reduction = 0.0;  // 1 - compressed/uncompressed
  bool applied = false;
  bool forced = false;         // blanket compression, gate bypassed
  bool codec_failure = false;  // codec error; fell back to uncompressed
};

/// Serialized size of a chunk: payloads plus page headers as they would
/// be written uncompressed. The measurement every trial is judged by.
int64_t measure_encoded_size(const EncodedChunkData& chunk,
                             const ColumnDescriptor& desc);

/// Encodes the chunk under every candidate and keeps the smallest.
/// Candidates are evaluated in the fixed enumeration order (V1 first), so
/// ties resolve identically for any input permutation. When `winner` is
/// non-null it receives the winning encode, ready for compression.
EncodingChoice trial_encode(const ColumnSlice& values,
                            std::vector<EncodingKind> candidates,
                            int64_t page_row_limit,
                            int64_t dictionary_size_limit,
                            EncodedChunkData* winner = nullptr);

/// A page ready to hit the file: header mirrors the (possibly compressed)
/// payload.
struct PreparedPage {
  meta::PageHeader header;
  Bytes payload;
};

/// Compresses every page with `candidate`, decides at chunk granularity:
/// applied iff 1 - compressed/uncompressed >= threshold. `force` skips
/// the gate (blanket compression); codec failures fall back to
/// uncompressed with the failure recorded.
CompressionDecision gate_compress(const EncodedChunkData& chunk,
                                  const Codec& candidate, double threshold,
                                  bool force,
                                  std::vector<PreparedPage>& out_pages);

/// Builds uncompressed output pages (compression_mode = NONE path).
std::vector<PreparedPage> prepare_uncompressed(const EncodedChunkData& chunk);

std::optional<meta::Statistics> compute_statistics(const ColumnSlice& col);

/// Everything needed to write one output column chunk.
struct ChunkArtifact {
  ColumnDescriptor desc;
  EncodingChoice choice;
  CompressionDecision decision;
  std::vector<PreparedPage> pages;  // dictionary page first when present
  bool dictionary_present = false;
  int64_t num_rows = 0;
  int64_t num_values = 0;  // incl. nulls, per parquet chunk accounting
  std::optional<meta::Statistics> stats;
  std::vector<int32_t> wire_encodings;
};

/// Full per-chunk pipeline: trial encodings, pick argmin, gate
/// compression, regenerate statistics.
ChunkArtifact transcode_chunk(const ColumnSlice& col,
                              const ChunkDirective& directive);

}  // namespace pqforge
