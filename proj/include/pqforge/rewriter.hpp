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

#include <string>

#include "pqforge/reader.hpp"
#include "pqforge/transcoder.hpp"
#include "pqforge/types.hpp"

namespace pqforge {

struct ChunkRecord {
  std::string column;
  size_t group_index = 0;
  EncodingChoice choice;
  CompressionDecision decision;
  bool untranscoded = false;  // passed through byte-identical
};

struct RewriteReport {
  int64_t input_file_size = 0;
  int64_t output_file_size = 0;
  std::vector<ChunkRecord> chunks;
  double wall_time_seconds = 0.0;
  int64_t rows_written = 0;
  std::vector<std::string> untranscoded_chunks;  // "rg=i col=name"
};

struct RewriteOptions {
  int parallelism = 0;  // 0 = hardware concurrency
};

/// Re-buffers source row groups into target-sized row batches, order
/// preserving. Reads lazily, one source group resident at a time.
class RowRebuffer {
 public:
  /// Columns flagged in `skip` are carried as row counts only (their
  /// values are never decoded); used for pass-through chunks.
  explicit RowRebuffer(const ParquetReader& reader,
                       std::vector<bool> skip = {})
      : reader_(reader), skip_(std::move(skip)) {}

  /// Returns exactly `rows` rows (caller must not ask beyond the total).
  RowBatch next(int64_t rows);

 private:
  const ParquetReader& reader_;
  std::vector<bool> skip_;
  size_t next_group_ = 0;
  RowBatch buf_;
  int64_t cursor_ = 0;
};

/// Executes a plan: rebuffers rows into plan boundaries, transcodes each
/// chunk (in parallel across columns), writes the sink atomically
/// (temporary name, renamed on success). Output bytes are independent of
/// the parallelism degree.
RewriteReport rewrite(const std::string& source_path, const RewritePlan& plan,
                      const std::string& sink_path,
                      const RewriteOptions& opts = {});

}  // namespace pqforge
