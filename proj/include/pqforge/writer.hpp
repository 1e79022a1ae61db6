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

#include <cstdio>
#include <string>

#include "pqforge/parquet_meta.hpp"
#include "pqforge/transcoder.hpp"
#include "pqforge/types.hpp"

namespace pqforge {

/// Builds a flat schema-element tree (root + one leaf per descriptor).
std::vector<meta::SchemaElement> build_schema_elements(
    const std::vector<ColumnDescriptor>& columns);

/// Streaming Parquet writer: magic, then row groups chunk by chunk, then
/// the footer. Chunks must arrive in schema order within each group.
class ParquetFileWriter {
 public:
  ParquetFileWriter(const std::string& path,
                    std::vector<meta::SchemaElement> schema,
                    std::vector<meta::KeyValue> key_value_metadata = {});
  ~ParquetFileWriter();
  ParquetFileWriter(const ParquetFileWriter&) = delete;
  ParquetFileWriter& operator=(const ParquetFileWriter&) = delete;

  void begin_row_group(int64_t num_rows);
  void write_chunk(const ChunkArtifact& art);
  /// Byte-identical pass-through of a source chunk.
  void write_raw_chunk(const meta::ColumnMetaData& source_meta,
                       ByteView bytes);
  void end_row_group();

  /// Writes the footer and closes. Returns total file size.
  int64_t finish();
  /// Removes a partially written file (error paths).
  void abort();

  int64_t bytes_written() const { return offset_; }

 private:
  void put(ByteView b);

  std::string path_;
  std::FILE* f_ = nullptr;
  int64_t offset_ = 0;
  meta::FileMetaData fmeta_;
  meta::RowGroup current_;
  bool in_group_ = false;
  bool finished_ = false;
};

}  // namespace pqforge
