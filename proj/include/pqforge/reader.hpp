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

#include <memory>
#include <string>

#include "pqforge/column.hpp"
#include "pqforge/parquet_meta.hpp"
#include "pqforge/types.hpp"

namespace pqforge {

struct ParquetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Memory-mapped Parquet file. Footer is parsed eagerly; page data is
/// decoded on demand. Flat schemas only (required/optional leaves under
/// the root); repeated fields and group nesting are rejected.
class ParquetReader {
 public:
  explicit ParquetReader(const std::string& path);
  ~ParquetReader();
  ParquetReader(const ParquetReader&) = delete;
  ParquetReader& operator=(const ParquetReader&) = delete;

  const std::vector<ColumnDescriptor>& schema() const { return schema_; }
  const meta::FileMetaData& footer() const { return fmeta_; }
  int64_t num_rows() const { return fmeta_.num_rows; }
  int64_t file_size() const { return static_cast<int64_t>(size_); }
  size_t num_row_groups() const { return fmeta_.row_groups.size(); }
  int64_t row_group_rows(size_t g) const {
    return fmeta_.row_groups[g].num_rows;
  }

  /// Header-only page scan (no value decode). Throws ParquetError when the
  /// chunk's codec/encoding metadata is unusable.
  std::vector<PageMeta> scan_pages(size_t group, size_t column) const;

  /// Fully decodes one column chunk.
  ColumnSlice read_chunk(size_t group, size_t column) const;

  /// Raw on-disk bytes of one column chunk (dictionary page through last
  /// data page), for pass-through copies.
  ByteView chunk_bytes(size_t group, size_t column) const;

  /// True when every page of the chunk uses a codec and encoding this
  /// reader can decode.
  bool chunk_decodable(size_t group, size_t column) const;

  RowBatch read_row_group(size_t g) const;

 private:
  struct PageCursor;
  const meta::ColumnMetaData& column_meta(size_t group, size_t column) const;
  Bytes read_page_payload(const meta::PageHeader& h, ByteReader& r,
                          const meta::ColumnMetaData& cm) const;

  std::string path_;
  const uint8_t* map_ = nullptr;
  size_t size_ = 0;
  meta::FileMetaData fmeta_;
  std::vector<ColumnDescriptor> schema_;
};

}  // namespace pqforge
