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
#include <span>

#include "pqforge/bytes.hpp"
#include "pqforge/column.hpp"
#include "pqforge/types.hpp"

namespace pqforge {

// ---- RLE / bit-packed hybrid (levels, booleans, dictionary indices) ----

Bytes rle_hybrid_encode(std::span<const uint32_t> values, int width);

/// Decodes exactly `count` values; consumes whole runs (trailing padding
/// inside the final run included).
std::vector<uint32_t> rle_hybrid_decode(ByteReader& r, int64_t count,
                                        int width);

// ---- page-level encode ----

struct EncodedPage {
  PageType type = PageType::DATA_V1;
  EncodingKind encoding = EncodingKind::PLAIN;
  int64_t num_values = 0;  // data pages: rows incl. nulls; dict: entries
  Bytes payload;           // uncompressed page payload
};

struct EncodedChunkData {
  EncodingKind data_encoding = EncodingKind::PLAIN;
  bool dictionary_used = false;
  bool fallback = false;  // dictionary overflow forced a PLAIN re-encode
  std::optional<EncodedPage> dict_page;
  std::vector<EncodedPage> data_pages;

  int64_t payload_size() const {
    int64_t n = dict_page ? static_cast<int64_t>(dict_page->payload.size()) : 0;
    for (const EncodedPage& p : data_pages) {
      n += static_cast<int64_t>(p.payload.size());
    }
    return n;
  }
};

/// Encodes a whole chunk's rows into V1 data pages of at most
/// `page_row_limit` rows each (plus a dictionary page for
/// RLE_DICTIONARY). Dictionary trials whose dictionary page would exceed
/// `dictionary_size_limit` bytes fall back to PLAIN and set `fallback`.
EncodedChunkData encode_chunk_pages(const ColumnSlice& col, EncodingKind e,
                                    int64_t page_row_limit,
                                    int64_t dictionary_size_limit);

// ---- page-level decode ----

/// Dictionary page payload -> dense value list (a required ColumnSlice).
ColumnSlice decode_dictionary_page(ByteView payload,
                                   const ColumnDescriptor& desc,
                                   int64_t num_entries);

/// Decodes the value section of a data page (definition levels already
/// consumed) and appends `value_count` values to `out`. `dict` required
/// for RLE_DICTIONARY pages.
void decode_page_values(ByteReader& r, EncodingKind enc, int64_t value_count,
                        const ColumnDescriptor& desc, const ColumnSlice* dict,
                        ColumnSlice& out);

}  // namespace pqforge
