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
#include <string>
#include <vector>

#include "pqforge/thrift.hpp"
#include "pqforge/types.hpp"

// On-wire Parquet metadata, mirroring the format's Thrift definitions.
// Field numbering follows parquet.thrift; unmodeled schema-element fields
// (logical types etc.) are kept verbatim and re-emitted on write.

namespace pqforge::meta {

// parquet.thrift enum values
enum PType : int32_t {
  T_BOOLEAN = 0,
  T_INT32 = 1,
  T_INT64 = 2,
  T_INT96 = 3,
  T_FLOAT = 4,
  T_DOUBLE = 5,
  T_BYTE_ARRAY = 6,
  T_FIXED_LEN_BYTE_ARRAY = 7,
};

enum PEncoding : int32_t {
  E_PLAIN = 0,
  E_PLAIN_DICTIONARY = 2,
  E_RLE = 3,
  E_BIT_PACKED = 4,
  E_DELTA_BINARY_PACKED = 5,
  E_DELTA_LENGTH_BYTE_ARRAY = 6,
  E_DELTA_BYTE_ARRAY = 7,
  E_RLE_DICTIONARY = 8,
  E_BYTE_STREAM_SPLIT = 9,
};

enum PCodec : int32_t {
  C_UNCOMPRESSED = 0,
  C_SNAPPY = 1,
  C_GZIP = 2,
  C_LZO = 3,
  C_BROTLI = 4,
  C_LZ4 = 5,  // legacy Hadoop-framed; read-only here
  C_ZSTD = 6,
  C_LZ4_RAW = 7,
};

enum PPageType : int32_t {
  PT_DATA_PAGE = 0,
  PT_INDEX_PAGE = 1,
  PT_DICTIONARY_PAGE = 2,
  PT_DATA_PAGE_V2 = 3,
};

enum PRepetition : int32_t { R_REQUIRED = 0, R_OPTIONAL = 1, R_REPEATED = 2 };

struct Statistics {
  std::optional<int64_t> null_count;
  std::optional<int64_t> distinct_count;
  std::optional<std::string> max_value;  // field 5
  std::optional<std::string> min_value;  // field 6
};

struct SchemaElement {
  std::optional<int32_t> type;
  std::optional<int32_t> type_length;
  std::optional<int32_t> repetition_type;
  std::string name;
  std::optional<int32_t> num_children;
  std::optional<int32_t> converted_type;
  std::optional<int32_t> scale;
  std::optional<int32_t> precision;
  std::optional<int32_t> field_id;
  std::vector<thrift::KeptField> kept;  // logicalType and future fields
};

struct KeyValue {
  std::string key;
  std::optional<std::string> value;
};

struct ColumnMetaData {
  int32_t type = 0;
  std::vector<int32_t> encodings;
  std::vector<std::string> path_in_schema;
  int32_t codec = 0;
  int64_t num_values = 0;
  int64_t total_uncompressed_size = 0;
  int64_t total_compressed_size = 0;
  int64_t data_page_offset = 0;
  std::optional<int64_t> index_page_offset;
  std::optional<int64_t> dictionary_page_offset;
  std::optional<Statistics> statistics;
};

struct ColumnChunk {
  std::optional<std::string> file_path;
  int64_t file_offset = 0;
  std::optional<ColumnMetaData> meta_data;
};

struct RowGroup {
  std::vector<ColumnChunk> columns;
  int64_t total_byte_size = 0;
  int64_t num_rows = 0;
  std::optional<int64_t> file_offset;
  std::optional<int64_t> total_compressed_size;
};

struct FileMetaData {
  int32_t version = 1;
  std::vector<SchemaElement> schema;
  int64_t num_rows = 0;
  std::vector<RowGroup> row_groups;
  std::vector<KeyValue> key_value_metadata;
  std::optional<std::string> created_by;
};

struct DataPageHeader {
  int32_t num_values = 0;
  int32_t encoding = 0;
  int32_t definition_level_encoding = E_RLE;
  int32_t repetition_level_encoding = E_RLE;
};

struct DictionaryPageHeader {
  int32_t num_values = 0;
  int32_t encoding = E_PLAIN;
};

struct DataPageHeaderV2 {
  int32_t num_values = 0;
  int32_t num_nulls = 0;
  int32_t num_rows = 0;
  int32_t encoding = 0;
  int32_t definition_levels_byte_length = 0;
  int32_t repetition_levels_byte_length = 0;
  bool is_compressed = true;
};

struct PageHeader {
  int32_t type = PT_DATA_PAGE;
  int32_t uncompressed_page_size = 0;
  int32_t compressed_page_size = 0;
  std::optional<DataPageHeader> data_page_header;
  std::optional<DictionaryPageHeader> dictionary_page_header;
  std::optional<DataPageHeaderV2> data_page_header_v2;
};

Bytes serialize_file_meta(const FileMetaData& m);
FileMetaData parse_file_meta(ByteReader& r);

Bytes serialize_page_header(const PageHeader& h);
PageHeader parse_page_header(ByteReader& r);

// enum <-> domain conversions (nullopt = unknown/unsupported wire value)
std::optional<PhysicalType> physical_type_from_wire(int32_t t);
int32_t physical_type_to_wire(PhysicalType t);
std::optional<EncodingKind> encoding_from_wire(int32_t e);
int32_t encoding_to_wire(EncodingKind e);
std::optional<CodecKind> codec_from_wire(int32_t c);
int32_t codec_to_wire(CodecKind c);

}  // namespace pqforge::meta
