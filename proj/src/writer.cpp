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

#include "pqforge/writer.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "pqforge/reader.hpp"

namespace pqforge {

namespace {
constexpr char kMagic[4] = {'P', 'A', 'R', '1'};
constexpr const char* kCreatedBy = "pqforge version 0.1.0";
}  // namespace

std::vector<meta::SchemaElement> build_schema_elements(
    const std::vector<ColumnDescriptor>& columns) {
  std::vector<meta::SchemaElement> out;
  meta::SchemaElement root;
  root.name = "schema";
  root.num_children = static_cast<int32_t>(columns.size());
  out.push_back(std::move(root));
  for (const ColumnDescriptor& c : columns) {
    meta::SchemaElement e;
    e.name = c.name;
    e.type = meta::physical_type_to_wire(c.physical_type);
    e.repetition_type = c.nullable ? meta::R_OPTIONAL : meta::R_REQUIRED;
    if (c.physical_type == PhysicalType::FIXED_LEN_BYTE_ARRAY) {
      e.type_length = c.type_length;
    }
    out.push_back(std::move(e));
  }
  return out;
}

ParquetFileWriter::ParquetFileWriter(
    const std::string& path, std::vector<meta::SchemaElement> schema,
    std::vector<meta::KeyValue> key_value_metadata)
    : path_(path) {
  f_ = std::fopen(path.c_str(), "wb");
  if (f_ == nullptr) throw ParquetError("cannot create output file: " + path);
  fmeta_.version = 2;
  fmeta_.schema = std::move(schema);
  fmeta_.key_value_metadata = std::move(key_value_metadata);
  fmeta_.created_by = kCreatedBy;
  put(ByteView(reinterpret_cast<const uint8_t*>(kMagic), 4));
}

ParquetFileWriter::~ParquetFileWriter() {
  if (f_ != nullptr) {
    std::fclose(f_);
    if (!finished_) std::remove(path_.c_str());
  }
}

void ParquetFileWriter::put(ByteView b) {
  if (!b.empty() && std::fwrite(b.data(), 1, b.size(), f_) != b.size()) {
    throw ParquetError("write failed: " + path_);
  }
  offset_ += static_cast<int64_t>(b.size());
}

void ParquetFileWriter::begin_row_group(int64_t num_rows) {
  if (in_group_) throw std::logic_error("row group already open");
  current_ = meta::RowGroup{};
  current_.num_rows = num_rows;
  current_.file_offset = offset_;
  in_group_ = true;
}

void ParquetFileWriter::write_chunk(const ChunkArtifact& art) {
  if (!in_group_) throw std::logic_error("no open row group");
  meta::ColumnMetaData cm;
  cm.type = meta::physical_type_to_wire(art.desc.physical_type);
  cm.encodings = art.wire_encodings;
  cm.path_in_schema = {art.desc.name};
  cm.codec = meta::codec_to_wire(art.decision.codec.kind);
  cm.num_values = art.num_values;
  cm.statistics = art.stats;

  int64_t chunk_start = offset_;
  bool first_data_page = true;
  for (size_t i = 0; i < art.pages.size(); ++i) {
    const PreparedPage& p = art.pages[i];
    Bytes header = meta::serialize_page_header(p.header);
    bool is_dict = p.header.type == meta::PT_DICTIONARY_PAGE;
    if (is_dict) {
      cm.dictionary_page_offset = offset_;
    } else if (first_data_page) {
      cm.data_page_offset = offset_;
      first_data_page = false;
    }
    cm.total_uncompressed_size +=
        static_cast<int64_t>(header.size()) + p.header.uncompressed_page_size;
    cm.total_compressed_size +=
        static_cast<int64_t>(header.size()) + p.header.compressed_page_size;
    put(header);
    put(p.payload);
  }

  meta::ColumnChunk cc;
  cc.file_offset = chunk_start;
  cc.meta_data = std::move(cm);
  current_.total_byte_size += cc.meta_data->total_uncompressed_size;
  current_.total_compressed_size =
      current_.total_compressed_size.value_or(0) +
      cc.meta_data->total_compressed_size;
  current_.columns.push_back(std::move(cc));
}

void ParquetFileWriter::write_raw_chunk(const meta::ColumnMetaData& source,
                                        ByteView bytes) {
  if (!in_group_) throw std::logic_error("no open row group");
  if (static_cast<int64_t>(bytes.size()) != source.total_compressed_size) {
    throw ParquetError("raw chunk byte length disagrees with its metadata");
  }
  meta::ColumnMetaData cm = source;
  int64_t chunk_start = offset_;
  // Source offsets are relative to the old file; rebase them.
  int64_t old_start = cm.data_page_offset;
  if (cm.dictionary_page_offset && *cm.dictionary_page_offset > 0) {
    old_start = std::min(old_start, *cm.dictionary_page_offset);
  }
  int64_t delta = chunk_start - old_start;
  cm.data_page_offset += delta;
  if (cm.dictionary_page_offset) *cm.dictionary_page_offset += delta;
  cm.index_page_offset.reset();  // page indexes are dropped on rewrite
  put(bytes);

  meta::ColumnChunk cc;
  cc.file_offset = chunk_start;
  cc.meta_data = std::move(cm);
  current_.total_byte_size += cc.meta_data->total_uncompressed_size;
  current_.total_compressed_size =
      current_.total_compressed_size.value_or(0) +
      cc.meta_data->total_compressed_size;
  current_.columns.push_back(std::move(cc));
}

void ParquetFileWriter::end_row_group() {
  if (!in_group_) throw std::logic_error("no open row group");
  fmeta_.num_rows += current_.num_rows;
  fmeta_.row_groups.push_back(std::move(current_));
  in_group_ = false;
}

int64_t ParquetFileWriter::finish() {
  if (in_group_) throw std::logic_error("row group still open");
  Bytes footer = meta::serialize_file_meta(fmeta_);
  put(footer);
  uint32_t len = static_cast<uint32_t>(footer.size());
  put(ByteView(reinterpret_cast<const uint8_t*>(&len), 4));
  put(ByteView(reinterpret_cast<const uint8_t*>(kMagic), 4));
  if (std::fflush(f_) != 0) throw ParquetError("flush failed: " + path_);
  std::fclose(f_);
  f_ = nullptr;
  finished_ = true;
  return offset_;
}

void ParquetFileWriter::abort() {
  if (f_ != nullptr) {
    std::fclose(f_);
    f_ = nullptr;
  }
  std::remove(path_.c_str());
}

}  // namespace pqforge
